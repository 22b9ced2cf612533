// sexpr.cpp - tokenizer and reader for s-expression forms

#include "mprec/sexpr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace mprec {

namespace {

std::string format_pos(SourcePos pos, const std::string& what) {
  return "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + what;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> forms;
    skip_space();
    while (i_ < text_.size()) {
      if (text_[i_] != '(') {
        throw ParseError(pos_, "expected '(' at top level");
      }
      forms.push_back(read_list());
      skip_space();
    }
    return forms;
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == ';') {
        while (i_ < text_.size() && text_[i_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  SExpr read_list() {
    SExpr list;
    list.pos = pos_;
    advance();  // '('
    for (;;) {
      skip_space();
      if (i_ >= text_.size()) throw ParseError(list.pos, "unterminated form");
      char c = text_[i_];
      if (c == ')') {
        advance();
        return list;
      }
      if (c == '(') {
        list.items.push_back(read_list());
      } else {
        list.items.push_back(read_atom());
      }
    }
  }

  SExpr read_atom() {
    SExpr a;
    a.is_atom = true;
    a.pos = pos_;
    while (i_ < text_.size()) {
      char c = text_[i_];
      if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c))) break;
      a.atom.push_back(c);
      advance();
    }
    return a;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

}  // namespace

ParseError::ParseError(SourcePos pos, const std::string& what)
    : std::runtime_error(format_pos(pos, what)), pos_(pos) {}

std::string_view SExpr::head() const {
  if (is_atom || items.empty() || !items.front().is_atom) return {};
  return items.front().atom;
}

std::vector<SExpr> read_forms(std::string_view text) { return Reader(text).read_all(); }

bool is_name(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  }
  return true;
}

double parse_real(const SExpr& atom) {
  if (!atom.is_atom) throw ParseError(atom.pos, "expected a number");
  const std::string& s = atom.atom;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError(atom.pos, "malformed number '" + s + "'");
  }
  return v;
}

double parse_probability(const SExpr& atom, bool allow_one) {
  double v = parse_real(atom);
  if (!(v > 0.0) || v > 1.0 || (!allow_one && v == 1.0)) {
    throw ParseError(atom.pos, "probability out of range: " + atom.atom);
  }
  return v;
}

}  // namespace mprec
