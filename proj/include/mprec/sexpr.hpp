// sexpr.hpp - minimal s-expression reader shared by the KB, path and stream formats

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mprec {

struct SourcePos {
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& what);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

struct SExpr {
  bool is_atom = false;
  std::string atom;
  std::vector<SExpr> items;
  SourcePos pos;

  bool is_list() const { return !is_atom; }
  // Head atom of a list form, or "" when the list is empty or starts with a list.
  std::string_view head() const;
};

/// Reads every top-level form in `text`. ';' starts a comment running to end of line.
/// Bare atoms at top level are rejected.
std::vector<SExpr> read_forms(std::string_view text);

bool is_name(std::string_view s);

/// Parses a probability literal in (0,1]. Throws ParseError at `pos` otherwise.
double parse_probability(const SExpr& atom, bool allow_one = true);

double parse_real(const SExpr& atom);

}  // namespace mprec
