// kb.cpp - knowledge base construction, validation and (de)serialization

#include "mprec/kb.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "mprec/numfmt.hpp"
#include "mprec/sexpr.hpp"

namespace mprec {

namespace {

std::string at_line(int line) { return line > 0 ? " (line " + std::to_string(line) + ")" : ""; }

}  // namespace

std::string_view to_string(LinkKind kind) {
  switch (kind) {
    case LinkKind::IsaUp: return "isa-up";
    case LinkKind::IsaDown: return "isa-down";
    case LinkKind::RoleUp: return "role-up";
    case LinkKind::RoleDown: return "role-down";
  }
  return "?";
}

LinkKind inverse(LinkKind kind) {
  switch (kind) {
    case LinkKind::IsaUp: return LinkKind::IsaDown;
    case LinkKind::IsaDown: return LinkKind::IsaUp;
    case LinkKind::RoleUp: return LinkKind::RoleDown;
    case LinkKind::RoleDown: return LinkKind::RoleUp;
  }
  return kind;
}

KbError::KbError(const std::string& what, int line) : std::runtime_error(what + at_line(line)), line_(line) {}

const Schema& KnowledgeBase::schema(SchemaId id) const {
  if (id.index >= schemas_.size()) throw KbError("unknown schema id " + std::to_string(id.index));
  return schemas_[id.index];
}

std::optional<SchemaId> KnowledgeBase::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return SchemaId{it->second};
}

SchemaId KnowledgeBase::id(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw KbError("unknown schema '" + std::string(name) + "'");
}

const std::string& KnowledgeBase::slot_name(SlotId id) const {
  if (id.index >= slot_names_.size()) throw KbError("unknown slot id " + std::to_string(id.index));
  return slot_names_[id.index];
}

std::optional<SlotId> KnowledgeBase::find_slot(std::string_view name) const {
  auto it = slot_by_name_.find(std::string(name));
  if (it == slot_by_name_.end()) return std::nullopt;
  return SlotId{it->second};
}

bool KnowledgeBase::isa_star(SchemaId specific, SchemaId general) const {
  std::optional<SchemaId> cur = schema(specific).parent;
  schema(general);
  while (cur) {
    if (*cur == general) return true;
    cur = schemas_[cur->index].parent;
  }
  return false;
}

const std::vector<Link>& KnowledgeBase::neighbors(SchemaId id) const {
  schema(id);
  return adjacency_[id.index];
}

std::optional<SchemaId> KnowledgeBase::filler_of(SchemaId owner, SlotId slot) const {
  for (const Slot& s : schema(owner).slots) {
    if (s.name == slot) return s.filler;
  }
  return std::nullopt;
}

bool KnowledgeBase::has_link(const Link& link) const {
  if (link.from.index >= size() || link.to.index >= size()) return false;
  if (is_isa(link.kind)) {
    auto parent = schemas_[link.specific().index].parent;
    return parent && *parent == link.general();
  }
  auto filler = filler_of(link.filled(), link.slot);
  return filler && *filler == link.filler();
}

std::vector<SchemaId> KnowledgeBase::all() const {
  std::vector<SchemaId> ids;
  ids.reserve(size());
  for (std::uint32_t i = 0; i < size(); ++i) ids.push_back(SchemaId{i});
  return ids;
}

bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
  if (a.eq_prior_ != b.eq_prior_ || a.size() != b.size()) return false;
  // by name, so declaration order does not matter
  auto roles = [](const KnowledgeBase& kb, const Schema& s) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const Slot& slot : s.slots) out.emplace_back(kb.slot_name(slot.name), kb.name(slot.filler));
    std::sort(out.begin(), out.end());
    return out;
  };
  for (const Schema& x : a.schemas_) {
    auto other = b.find(x.name);
    if (!other) return false;
    const Schema& y = b.schema(*other);
    if (x.prior != y.prior || x.parent.has_value() != y.parent.has_value()) return false;
    if (x.parent && a.name(*x.parent) != b.name(*y.parent)) return false;
    if (roles(a, x) != roles(b, y)) return false;
  }
  return true;
}

KbBuilder& KbBuilder::eq_prior(double p, int line) {
  eq_prior_ = p;
  eq_prior_line_ = line;
  ++eq_prior_count_;
  return *this;
}

KbBuilder& KbBuilder::schema(std::string name, std::optional<std::string> parent, double prior, int line) {
  schemas_.push_back({std::move(name), std::move(parent), prior, line});
  return *this;
}

KbBuilder& KbBuilder::role(std::string filled, std::string slot, std::string filler, int line) {
  roles_.push_back({std::move(filled), std::move(slot), std::move(filler), line});
  return *this;
}

KnowledgeBase KbBuilder::build() const {
  KnowledgeBase kb;
  if (!eq_prior_) throw KbError("missing eq-prior");
  if (eq_prior_count_ > 1) throw KbError("eq-prior given more than once", eq_prior_line_);
  if (!(*eq_prior_ > 0.0 && *eq_prior_ < 1.0)) throw KbError("eq-prior must lie in (0,1)", eq_prior_line_);
  kb.eq_prior_ = *eq_prior_;

  for (const SchemaDecl& d : schemas_) {
    if (!is_name(d.name)) throw KbError("invalid schema name '" + d.name + "'", d.line);
    if (!(d.prior > 0.0 && d.prior <= 1.0)) {
      throw KbError("prior of '" + d.name + "' out of range (0,1]", d.line);
    }
    auto [it, fresh] = kb.by_name_.emplace(d.name, static_cast<std::uint32_t>(kb.schemas_.size()));
    if (!fresh) throw KbError("duplicate schema '" + d.name + "'", d.line);
    Schema s;
    s.name = d.name;
    s.prior = d.prior;
    kb.schemas_.push_back(std::move(s));
  }

  for (std::size_t i = 0; i < schemas_.size(); ++i) {
    const SchemaDecl& d = schemas_[i];
    if (!d.parent) continue;
    auto parent = kb.find(*d.parent);
    if (!parent) throw KbError("unknown parent '" + *d.parent + "' of '" + d.name + "'", d.line);
    kb.schemas_[i].parent = *parent;
    kb.schemas_[parent->index].children.push_back(SchemaId{static_cast<std::uint32_t>(i)});
  }

  // Parent pointers form a forest iff walking up from any node terminates.
  for (std::size_t i = 0; i < kb.size(); ++i) {
    std::optional<SchemaId> cur = kb.schemas_[i].parent;
    std::size_t steps = 0;
    while (cur) {
      if (cur->index == i || ++steps > kb.size()) {
        throw KbError("isa cycle through '" + kb.schemas_[i].name + "'", schemas_[i].line);
      }
      cur = kb.schemas_[cur->index].parent;
    }
  }

  for (std::size_t i = 0; i < kb.size(); ++i) {
    const Schema& s = kb.schemas_[i];
    double sum = 0.0;
    for (SchemaId c : s.children) {
      const Schema& child = kb.schemas_[c.index];
      if (child.prior > s.prior) {
        throw KbError("prior of '" + child.name + "' exceeds prior of its parent '" + s.name + "'",
                      schemas_[c.index].line);
      }
      sum += child.prior;
    }
    if (sum > s.prior * (1.0 + 1e-12)) {
      throw KbError("priors of the children of '" + s.name + "' sum to more than its prior", schemas_[i].line);
    }
  }

  for (const RoleDecl& r : roles_) {
    auto filled = kb.find(r.filled);
    if (!filled) throw KbError("role names unknown schema '" + r.filled + "'", r.line);
    auto filler = kb.find(r.filler);
    if (!filler) throw KbError("role names unknown schema '" + r.filler + "'", r.line);
    if (!is_name(r.slot)) throw KbError("invalid slot name '" + r.slot + "'", r.line);
    auto [it, fresh] = kb.slot_by_name_.emplace(r.slot, static_cast<std::uint32_t>(kb.slot_names_.size()));
    if (fresh) kb.slot_names_.push_back(r.slot);
    SlotId slot{it->second};
    Schema& owner = kb.schemas_[filled->index];
    for (const Slot& existing : owner.slots) {
      if (existing.name == slot) throw KbError("duplicate slot '" + r.slot + "' on '" + owner.name + "'", r.line);
    }
    owner.slots.push_back(Slot{slot, *filler});
  }

  kb.adjacency_.assign(kb.size(), {});
  for (std::uint32_t i = 0; i < kb.size(); ++i) {
    SchemaId s{i};
    const Schema& sc = kb.schemas_[i];
    if (sc.parent) {
      kb.adjacency_[i].push_back(Link{LinkKind::IsaUp, s, *sc.parent, {}});
      kb.adjacency_[sc.parent->index].push_back(Link{LinkKind::IsaDown, *sc.parent, s, {}});
    }
    for (const Slot& slot : sc.slots) {
      kb.adjacency_[i].push_back(Link{LinkKind::RoleDown, s, slot.filler, slot.name});
      kb.adjacency_[slot.filler.index].push_back(Link{LinkKind::RoleUp, slot.filler, s, slot.name});
    }
  }
  for (auto& links : kb.adjacency_) {
    std::sort(links.begin(), links.end(), [&kb](const Link& a, const Link& b) {
      const std::string& an = kb.schemas_[a.to.index].name;
      const std::string& bn = kb.schemas_[b.to.index].name;
      if (an != bn) return an < bn;
      if (a.kind != b.kind) return a.kind < b.kind;
      if (is_isa(a.kind)) return false;
      return kb.slot_names_[a.slot.index] < kb.slot_names_[b.slot.index];
    });
  }
  return kb;
}

KnowledgeBase load_kb(std::string_view text) {
  KbBuilder builder;
  for (const SExpr& form : read_forms(text)) {
    std::string_view head = form.head();
    auto expect_name = [](const SExpr& e) -> std::string {
      if (!e.is_atom || !is_name(e.atom)) throw ParseError(e.pos, "expected a name");
      return e.atom;
    };
    if (head == "eq-prior") {
      if (form.items.size() != 2) throw ParseError(form.pos, "eq-prior takes one probability");
      builder.eq_prior(parse_real(form.items[1]), form.pos.line);
    } else if (head == "schema") {
      if (form.items.size() < 2) throw ParseError(form.pos, "schema needs a name");
      std::string name = expect_name(form.items[1]);
      std::optional<std::string> parent;
      std::optional<double> prior;
      for (std::size_t k = 2; k < form.items.size(); k += 2) {
        const SExpr& key = form.items[k];
        if (!key.is_atom || k + 1 >= form.items.size()) throw ParseError(key.pos, "expected ':isa NAME' or ':prior FLOAT'");
        if (key.atom == ":isa" && !parent) {
          parent = expect_name(form.items[k + 1]);
        } else if (key.atom == ":prior" && !prior) {
          prior = parse_real(form.items[k + 1]);
        } else {
          throw ParseError(key.pos, "unexpected keyword '" + key.atom + "'");
        }
      }
      if (!prior) throw ParseError(form.pos, "schema '" + name + "' lacks :prior");
      builder.schema(name, parent, *prior, form.pos.line);
    } else if (head == "role") {
      if (form.items.size() != 4) throw ParseError(form.pos, "role takes FILLED SLOT FILLER");
      builder.role(expect_name(form.items[1]), expect_name(form.items[2]), expect_name(form.items[3]), form.pos.line);
    } else {
      throw ParseError(form.pos, "unknown form '" + std::string(head) + "'");
    }
  }
  return builder.build();
}

std::string render_kb(const KnowledgeBase& kb) {
  std::ostringstream out;
  out << "(eq-prior " << format_number(kb.eq_prior()) << ")\n";
  for (SchemaId id : kb.all()) {
    const Schema& s = kb.schema(id);
    out << "(schema " << s.name;
    if (s.parent) out << " :isa " << kb.name(*s.parent);
    out << " :prior " << format_number(s.prior) << ")\n";
  }
  for (SchemaId id : kb.all()) {
    for (const Slot& slot : kb.schema(id).slots) {
      out << "(role " << kb.name(id) << ' ' << kb.slot_name(slot.name) << ' ' << kb.name(slot.filler) << ")\n";
    }
  }
  return out.str();
}

}  // namespace mprec
