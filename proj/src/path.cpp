// path.cpp - path grammar, reversal and canonical syntax

#include "mprec/path.hpp"

#include <algorithm>

#include "mprec/numfmt.hpp"
#include "mprec/sexpr.hpp"

namespace mprec {

std::optional<ValidityState> step(ValidityState state, LinkKind kind) {
  ValidityState next = state;
  switch (kind) {
    case LinkKind::IsaDown:
      if (state.last_was_isa_up) return std::nullopt;  // isa-plateau
      break;
    case LinkKind::IsaUp:
      break;
    case LinkKind::RoleUp:
      if (state.phase == Phase::DownPhase) return std::nullopt;  // slot-filler valley
      next.phase = Phase::UpPhase;
      break;
    case LinkKind::RoleDown:
      next.phase = Phase::DownPhase;
      break;
  }
  next.last_was_isa_up = kind == LinkKind::IsaUp;
  return next;
}

bool grammar_accepts(std::span<const LinkKind> kinds) {
  ValidityState state;
  for (LinkKind k : kinds) {
    auto next = step(state, k);
    if (!next) return false;
    state = *next;
  }
  return state.phase != Phase::NoRoleYet;
}

bool grammar_accepts_declarative(std::span<const LinkKind> kinds) {
  bool any_role = std::any_of(kinds.begin(), kinds.end(), is_role);
  if (!any_role) return false;
  for (std::size_t i = 0; i + 1 < kinds.size(); ++i) {
    if (kinds[i] == LinkKind::IsaUp && kinds[i + 1] == LinkKind::IsaDown) return false;
  }
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i] != LinkKind::RoleDown) continue;
    for (std::size_t k = i + 1; k < kinds.size(); ++k) {
      if (kinds[k] == LinkKind::RoleUp) return false;
    }
  }
  return true;
}

bool join_compatible(ValidityState a, ValidityState b) {
  if (a.last_was_isa_up && b.last_was_isa_up) return false;
  if (a.phase == Phase::DownPhase && b.phase == Phase::DownPhase) return false;
  return a.phase != Phase::NoRoleYet || b.phase != Phase::NoRoleYet;
}

void check_chain(const Path& path) {
  SchemaId at = path.start.schema;
  for (std::size_t i = 0; i < path.links.size(); ++i) {
    if (path.links[i].from != at) {
      throw PathStructureError("link " + std::to_string(i + 1) + " does not start where the previous one ended");
    }
    at = path.links[i].to;
  }
  if (at != path.end.schema) throw PathStructureError("last link does not end at the end observation's schema");
}

bool validate(const Path& path) {
  check_chain(path);
  auto kinds = kinds_of(path);
  return grammar_accepts(kinds);
}

std::vector<LinkKind> kinds_of(const Path& path) {
  std::vector<LinkKind> kinds;
  kinds.reserve(path.links.size());
  for (const Link& l : path.links) kinds.push_back(l.kind);
  return kinds;
}

std::vector<SchemaId> schemas_along(const Path& path) {
  std::vector<SchemaId> out{path.start.schema};
  for (const Link& l : path.links) out.push_back(l.to);
  return out;
}

Path reverse(const Path& path) {
  Path r;
  r.start = path.end;
  r.end = path.start;
  r.links.reserve(path.links.size());
  for (auto it = path.links.rbegin(); it != path.links.rend(); ++it) r.links.push_back(it->reversed());
  return r;
}

std::string render_link(const KnowledgeBase& kb, const Link& link) {
  switch (link.kind) {
    case LinkKind::RoleUp:
    case LinkKind::RoleDown:
      return std::string(link.kind == LinkKind::RoleUp ? "(role " : "(role- ") + kb.name(link.filled()) + ' ' +
             kb.slot_name(link.slot) + ' ' + kb.name(link.filler()) + ')';
    case LinkKind::IsaUp:
    case LinkKind::IsaDown:
      return std::string(link.kind == LinkKind::IsaUp ? "(isa " : "(isa- ") + kb.name(link.specific()) + ' ' +
             kb.name(link.general()) + ')';
  }
  return {};
}

namespace {

std::string render_inst(const KnowledgeBase& kb, const Observation& o, bool with_belief) {
  std::string s = "(inst " + o.instance + ' ' + kb.name(o.schema);
  if (with_belief) s += " :belief " + format_number(o.belief);
  return s + ')';
}

Observation parse_inst(const KnowledgeBase& kb, const SExpr& form) {
  if (form.head() != "inst") throw ParseError(form.pos, "expected an (inst ID SCHEMA) form");
  if (form.items.size() != 3 && form.items.size() != 5) throw ParseError(form.pos, "inst takes ID SCHEMA [:belief FLOAT]");
  for (std::size_t k = 1; k < 3; ++k) {
    if (!form.items[k].is_atom || !is_name(form.items[k].atom)) throw ParseError(form.items[k].pos, "expected a name");
  }
  Observation o;
  o.instance = form.items[1].atom;
  auto schema = kb.find(form.items[2].atom);
  if (!schema) throw ParseError(form.items[2].pos, "unknown schema '" + form.items[2].atom + "'");
  o.schema = *schema;
  if (form.items.size() == 5) {
    if (!form.items[3].is_atom || form.items[3].atom != ":belief") throw ParseError(form.items[3].pos, "expected :belief");
    o.belief = parse_probability(form.items[4]);
  }
  return o;
}

SchemaId parse_schema_ref(const KnowledgeBase& kb, const SExpr& e) {
  if (!e.is_atom) throw ParseError(e.pos, "expected a schema name");
  auto s = kb.find(e.atom);
  if (!s) throw ParseError(e.pos, "unknown schema '" + e.atom + "'");
  return *s;
}

Link parse_link(const KnowledgeBase& kb, const SExpr& form) {
  std::string_view head = form.head();
  Link link;
  if (head == "role" || head == "role-") {
    if (form.items.size() != 4) throw ParseError(form.pos, "role takes FILLED SLOT FILLER");
    SchemaId filled = parse_schema_ref(kb, form.items[1]);
    const SExpr& slot_atom = form.items[2];
    if (!slot_atom.is_atom) throw ParseError(slot_atom.pos, "expected a slot name");
    auto slot = kb.find_slot(slot_atom.atom);
    if (!slot) throw ParseError(slot_atom.pos, "unknown slot '" + slot_atom.atom + "'");
    SchemaId filler = parse_schema_ref(kb, form.items[3]);
    link = head == "role" ? Link{LinkKind::RoleUp, filler, filled, *slot} : Link{LinkKind::RoleDown, filled, filler, *slot};
  } else if (head == "isa" || head == "isa-") {
    if (form.items.size() != 3) throw ParseError(form.pos, "isa takes SPECIFIC GENERAL");
    SchemaId specific = parse_schema_ref(kb, form.items[1]);
    SchemaId general = parse_schema_ref(kb, form.items[2]);
    link = head == "isa" ? Link{LinkKind::IsaUp, specific, general, {}} : Link{LinkKind::IsaDown, general, specific, {}};
  } else {
    throw ParseError(form.pos, "expected a role, role-, isa or isa- form");
  }
  if (!kb.has_link(link)) throw ParseError(form.pos, "link is not in the knowledge base");
  return link;
}

}  // namespace

std::string render_path(const KnowledgeBase& kb, const Path& path, bool with_beliefs) {
  std::string out = render_inst(kb, path.start, with_beliefs);
  for (const Link& l : path.links) out += render_link(kb, l);
  out += render_inst(kb, path.end, with_beliefs);
  return out;
}

Path parse_path(const KnowledgeBase& kb, std::string_view text) {
  auto forms = read_forms(text);
  if (forms.size() < 3) {
    throw ParseError(forms.empty() ? SourcePos{} : forms.back().pos, "a path needs two inst forms and at least one link");
  }
  Path path;
  path.start = parse_inst(kb, forms.front());
  path.end = parse_inst(kb, forms.back());
  SchemaId at = path.start.schema;
  for (std::size_t i = 1; i + 1 < forms.size(); ++i) {
    Link l = parse_link(kb, forms[i]);
    if (l.from != at) throw ParseError(forms[i].pos, "link does not continue from '" + kb.name(at) + "'");
    at = l.to;
    path.links.push_back(l);
  }
  if (at != path.end.schema) throw ParseError(forms.back().pos, "end instance is not at the path's last schema");
  return path;
}

}  // namespace mprec
