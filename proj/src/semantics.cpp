// semantics.cpp - translation of paths into inst and slot-equality statements

#include "mprec/semantics.hpp"

#include <algorithm>

namespace mprec {

std::vector<Inst> StatementSet::insts() const {
  std::vector<Inst> out;
  for (const auto& s : statements) {
    if (auto* i = std::get_if<Inst>(&s)) out.push_back(*i);
  }
  return out;
}

std::vector<SlotEq> StatementSet::eqs() const {
  std::vector<SlotEq> out;
  for (const auto& s : statements) {
    if (auto* e = std::get_if<SlotEq>(&s)) out.push_back(*e);
  }
  return out;
}

bool StatementSet::contains(const Statement& s) const {
  return std::find(statements.begin(), statements.end(), s) != statements.end();
}

void StatementSet::add(Statement s) {
  if (!contains(s)) statements.push_back(std::move(s));
}

std::vector<std::string> StatementSet::instances() const {
  std::vector<std::string> out;
  auto note = [&out](const std::string& name) {
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  };
  for (const auto& s : statements) {
    if (auto* i = std::get_if<Inst>(&s)) {
      note(i->instance);
    } else {
      const auto& e = std::get<SlotEq>(s);
      note(e.owner);
      note(e.filler);
    }
  }
  return out;
}

std::vector<std::string> relevant_instance_trace(const Path& path, const FreshNames& names) {
  std::size_t total_roles = std::count_if(path.links.begin(), path.links.end(), [](const Link& l) { return is_role(l.kind); });
  std::vector<std::string> trace{path.start.instance};
  std::size_t roles_seen = 0;
  for (const Link& l : path.links) {
    if (is_isa(l.kind)) {
      trace.push_back(trace.back());
      continue;
    }
    ++roles_seen;
    // The last role lands on the end observation; trailing isa links carry it.
    trace.push_back(roles_seen == total_roles ? path.end.instance : names.make(roles_seen));
  }
  return trace;
}

StatementSet statements_of(const Path& path, const FreshNames& names) {
  auto trace = relevant_instance_trace(path, names);
  StatementSet set;
  set.add(Inst{path.start.instance, path.start.schema});
  for (std::size_t k = 0; k < path.links.size(); ++k) {
    const Link& l = path.links[k];
    const std::string& prev = trace[k];
    const std::string& cur = trace[k + 1];
    switch (l.kind) {
      case LinkKind::IsaUp:
      case LinkKind::IsaDown:
        set.add(Inst{prev, l.to});
        break;
      case LinkKind::RoleUp:
        set.add(SlotEq{cur, l.slot, prev});
        set.add(Inst{cur, l.to});
        break;
      case LinkKind::RoleDown:
        set.add(SlotEq{prev, l.slot, cur});
        set.add(Inst{cur, l.to});
        break;
    }
    if (is_role(l.kind) && cur != path.end.instance) {
      if (std::find(set.fresh.begin(), set.fresh.end(), cur) == set.fresh.end()) set.fresh.push_back(cur);
    }
  }
  set.add(Inst{path.end.instance, path.end.schema});
  return set;
}

SchemaId relevant_type(const std::string& instance, const StatementSet& set, const KnowledgeBase& kb) {
  std::vector<SchemaId> types;
  for (const auto& s : set.statements) {
    if (auto* i = std::get_if<Inst>(&s); i && i->instance == instance) types.push_back(i->schema);
  }
  if (types.empty()) throw SemanticsError("no inst statement for '" + instance + "'");
  for (SchemaId t : types) {
    bool most_specific = std::all_of(types.begin(), types.end(), [&](SchemaId other) {
      return other == t || kb.isa_star(t, other);
    });
    if (most_specific) return t;
  }
  throw SemanticsError("types of '" + instance + "' do not lie on one isa chain");
}

StatementSet relevant_statements(const StatementSet& set, const KnowledgeBase& kb) {
  StatementSet out;
  out.fresh = set.fresh;
  for (const auto& s : set.statements) {
    if (auto* i = std::get_if<Inst>(&s)) {
      if (relevant_type(i->instance, set, kb) != i->schema) continue;
    }
    out.statements.push_back(s);
  }
  return out;
}

StatementSet relevant_statements(const Path& path, const KnowledgeBase& kb, const FreshNames& names) {
  return relevant_statements(statements_of(path, names), kb);
}

std::string render_statement(const KnowledgeBase& kb, const Statement& s) {
  if (auto* i = std::get_if<Inst>(&s)) return "(inst " + i->instance + ' ' + kb.name(i->schema) + ')';
  const auto& e = std::get<SlotEq>(s);
  return "(= (" + kb.slot_name(e.slot) + ' ' + e.owner + ") " + e.filler + ')';
}

std::string render_statements(const KnowledgeBase& kb, const StatementSet& set, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < set.statements.size(); ++k) {
    if (k) out += sep;
    out += render_statement(kb, set.statements[k]);
  }
  return out;
}

}  // namespace mprec
