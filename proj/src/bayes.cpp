// bayes.cpp - vertebrate network construction and exact evaluation

#include "mprec/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mprec/numfmt.hpp"

namespace mprec {

VertebrateNetwork build_network(const KnowledgeBase& kb, const Path& path, const StatementSet& rs) {
  std::vector<Link> roles;
  for (const Link& l : path.links) {
    if (is_role(l.kind)) roles.push_back(l);
  }
  std::vector<SlotEq> eqs = rs.eqs();
  if (roles.empty() || eqs.size() != roles.size()) {
    throw NetworkError("statement set does not match the path's role links");
  }

  VertebrateNetwork net;
  auto add_inst = [&](const std::string& name, bool observed) {
    SchemaId rt = relevant_type(name, rs, kb);
    net.insts.push_back(InstNode{name, rt, kb.prior(rt), observed});
  };
  add_inst(path.start.instance, true);
  for (std::size_t j = 0; j < roles.size(); ++j) {
    const SlotEq& eq = eqs[j];
    const std::string prev = net.insts.back().instance;
    std::optional<std::string> next;
    if (eq.owner == prev) next = eq.filler;
    else if (eq.filler == prev) next = eq.owner;
    if (!next || eq.slot != roles[j].slot) throw NetworkError("slot equalities are not in path order");
    bool last = j + 1 == roles.size();
    if (last && *next != path.end.instance) throw NetworkError("last role does not land on the end observation");
    add_inst(*next, last);
    int a = static_cast<int>(j);
    int b = static_cast<int>(j + 1);
    net.eqs.push_back(eq.owner == prev ? EqNode{a, eq.slot, b, roles[j].filler()} : EqNode{b, eq.slot, a, roles[j].filler()});
  }
  net.evidence[0] = EvidenceNode{0, path.start.belief, path.start.schema};
  net.evidence[1] = EvidenceNode{static_cast<int>(net.insts.size() - 1), path.end.belief, path.end.schema};

  // Base spine for the first role, then one extension per further role: the end
  // evidence moves from the previous last inst node to the new one.
  const int e_start = net.evidence_index(0);
  const int e_end = net.evidence_index(1);
  std::vector<std::pair<int, int>> edges{{0, e_start}, {1, e_end}, {0, net.eq_index(0)}, {1, net.eq_index(0)}};
  for (std::size_t j = 1; j < net.eqs.size(); ++j) {
    int prev = static_cast<int>(j);
    int cur = static_cast<int>(j + 1);
    std::erase(edges, std::pair<int, int>{prev, e_end});
    edges.insert(edges.end(), {{prev, cur}, {cur, e_end}, {prev, net.eq_index(j)}, {cur, net.eq_index(j)}});
  }
  for (std::size_t j = 0; j < net.eqs.size(); ++j) edges.emplace_back(net.eq_index(j), net.interior_index());
  std::sort(edges.begin(), edges.end());
  net.edges = std::move(edges);
  return net;
}

Cpts default_cpts(const KnowledgeBase& kb, const VertebrateNetwork& net, double gamma1, double gamma0) {
  if (!(gamma1 > 0.0 && gamma1 <= 1.0 && gamma0 > 0.0 && gamma0 <= 1.0)) {
    throw CptError("interior strengths must lie in (0,1]");
  }
  Cpts c;
  for (const InstNode& n : net.insts) c.inst_true.push_back(n.prior);
  for (const EqNode& e : net.eqs) {
    double p = kb.eq_prior() / kb.prior(e.filler_type);
    if (p > 1.0) throw CptError("p(==) exceeds the prior of '" + kb.name(e.filler_type) + "'");
    c.eq_true.push_back(p);
  }
  for (std::size_t end = 0; end < 2; ++end) {
    const EvidenceNode& ev = net.evidence[end];
    const InstNode& node = net.insts[ev.inst];
    double q = node.prior;
    double b = ev.belief * q / kb.prior(ev.observed_type);
    if (q >= 1.0) {
      if (b < 1.0) throw CptError("belief below 1 for an instance whose type has prior 1");
      c.evidence[end] = {1.0, 0.0};
      continue;
    }
    double on = b / q;
    double off = (1.0 - b) / (1.0 - q);
    double scale = 1.0 / std::max(on, off);
    c.evidence[end] = {on * scale, off * scale};
  }
  c.interior_all_true = gamma1;
  c.interior_otherwise = gamma0;
  return c;
}

BinaryNetwork to_binary_network(const VertebrateNetwork& net, const Cpts& cpts) {
  BinaryNetwork bn;
  bn.nodes.resize(net.node_count());
  for (const auto& [from, to] : net.edges) bn.nodes[to].parents.push_back(from);

  for (std::size_t i = 0; i < net.insts.size(); ++i) {
    BinaryNode& n = bn.nodes[i];
    n.p_true.assign(std::size_t{1} << n.parents.size(), cpts.inst_true[i]);
  }
  for (std::size_t j = 0; j < net.eqs.size(); ++j) {
    BinaryNode& n = bn.nodes[net.eq_index(j)];
    n.p_true.assign(std::size_t{1} << n.parents.size(), 0.0);
    n.p_true.back() = cpts.eq_true[j];
  }
  for (std::size_t end = 0; end < 2; ++end) {
    BinaryNode& n = bn.nodes[net.evidence_index(end)];
    n.p_true = {cpts.evidence[end].second, cpts.evidence[end].first};
  }
  BinaryNode& interior = bn.nodes[net.interior_index()];
  interior.p_true.assign(std::size_t{1} << interior.parents.size(), cpts.interior_otherwise);
  interior.p_true.back() = cpts.interior_all_true;
  return bn;
}

Posterior exact_posterior(const KnowledgeBase& kb, const VertebrateNetwork& net, const Cpts& cpts, Exec exec) {
  if (net.hidden_count() > static_cast<std::size_t>(kMaxHiddenNodes)) {
    throw EvaluationTooLarge("network has " + std::to_string(net.hidden_count()) + " non-evidence nodes");
  }
  BinaryNetwork bn = to_binary_network(net, cpts);
  Assignment fixed(net.node_count(), -1);
  fixed[net.evidence_index(0)] = 1;
  fixed[net.evidence_index(1)] = 1;
  fixed[net.interior_index()] = 1;
  const int leaf = net.interior_index();
  EnumerationSums sums = exec == Exec::Serial ? enumerate_serial(bn, fixed, leaf) : enumerate_parallel(bn, fixed, leaf);

  Assignment all_true(net.node_count(), 1);
  double top = joint_probability(bn, all_true);

  Posterior post;
  post.joint = top / sums.with_leaf;
  post.interior_given_ends = sums.with_leaf / sums.without_leaf;
  post.residual = std::pow(kb.eq_prior(), static_cast<double>(net.eqs.size())) * cpts.interior_all_true /
                  post.interior_given_ends;
  return post;
}

namespace {

bool corroborated(const KnowledgeBase& kb, const EvidenceRegistry& registry, SchemaId type, const std::string* slot) {
  for (const auto& [schema, record_slot] : registry.records) {
    if (slot && record_slot != *slot) continue;
    if (schema == type || kb.isa_star(type, schema)) return true;
  }
  return false;
}

}  // namespace

bool evidence_filter(const KnowledgeBase& kb, const StatementSet& rs, const EvidenceRegistry& registry) {
  for (const Statement& s : rs.statements) {
    if (const auto* inst = std::get_if<Inst>(&s)) {
      if (registry.observed.count(inst->instance)) continue;
      if (!corroborated(kb, registry, inst->schema, nullptr)) return false;
    } else {
      const auto& eq = std::get<SlotEq>(s);
      SchemaId owner_type = relevant_type(eq.owner, rs, kb);
      if (!corroborated(kb, registry, owner_type, &kb.slot_name(eq.slot))) return false;
    }
  }
  return true;
}

double plan_prior(const VertebrateNetwork& net) {
  double p = 1.0;
  for (const InstNode& n : net.insts) {
    if (!n.observed) p *= n.prior;
  }
  return p;
}

bool approve(const VertebrateNetwork& net, double posterior, double ratio) {
  return posterior >= ratio * plan_prior(net);
}

std::string render_network(const KnowledgeBase& kb, const VertebrateNetwork& net, const Cpts& cpts) {
  std::vector<std::string> ids;
  for (const InstNode& n : net.insts) ids.push_back(n.instance);
  for (std::size_t j = 0; j < net.eqs.size(); ++j) ids.push_back("eq" + std::to_string(j + 1));
  ids.push_back("e1");
  ids.push_back("e2");
  ids.push_back("EI");

  std::ostringstream out;
  for (std::size_t i = 0; i < net.insts.size(); ++i) {
    out << "node " << ids[i] << " kind=inst type=" << kb.name(net.insts[i].type)
        << " prior=" << format_number(cpts.inst_true[i]) << '\n';
  }
  for (std::size_t j = 0; j < net.eqs.size(); ++j) {
    out << "node " << ids[net.eq_index(j)] << " kind=eq type=- prior=" << format_number(cpts.eq_true[j]) << '\n';
  }
  for (std::size_t end = 0; end < 2; ++end) {
    out << "node " << ids[net.evidence_index(end)] << " kind=ev type=- prior=" << format_number(net.evidence[end].belief)
        << '\n';
  }
  out << "node EI kind=interior type=- prior=" << format_number(cpts.interior_all_true) << '\n';
  for (const auto& [from, to] : net.edges) out << "edge " << ids[from] << ' ' << ids[to] << '\n';
  return out.str();
}

}  // namespace mprec
