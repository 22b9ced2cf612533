// bayes.hpp - the vertebrate Bayesian network induced by a path, its conditional
// probability tables, exact evaluation, the evidence filter and approval

#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mprec/enumerate.hpp"
#include "mprec/kb.hpp"
#include "mprec/path.hpp"
#include "mprec/semantics.hpp"

namespace mprec {

struct InstNode {
  std::string instance;
  SchemaId type;  // relevant type
  double prior = 0.0;
  bool observed = false;
};

/// Slot-equality node; `owner` and `filler` index into insts.
struct EqNode {
  int owner = 0;
  SlotId slot;
  int filler = 0;
  SchemaId filler_type;  // type the KB declares for the slot
};

struct EvidenceNode {
  int inst = 0;
  double belief = 1.0;
  SchemaId observed_type;
};

/// Spine (inst chain, equality nodes, one evidence node per end) plus the single
/// interior evidence node fed by every equality node.
///
/// Node numbering used by edges and by to_binary_network(): insts first, then
/// eqs, then the two end evidence nodes, then the interior node.
struct VertebrateNetwork {
  std::vector<InstNode> insts;
  std::vector<EqNode> eqs;
  std::array<EvidenceNode, 2> evidence;
  std::vector<std::pair<int, int>> edges;

  int eq_index(std::size_t j) const { return static_cast<int>(insts.size() + j); }
  int evidence_index(std::size_t end) const { return static_cast<int>(insts.size() + eqs.size() + end); }
  int interior_index() const { return static_cast<int>(insts.size() + eqs.size() + 2); }
  std::size_t node_count() const { return insts.size() + eqs.size() + 3; }
  std::size_t hidden_count() const { return insts.size() + eqs.size(); }
};

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `rs` must be relevant_statements(path) under the same fresh-name scheme.
VertebrateNetwork build_network(const KnowledgeBase& kb, const Path& path, const StatementSet& rs);

struct Cpts {
  std::vector<double> inst_true;                          // P(inst = 1), parent independent
  std::vector<double> eq_true;                            // P(= 1 | both parents 1); 0 otherwise
  std::array<std::pair<double, double>, 2> evidence{};    // P(e = 1 | inst = 1), P(e = 1 | inst = 0)
  double interior_all_true = 1.0;                         // P(E^I = 1 | every eq = 1)
  double interior_otherwise = 1.0;                        // P(E^I = 1 | some eq = 0)
};

class CptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inst nodes carry their relevant-type prior; an equality node for a slot with
/// declared filler type f is true with p(==)/p(f) when both instances exist. An end
/// evidence node is a virtual-evidence pair giving its inst node the posterior
/// belief * p(RT)/p(observed type) (the belief itself when RT is the observed type).
Cpts default_cpts(const KnowledgeBase& kb, const VertebrateNetwork& net, double gamma1, double gamma0);

BinaryNetwork to_binary_network(const VertebrateNetwork& net, const Cpts& cpts);

struct Posterior {
  double joint = 0.0;              // P(all inst and eq nodes true | e1, e2, E^I)
  double residual = 0.0;           // p(==)^k * P(E^I | all eqs) / P(E^I | e1, e2)
  double interior_given_ends = 0.0;  // P(E^I | e1, e2)
};

enum class Exec { Serial, Parallel };

class EvaluationTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

Posterior exact_posterior(const KnowledgeBase& kb, const VertebrateNetwork& net, const Cpts& cpts,
                          Exec exec = Exec::Parallel);

struct EvidenceRegistry {
  std::set<std::pair<SchemaId, std::string>> records;  // (schema, slot) corroborations
  std::set<std::string> observed;

  void corroborate(SchemaId schema, std::string slot) { records.emplace(schema, std::move(slot)); }
};

/// Every inst is observed or corroborated at its relevant type or an ancestor (any
/// slot); every slot equality is corroborated for that slot at the owner's relevant
/// type or an ancestor.
bool evidence_filter(const KnowledgeBase& kb, const StatementSet& rs, const EvidenceRegistry& registry);

/// Product of relevant-type priors over the unobserved inst nodes (1 when there are none).
double plan_prior(const VertebrateNetwork& net);

/// posterior >= ratio * plan_prior(net); the boundary counts as approved.
bool approve(const VertebrateNetwork& net, double posterior, double ratio);

/// "node <id> kind=<inst|eq|ev|interior> type=<schema|-> prior=<float>" lines, then
/// "edge <from> <to>" lines. prior is P(true) for inst nodes, P(true | both parents)
/// for eq nodes, the belief for end evidence and P(E^I | all eqs) for the interior.
std::string render_network(const KnowledgeBase& kb, const VertebrateNetwork& net, const Cpts& cpts);

}  // namespace mprec
