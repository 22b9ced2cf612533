// marker.hpp - breadth-first marker passing with automaton-constrained moves and
// spinal-contribution cutoff

#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mprec/kb.hpp"
#include "mprec/path.hpp"
#include "mprec/scoring.hpp"

namespace mprec {

enum class Retention : std::uint8_t {
  BestPerState,  // one mark per (origin, schema, automaton state): the highest-scoring one
  AllTrails,     // no deduplication; every automaton-legal trail is kept (diagnostics, oracle checks)
};

struct EngineConfig {
  double half_threshold = 30.0;   // T: marks scoring below are not placed
  double full_threshold = 900.0;  // glued paths scoring below are not emitted
  int max_depth = 10;             // bound on links per emitted path, hence per half
  double approval_ratio = 1000.0;
  Retention retention = Retention::BestPerState;
};

struct EmittedPath {
  Path path;
  Score score;  // combine() of the two halves at the collision schema
};

class MarkerEngine {
 public:
  MarkerEngine(const KnowledgeBase& kb, EngineConfig config);

  /// Places a depth-0 mark for `obs`. Seeding an identical observation twice is a
  /// no-op; reusing an instance name with another schema or belief throws.
  void seed(const Observation& obs);

  /// Runs the mark queue to exhaustion and returns the paths emitted since the
  /// previous call (including collisions found while seeding), in discovery order.
  std::vector<EmittedPath> spread();

  const std::vector<Observation>& origins() const { return origins_; }
  std::size_t marks_placed() const { return marks_.size(); }
  const EngineConfig& config() const { return config_; }

 private:
  struct Mark {
    std::uint32_t origin;
    SchemaId at;
    ValidityState dfa;
    HalfScore score;
    std::int64_t parent;  // index into marks_, -1 for a seed
    Link via;             // link from parent's schema to `at`
    int depth;
  };

  void place(Mark m);
  void collide(std::uint32_t fresh);
  std::vector<Link> trail(std::uint32_t mark) const;
  static std::uint64_t key(std::uint32_t origin, SchemaId at, ValidityState s);

  const KnowledgeBase* kb_;
  EngineConfig config_;
  std::vector<Observation> origins_;
  std::vector<Mark> marks_;
  std::deque<std::uint32_t> queue_;
  std::vector<std::vector<std::uint32_t>> at_schema_;  // every mark ever placed, per schema
  std::unordered_map<std::uint64_t, std::uint32_t> best_;
  std::unordered_set<std::string> emitted_keys_;
  std::vector<EmittedPath> pending_;
};

/// Every valid path from obs1 to obs2 with at most `max_depth` links, by exhaustive
/// DFS over KB moves filtered with the declarative grammar check (no automaton).
/// Throws std::length_error past `guard` enumerated prefixes.
std::vector<Path> enumerate_paths_oracle(const KnowledgeBase& kb, const Observation& obs1, const Observation& obs2,
                                         int max_depth, std::size_t guard = 1'000'000);

struct MissedPath {
  Path path;
  Score score;
  /// Some cleave point has both halves at or above T on every non-empty prefix,
  /// i.e. the cutoff alone could not have removed it.
  bool halves_above_threshold;
};

struct CompletenessReport {
  std::size_t oracle_paths = 0;     // oracle paths scoring >= max(T^2, full_threshold)
  std::vector<MissedPath> missed;   // of those, the ones spread did not emit
};

/// Checks the cutoff rule against the oracle. The engine is run with `config`
/// except that retention is forced to AllTrails, so that only the threshold T
/// can cause a path to be missed.
CompletenessReport completeness_check(const KnowledgeBase& kb, const EngineConfig& config,
                                      const std::vector<Observation>& seeds);

}  // namespace mprec
