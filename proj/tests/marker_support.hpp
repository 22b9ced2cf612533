// marker_support.hpp - set comparisons between the marker passer and the exhaustive oracle
#pragma once

#include <random>
#include <set>
#include <string>
#include <tuple>

#include "mprec/marker.hpp"
#include "mprec/random_kb.hpp"

namespace support {

using namespace mprec;

inline std::set<std::string> rendered(const KnowledgeBase& kb, const std::vector<Path>& paths) {
  std::set<std::string> out;
  for (const Path& p : paths) out.insert(render_path(kb, p));
  return out;
}

inline std::set<std::string> rendered(const KnowledgeBase& kb, const std::vector<EmittedPath>& paths) {
  std::set<std::string> out;
  for (const EmittedPath& e : paths) out.insert(render_path(kb, e.path));
  return out;
}

inline std::optional<ValidityState> run_dfa(const std::vector<LinkKind>& kinds) {
  ValidityState s;
  for (LinkKind k : kinds) {
    auto next = step(s, k);
    if (!next) return std::nullopt;
    s = *next;
  }
  return s;
}

// (cleave schema, automaton state of the prefix, automaton state of the reversed suffix)
using Junction = std::tuple<std::uint32_t, int, int>;

inline std::set<Junction> junctions(const std::vector<Path>& paths) {
  std::set<Junction> out;
  for (const Path& p : paths) {
    auto along = schemas_along(p);
    auto kinds = kinds_of(p);
    for (std::size_t c = 0; c <= kinds.size(); ++c) {
      std::vector<LinkKind> prefix(kinds.begin(), kinds.begin() + c);
      std::vector<LinkKind> suffix;
      for (std::size_t k = kinds.size(); k > c; --k) suffix.push_back(inverse(kinds[k - 1]));
      out.emplace(along[c].index, run_dfa(prefix)->index(), run_dfa(suffix)->index());
    }
  }
  return out;
}

inline std::vector<Path> paths_of(const std::vector<EmittedPath>& emitted) {
  std::vector<Path> out;
  for (const EmittedPath& e : emitted) out.push_back(e.path);
  return out;
}

inline std::vector<EmittedPath> spread_all(const KnowledgeBase& kb, const EngineConfig& cfg,
                                           const std::vector<Observation>& seeds) {
  MarkerEngine engine(kb, cfg);
  std::vector<EmittedPath> out;
  for (const Observation& o : seeds) {
    engine.seed(o);
    for (EmittedPath& e : engine.spread()) out.push_back(std::move(e));
  }
  return out;
}

// Two observations on schemas that take part in some role, so paths are likely.
inline std::vector<Observation> random_pair(const KnowledgeBase& kb, std::mt19937_64& rng) {
  std::vector<SchemaId> candidates;
  for (SchemaId s : kb.all()) {
    for (const Link& l : kb.neighbors(s)) {
      if (is_role(l.kind)) {
        candidates.push_back(s);
        break;
      }
    }
  }
  if (candidates.empty()) candidates = kb.all();
  std::uniform_real_distribution<double> belief(0.05, 1.0);
  auto pick = [&] { return candidates[rng() % candidates.size()]; };
  return {Observation{"obs-a", pick(), belief(rng)}, Observation{"obs-b", pick(), belief(rng)}};
}

inline RandomKbParams small_kb_params(std::mt19937_64& rng) {
  RandomKbParams p;
  p.schemas = 8 + static_cast<int>(rng() % 23);  // 8..30
  p.roles = p.schemas / 2 + static_cast<int>(rng() % (p.schemas / 2 + 1));
  return p;
}

}  // namespace support
