// oracle.cpp - exhaustive path enumeration and the cutoff completeness check

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mprec/marker.hpp"

namespace mprec {

std::vector<Path> enumerate_paths_oracle(const KnowledgeBase& kb, const Observation& obs1, const Observation& obs2,
                                         int max_depth, std::size_t guard) {
  std::vector<Path> found;
  std::vector<Link> links;
  std::vector<LinkKind> kinds;
  std::size_t prefixes = 0;

  auto dfs = [&](auto&& self, SchemaId at) -> void {
    if (++prefixes > guard) throw std::length_error("path enumeration exceeded its guard");
    if (!links.empty() && at == obs2.schema && grammar_accepts_declarative(kinds)) {
      found.push_back(Path{obs1, links, obs2});
    }
    if (static_cast<int>(links.size()) >= max_depth) return;
    for (const Link& l : kb.neighbors(at)) {
      links.push_back(l);
      kinds.push_back(l.kind);
      self(self, l.to);
      links.pop_back();
      kinds.pop_back();
    }
  };
  dfs(dfs, obs1.schema);
  return found;
}


namespace {

bool prefixes_above(const KnowledgeBase& kb, const Observation& origin, const std::vector<Link>& links, std::size_t n,
                    double threshold) {
  HalfScore h = start_half(origin);
  for (std::size_t k = 0; k < n; ++k) {
    h = extend_half(kb, h, links[k]);
    if (h.score.value < threshold) return false;
  }
  return true;
}

bool some_cleave_above(const KnowledgeBase& kb, const Path& path, double threshold) {
  Path back = reverse(path);
  const std::size_t n = path.links.size();
  for (std::size_t c = 0; c <= n; ++c) {
    if (prefixes_above(kb, path.start, path.links, c, threshold) &&
        prefixes_above(kb, back.start, back.links, n - c, threshold)) {
      return true;
    }
  }
  return false;
}

}  // namespace

CompletenessReport completeness_check(const KnowledgeBase& kb, const EngineConfig& config,
                                      const std::vector<Observation>& seeds) {
  EngineConfig all = config;
  all.retention = Retention::AllTrails;
  MarkerEngine engine(kb, all);
  std::set<std::string> emitted;
  for (const Observation& o : seeds) {
    engine.seed(o);
    for (const EmittedPath& e : engine.spread()) emitted.insert(render_path(kb, e.path));
  }

  const double t = config.half_threshold;
  const double bar = std::max(t * t, config.full_threshold);
  CompletenessReport report;
  const auto& origins = engine.origins();
  for (std::size_t i = 0; i < origins.size(); ++i) {
    for (std::size_t j = i + 1; j < origins.size(); ++j) {
      for (Path& p : enumerate_paths_oracle(kb, origins[i], origins[j], config.max_depth)) {
        Score sc = score_path(kb, p);
        if (sc.value < bar) continue;
        ++report.oracle_paths;
        if (emitted.count(render_path(kb, p))) continue;
        bool above = some_cleave_above(kb, p, t);
        report.missed.push_back(MissedPath{std::move(p), sc, above});
      }
    }
  }
  return report;
}

}  // namespace mprec
