// marker.cpp - mark spreading, collision detection and half-path gluing

#include "mprec/marker.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mprec {

MarkerEngine::MarkerEngine(const KnowledgeBase& kb, EngineConfig config)
    : kb_(&kb), config_(config), at_schema_(kb.size()) {
  if (config_.half_threshold < 0 || config_.full_threshold < 0 || config_.max_depth < 1 || config_.approval_ratio < 0) {
    throw std::invalid_argument("engine thresholds must be >= 0 and max_depth >= 1");
  }
}

std::uint64_t MarkerEngine::key(std::uint32_t origin, SchemaId at, ValidityState s) {
  return (static_cast<std::uint64_t>(origin) << 40) | (static_cast<std::uint64_t>(at.index) << 3) |
         static_cast<std::uint64_t>(s.index());
}

void MarkerEngine::seed(const Observation& obs) {
  kb_->schema(obs.schema);
  for (const Observation& o : origins_) {
    if (o.instance != obs.instance) continue;
    if (o == obs) return;
    throw std::invalid_argument("instance '" + obs.instance + "' already seeded with a different schema or belief");
  }
  auto origin = static_cast<std::uint32_t>(origins_.size());
  origins_.push_back(obs);
  place(Mark{origin, obs.schema, ValidityState{}, start_half(obs), -1, Link{}, 0});
}

std::vector<EmittedPath> MarkerEngine::spread() {
  while (!queue_.empty()) {
    std::uint32_t id = queue_.front();
    queue_.pop_front();
    // Superseded marks are still extended: their children were reachable at this depth.
    const Mark m = marks_[id];
    if (m.depth >= config_.max_depth) continue;
    for (const Link& l : kb_->neighbors(m.at)) {
      auto next = step(m.dfa, l.kind);
      if (!next) continue;
      HalfScore h = extend_half(*kb_, m.score, l);
      if (h.score.value < config_.half_threshold) continue;
      place(Mark{m.origin, l.to, *next, h, static_cast<std::int64_t>(id), l, m.depth + 1});
    }
  }
  return std::exchange(pending_, {});
}

void MarkerEngine::place(Mark m) {
  auto id = static_cast<std::uint32_t>(marks_.size());
  if (config_.retention == Retention::BestPerState) {
    auto [it, fresh] = best_.try_emplace(key(m.origin, m.at, m.dfa), id);
    if (!fresh) {
      if (marks_[it->second].score.score.value >= m.score.score.value) return;
      it->second = id;
    }
  }
  marks_.push_back(m);
  at_schema_[m.at.index].push_back(id);
  collide(id);
  queue_.push_back(id);
}

std::vector<Link> MarkerEngine::trail(std::uint32_t mark) const {
  std::vector<Link> links;
  for (std::int64_t cur = mark; marks_[cur].parent >= 0; cur = marks_[cur].parent) links.push_back(marks_[cur].via);
  std::reverse(links.begin(), links.end());
  return links;
}

void MarkerEngine::collide(std::uint32_t fresh) {
  const Mark& m = marks_[fresh];
  for (std::uint32_t other : at_schema_[m.at.index]) {
    const Mark& x = marks_[other];
    if (x.origin == m.origin) continue;
    // Paths run from the earlier-seeded origin to the later one.
    std::uint32_t first_id = x.origin < m.origin ? other : fresh;
    std::uint32_t second_id = x.origin < m.origin ? fresh : other;
    const Mark& first = marks_[first_id];
    const Mark& second = marks_[second_id];
    if (!join_compatible(first.dfa, second.dfa)) continue;
    if (first.depth + second.depth > config_.max_depth) continue;
    Score sc = combine(*kb_, first.score, second.score);
    if (sc.value < config_.full_threshold) continue;

    Path path;
    path.start = origins_[first.origin];
    path.end = origins_[second.origin];
    path.links = trail(first_id);
    std::vector<Link> back = trail(second_id);
    for (auto it = back.rbegin(); it != back.rend(); ++it) path.links.push_back(it->reversed());
    if (!validate(path)) throw std::logic_error("glued path failed validation: " + render_path(*kb_, path));

    if (emitted_keys_.insert(render_path(*kb_, path)).second) pending_.push_back(EmittedPath{std::move(path), sc});
  }
}

}  // namespace mprec
