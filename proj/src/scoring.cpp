#include "mprec/scoring.hpp"

#include <stdexcept>

namespace mprec {

Score initial_score(const Observation& obs) { return Score{obs.belief}; }

double link_multiplier(const KnowledgeBase& kb, const Link& link) {
  switch (link.kind) {
    case LinkKind::RoleUp: return kb.prior(link.filled()) / kb.prior(link.filler());
    case LinkKind::RoleDown: return 1.0;
    case LinkKind::IsaUp: return 1.0;
    case LinkKind::IsaDown: return kb.prior(link.specific()) / kb.prior(link.general());
  }
  return 1.0;
}

double terminal_multiplier(const KnowledgeBase& kb, const Observation& obs) {
  return obs.belief / kb.prior(obs.schema);
}

Score score_path(const KnowledgeBase& kb, const Path& path) {
  double v = initial_score(path.start).value;
  for (const Link& l : path.links) v *= link_multiplier(kb, l);
  v *= terminal_multiplier(kb, path.end);
  return Score{v};
}

HalfScore start_half(const Observation& origin) { return HalfScore{initial_score(origin), origin.schema}; }

HalfScore extend_half(const KnowledgeBase& kb, HalfScore h, const Link& link) {
  if (link.from != h.at) throw std::invalid_argument("link does not leave the half-path's current schema");
  return HalfScore{Score{h.score.value * link_multiplier(kb, link)}, link.to};
}

Score combine(const KnowledgeBase& kb, HalfScore h1, HalfScore h2) {
  if (h1.at != h2.at) throw std::invalid_argument("half-paths end at different schemas");
  return Score{h1.score.value * h2.score.value / kb.prior(h1.at)};
}

}  // namespace mprec
