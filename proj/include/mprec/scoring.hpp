// scoring.hpp - spinal contribution: the incremental upper bound on a path's joint probability
//
// A whole path scores
//
//   SC = belief(start) * prod_k multiplier(link_k) * belief(end) / prior(end.schema)
//
// with multipliers role-up p(filled)/p(filler), role-down 1, isa-up 1,
// isa-down p(specific)/p(general). A half-path carries belief(origin) times the
// multipliers of its links; two halves meeting at schema n combine as
// h1 * h2 / prior(n), which equals SC of the glued path.

#pragma once

#include "mprec/kb.hpp"
#include "mprec/path.hpp"

namespace mprec {

struct Score {
  double value = 0.0;
};

struct HalfScore {
  Score score;
  SchemaId at;
};

Score initial_score(const Observation& obs);
double link_multiplier(const KnowledgeBase& kb, const Link& link);
double terminal_multiplier(const KnowledgeBase& kb, const Observation& obs);

/// Left-to-right accumulation: initial, each link, terminal.
Score score_path(const KnowledgeBase& kb, const Path& path);

HalfScore start_half(const Observation& origin);
/// Throws std::invalid_argument when link.from != h.at.
HalfScore extend_half(const KnowledgeBase& kb, HalfScore h, const Link& link);
/// Throws std::invalid_argument when the halves end at different schemas.
Score combine(const KnowledgeBase& kb, HalfScore h1, HalfScore h2);

}  // namespace mprec
