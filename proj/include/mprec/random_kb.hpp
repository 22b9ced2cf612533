// random_kb.hpp - reproducible random knowledge bases and valid paths

#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "mprec/kb.hpp"
#include "mprec/path.hpp"

namespace mprec {

struct RandomKbParams {
  int schemas = 20;
  int roles = 30;
  double parent_probability = 0.6;  // chance a schema gets an isa parent
  double root_prior_min = 0.02;
  double root_prior_max = 0.5;
};

KnowledgeBase random_kb(std::uint64_t seed, const RandomKbParams& params = {});

/// Random walk from a random schema obeying the path automaton, with between
/// `min_roles` and `max_roles` role links and at most `max_links` links.
/// Endpoint beliefs are drawn uniformly from (0.05, 1]. Returns nullopt if no
/// such walk was found within a bounded number of attempts.
std::optional<Path> random_valid_path(const KnowledgeBase& kb, std::mt19937_64& rng, int max_links, int min_roles,
                                      int max_roles);

}  // namespace mprec
