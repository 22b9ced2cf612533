// random_kb.cpp - random fixtures for property tests, benchmarks and synthetic corpora

#include "mprec/random_kb.hpp"

#include <algorithm>
#include <limits>

namespace mprec {

KnowledgeBase random_kb(std::uint64_t seed, const RandomKbParams& params) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = std::max(params.schemas, 2);

  std::vector<int> parent(n, -1);
  for (int i = 1; i < n; ++i) {
    if (unit(rng) < params.parent_probability) parent[i] = static_cast<int>(rng() % static_cast<std::uint64_t>(i));
  }
  std::vector<int> child_count(n, 0);
  for (int i = 0; i < n; ++i) {
    if (parent[i] >= 0) ++child_count[parent[i]];
  }
  // Children take a random share of parent / child_count, so sibling sums never exceed the parent.
  std::vector<double> prior(n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (parent[i] < 0) {
      prior[i] = params.root_prior_min + (params.root_prior_max - params.root_prior_min) * unit(rng);
    } else {
      prior[i] = prior[parent[i]] * (0.2 + 0.8 * unit(rng)) / child_count[parent[i]];
    }
  }
  double min_prior = *std::min_element(prior.begin(), prior.end());

  KbBuilder b;
  b.eq_prior(min_prior * (0.05 + 0.95 * unit(rng)));
  auto name = [](int i) { return "s" + std::to_string(i); };
  for (int i = 0; i < n; ++i) {
    b.schema(name(i), parent[i] >= 0 ? std::optional<std::string>(name(parent[i])) : std::nullopt, prior[i]);
  }
  std::vector<int> slots_used(n, 0);
  for (int r = 0; r < params.roles; ++r) {
    int filled = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int filler = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (filler == filled) filler = (filler + 1) % n;
    b.role(name(filled), "r" + std::to_string(slots_used[filled]++), name(filler));
  }
  return b.build();
}

std::optional<Path> random_valid_path(const KnowledgeBase& kb, std::mt19937_64& rng, int max_links, int min_roles,
                                      int max_roles) {
  std::uniform_real_distribution<double> belief(0.05, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    SchemaId at{static_cast<std::uint32_t>(rng() % kb.size())};
    Path p;
    p.start = Observation{"obs-a", at, belief(rng)};
    ValidityState state;
    int roles = 0;
    int target = static_cast<int>(1 + rng() % static_cast<std::uint64_t>(max_links));
    for (int k = 0; k < target; ++k) {
      std::vector<std::pair<Link, ValidityState>> options;
      for (const Link& l : kb.neighbors(at)) {
        if (is_role(l.kind) && roles >= max_roles) continue;
        if (auto next = step(state, l.kind)) options.emplace_back(l, *next);
      }
      if (options.empty()) break;
      auto [link, next] = options[rng() % options.size()];
      p.links.push_back(link);
      state = next;
      at = link.to;
      if (is_role(link.kind)) ++roles;
    }
    if (roles < min_roles || roles > max_roles) continue;
    p.end = Observation{"obs-b", at, belief(rng)};
    return p;
  }
  return std::nullopt;
}

}  // namespace mprec
