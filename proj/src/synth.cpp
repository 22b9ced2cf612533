// synth.cpp - synthetic plan libraries and observation streams with planted plans

#include <algorithm>
#include <random>
#include <sstream>

#include "mprec/numfmt.hpp"
#include "mprec/pipeline.hpp"

namespace mprec {

Corpus synth_corpus(std::uint64_t seed, const SynthParams& params) {
  if (params.plans < 1 || params.step_types < params.max_slots || params.min_slots < 1 ||
      params.max_slots < params.min_slots || params.plan_categories < 1 || params.action_categories < 1 ||
      params.min_observations < 2 || params.max_observations < params.min_observations) {
    throw std::invalid_argument("synthetic corpus parameters out of range");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto pick = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

  std::vector<int> plan_cat(params.plans);
  std::vector<int> per_plan_cat(params.plan_categories, 0);
  for (int p = 0; p < params.plans; ++p) ++per_plan_cat[plan_cat[p] = pick(params.plan_categories)];
  std::vector<int> step_cat(params.step_types);
  std::vector<int> per_step_cat(params.action_categories, 0);
  for (int s = 0; s < params.step_types; ++s) ++per_step_cat[step_cat[s] = pick(params.action_categories)];

  KbBuilder b;
  b.eq_prior(params.eq_prior);
  for (int c = 0; c < params.plan_categories; ++c) {
    b.schema("pcat-" + std::to_string(c), std::nullopt, std::min(1.0, std::max(1, per_plan_cat[c]) * params.plan_prior * 1.5));
  }
  for (int c = 0; c < params.action_categories; ++c) {
    b.schema("acat-" + std::to_string(c), std::nullopt, std::min(1.0, std::max(1, per_step_cat[c]) * params.step_prior * 1.5));
  }
  for (int p = 0; p < params.plans; ++p) {
    b.schema("plan-" + std::to_string(p), "pcat-" + std::to_string(plan_cat[p]), params.plan_prior);
  }
  for (int s = 0; s < params.step_types; ++s) {
    b.schema("step-" + std::to_string(s), "acat-" + std::to_string(step_cat[s]), params.step_prior);
  }

  std::vector<std::vector<int>> plan_steps(params.plans);
  std::vector<int> all_steps(params.step_types);
  for (int s = 0; s < params.step_types; ++s) all_steps[s] = s;
  for (int p = 0; p < params.plans; ++p) {
    int n = params.min_slots + pick(params.max_slots - params.min_slots + 1);
    std::shuffle(all_steps.begin(), all_steps.end(), rng);
    plan_steps[p].assign(all_steps.begin(), all_steps.begin() + n);
    for (int k = 0; k < n; ++k) {
      b.role("plan-" + std::to_string(p), "st" + std::to_string(k + 1), "step-" + std::to_string(plan_steps[p][k]));
    }
  }

  Corpus corpus{b.build(), {}, {}, {}};
  corpus.kb_text = render_kb(corpus.kb);

  std::ostringstream records;
  for (int p = 0; p < params.plans; ++p) {
    for (std::size_t k = 0; k < plan_steps[p].size(); ++k) {
      if (unit(rng) < params.corroboration_density) {
        records << "(corroborate plan-" << p << " st" << k + 1 << ")\n";
      }
    }
  }

  for (int story = 0; story < params.stories; ++story) {
    int p = pick(params.plans);
    std::vector<int> slots(plan_steps[p].size());
    for (std::size_t k = 0; k < slots.size(); ++k) slots[k] = static_cast<int>(k);
    std::shuffle(slots.begin(), slots.end(), rng);
    int m = params.min_observations + pick(params.max_observations - params.min_observations + 1);
    m = std::min<int>(m, static_cast<int>(slots.size()));
    std::ostringstream s;
    s << records.str();
    for (int k = 0; k < m; ++k) {
      double belief = params.min_belief + (1.0 - params.min_belief) * unit(rng);
      s << "(inst ob" << k + 1 << " step-" << plan_steps[p][slots[k]] << " :belief " << format_number(belief) << ")\n";
    }
    corpus.stories.push_back(s.str());
    corpus.planted.push_back("plan-" + std::to_string(p));
  }
  return corpus;
}

}  // namespace mprec
