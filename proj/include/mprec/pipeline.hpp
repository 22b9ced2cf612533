// pipeline.hpp - end-to-end recognition pass and synthetic corpora

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mprec/bayes.hpp"
#include "mprec/kb.hpp"
#include "mprec/marker.hpp"

namespace mprec {

struct RunConfig {
  EngineConfig engine;
  double gamma1 = 1.0;   // P(E^I | every equality holds)
  double gamma0 = 1e-9;  // P(E^I | some equality fails)
};

enum class Evaluation { NotEvaluated, Evaluated, TooLarge };

struct PathRecord {
  std::string path;  // canonical path text
  double sc = 0.0;
  std::string rs;    // relevant statements, space separated
  bool filtered = false;  // removed by the evidence filter
  Evaluation evaluation = Evaluation::NotEvaluated;
  double posterior = 0.0;
  double residual = 0.0;
  bool approved = false;
};

struct RunCounters {
  std::size_t reported = 0;
  std::size_t asserted = 0;
  std::size_t evaluated = 0;
  std::size_t approved = 0;
};

struct RunReport {
  std::vector<PathRecord> records;  // discovery order
  RunCounters counters;
};

struct InputStream {
  std::vector<Observation> observations;  // arrival order
  EvidenceRegistry registry;
};

/// "(inst ID SCHEMA [:belief FLOAT])" and "(corroborate SCHEMA SLOT)" forms.
InputStream parse_input(const KnowledgeBase& kb, std::string_view text);

/// Seeds and spreads each observation in arrival order, then filters, evaluates
/// and approves every emitted path against the complete registry.
RunReport run(const KnowledgeBase& kb, const RunConfig& config, const InputStream& input);
RunReport run(const KnowledgeBase& kb, const RunConfig& config, std::string_view text);

std::string render_report(const RunReport& report);

struct SynthParams {
  int plans = 12;
  int step_types = 24;
  int plan_categories = 3;
  int action_categories = 4;
  int min_slots = 2;
  int max_slots = 4;
  int stories = 10;
  int min_observations = 2;
  int max_observations = 3;
  double plan_prior = 1e-4;
  double step_prior = 1e-6;
  double eq_prior = 1e-8;
  double min_belief = 0.8;
  double corroboration_density = 1.0;  // fraction of declared (schema, slot) pairs corroborated
};

struct Corpus {
  KnowledgeBase kb;
  std::string kb_text;
  std::vector<std::string> stories;  // one input stream per story
  std::vector<std::string> planted;  // name of the plan each story was drawn from
};

Corpus synth_corpus(std::uint64_t seed, const SynthParams& params = {});

}  // namespace mprec
