// bench_enumerate.cpp - serial recursion vs OpenMP bitmask enumeration on vertebrate networks

#include <benchmark/benchmark.h>

#include "mprec/bayes.hpp"
#include "mprec/random_kb.hpp"

namespace {

using namespace mprec;

// A chain KB long enough to give a network with the requested number of roles.
struct Chain {
  KnowledgeBase kb;
  Path path;
};

Chain make_chain(int roles) {
  KbBuilder b;
  b.eq_prior(1e-8);
  for (int k = 0; k <= roles; ++k) b.schema("s" + std::to_string(k), std::nullopt, 1e-3);
  for (int k = 0; k < roles; ++k) b.role("s" + std::to_string(k), "r", "s" + std::to_string(k + 1));
  Chain c{b.build(), {}};
  c.path.start = Observation{"a", c.kb.id("s" + std::to_string(roles)), 0.9};
  c.path.end = Observation{"b", c.kb.id("s0"), 0.9};
  for (int k = roles; k > 0; --k) {
    c.path.links.push_back(Link{LinkKind::RoleUp, c.kb.id("s" + std::to_string(k)), c.kb.id("s" + std::to_string(k - 1)),
                                *c.kb.find_slot("r")});
  }
  return c;
}

void run_kernel(benchmark::State& state, Exec exec) {
  Chain c = make_chain(static_cast<int>(state.range(0)));
  VertebrateNetwork net = build_network(c.kb, c.path, relevant_statements(c.path, c.kb));
  Cpts cpts = default_cpts(c.kb, net, 1.0, 1e-9);
  for (auto _ : state) benchmark::DoNotOptimize(exact_posterior(c.kb, net, cpts, exec));
  state.counters["hidden"] = static_cast<double>(net.hidden_count());
}

void BM_Serial(benchmark::State& state) { run_kernel(state, Exec::Serial); }
void BM_Parallel(benchmark::State& state) { run_kernel(state, Exec::Parallel); }

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(2, 10, 2);
BENCHMARK(BM_Parallel)->DenseRange(2, 10, 2);

BENCHMARK_MAIN();
