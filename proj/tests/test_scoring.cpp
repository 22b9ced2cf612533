#include <gtest/gtest.h>

#include <random>

#include "fixture.hpp"
#include "mprec/marker.hpp"
#include "mprec/random_kb.hpp"
#include "mprec/scoring.hpp"

using namespace mprec;
using fixture::rel_close;

namespace {

// Right-to-left product straight from the multiplier table.
double score_backwards(const KnowledgeBase& kb, const Path& p) {
  double v = p.end.belief / kb.prior(p.end.schema);
  for (auto it = p.links.rbegin(); it != p.links.rend(); ++it) {
    const Link& l = *it;
    switch (l.kind) {
      case LinkKind::RoleUp: v *= kb.prior(l.to) / kb.prior(l.from); break;
      case LinkKind::IsaDown: v *= kb.prior(l.to) / kb.prior(l.from); break;
      default: break;
    }
  }
  return v * p.start.belief;
}

}  // namespace

TEST(Scoring, Multipliers) {
  KnowledgeBase kb = fixture::kb();
  Path p = parse_path(kb, fixture::kPath);
  EXPECT_DOUBLE_EQ(link_multiplier(kb, p.links[0]), 2.0);
  EXPECT_DOUBLE_EQ(link_multiplier(kb, p.links[1]), 1.0);
  EXPECT_DOUBLE_EQ(link_multiplier(kb, p.links[2]), 1.0);
  EXPECT_DOUBLE_EQ(link_multiplier(kb, p.links[1].reversed()), 0.4);
  EXPECT_DOUBLE_EQ(terminal_multiplier(kb, p.end), 9.0);
  EXPECT_DOUBLE_EQ(initial_score(p.start).value, 0.9);
}

TEST(Scoring, SupermarketPathScores16_2) {
  KnowledgeBase kb = fixture::kb();
  Path p = parse_path(kb, fixture::kPath);
  EXPECT_EQ(score_path(kb, p).value, 16.2);
  EXPECT_TRUE(rel_close(score_backwards(kb, p), 16.2, 1e-12));
  EXPECT_TRUE(rel_close(score_path(kb, reverse(p)).value, 16.2, 1e-12));
}

TEST(Scoring, HalvesOfTheSupermarketPath) {
  KnowledgeBase kb = fixture::kb();
  Path p = parse_path(kb, fixture::kPath);
  HalfScore h1 = extend_half(kb, start_half(p.start), p.links[0]);
  EXPECT_DOUBLE_EQ(h1.score.value, 1.8);
  EXPECT_EQ(h1.at, kb.id("supermarket-shopping"));
  h1 = extend_half(kb, h1, p.links[1]);
  HalfScore h2 = extend_half(kb, start_half(p.end), p.links[2].reversed());
  EXPECT_DOUBLE_EQ(h2.score.value, 0.45);
  EXPECT_TRUE(rel_close(combine(kb, h1, h2).value, 16.2, 1e-12));
  EXPECT_THROW(extend_half(kb, h1, p.links[0]), std::invalid_argument);
  EXPECT_THROW(combine(kb, start_half(p.start), h2), std::invalid_argument);
}

TEST(Scoring, DirectionSymmetryOnEveryFixturePath) {
  KnowledgeBase kb = fixture::kb();
  int n = 0;
  for (SchemaId a : kb.all()) {
    for (SchemaId b : kb.all()) {
      Observation oa{"a", a, 0.7}, ob{"b", b, 0.4};
      for (const Path& p : enumerate_paths_oracle(kb, oa, ob, 6)) {
        ++n;
        double fwd = score_path(kb, p).value;
        EXPECT_TRUE(rel_close(fwd, score_path(kb, reverse(p)).value, 1e-12));
        EXPECT_TRUE(rel_close(fwd, score_backwards(kb, p), 1e-12));
      }
    }
  }
  EXPECT_GT(n, 5);
}

TEST(Scoring, CleaveIdentityAtEveryPosition) {
  std::mt19937_64 rng(3);
  int paths = 0;
  for (std::uint64_t seed = 1; paths < 300; ++seed) {
    KnowledgeBase kb = random_kb(seed);
    auto p = random_valid_path(kb, rng, 9, 1, 5);
    if (!p) continue;
    ++paths;
    double whole = score_path(kb, *p).value;
    ASSERT_TRUE(rel_close(whole, score_backwards(kb, *p), 1e-12));
    Path back = reverse(*p);
    const std::size_t n = p->links.size();
    for (std::size_t c = 0; c <= n; ++c) {
      HalfScore h1 = start_half(p->start);
      for (std::size_t k = 0; k < c; ++k) h1 = extend_half(kb, h1, p->links[k]);
      HalfScore h2 = start_half(back.start);
      for (std::size_t k = 0; k < n - c; ++k) h2 = extend_half(kb, h2, back.links[k]);
      ASSERT_TRUE(rel_close(combine(kb, h1, h2).value, whole, 1e-12)) << "cleave " << c;
    }
  }
}
