#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "fixture.hpp"
#include "mprec/random_kb.hpp"
#include "mprec/sexpr.hpp"

using namespace mprec;

namespace {

constexpr LinkKind kAll[] = {LinkKind::IsaUp, LinkKind::IsaDown, LinkKind::RoleUp, LinkKind::RoleDown};

void each_kind_sequence(int max_len, const std::function<void(const std::vector<LinkKind>&)>& f) {
  std::vector<LinkKind> seq;
  std::function<void()> rec = [&] {
    f(seq);
    if (static_cast<int>(seq.size()) == max_len) return;
    for (LinkKind k : kAll) {
      seq.push_back(k);
      rec();
      seq.pop_back();
    }
  };
  rec();
}

}  // namespace

TEST(Grammar, DfaMatchesConditionsOnAllKindSequences) {
  std::size_t n = 0;
  each_kind_sequence(7, [&](const std::vector<LinkKind>& seq) {
    ++n;
    ASSERT_EQ(grammar_accepts(seq), fixture::conditions_hold(seq));
    ASSERT_EQ(grammar_accepts_declarative(seq), fixture::conditions_hold(seq));
  });
  EXPECT_EQ(n, 21845u);  // sum of 4^k, k = 0..7
}

TEST(Grammar, RejectionIsPrefixClosed) {
  // A rejected prefix never becomes valid again: the DFA only rejects when no
  // extension can satisfy the conditions.
  each_kind_sequence(6, [&](const std::vector<LinkKind>& seq) {
    ValidityState s;
    bool dead = false;
    for (LinkKind k : seq) {
      auto next = step(s, k);
      if (!next) {
        dead = true;
        break;
      }
      s = *next;
    }
    if (!dead) return;
    std::vector<LinkKind> longer = seq;
    for (LinkKind k : kAll) {
      longer.push_back(k);
      ASSERT_FALSE(fixture::conditions_hold(longer));
      longer.pop_back();
    }
    ASSERT_FALSE(fixture::conditions_hold(seq));
  });
}

TEST(Grammar, SixReachableStates) {
  std::set<int> seen;
  each_kind_sequence(5, [&](const std::vector<LinkKind>& seq) {
    ValidityState s;
    for (LinkKind k : seq) {
      auto next = step(s, k);
      if (!next) return;
      s = *next;
    }
    seen.insert(s.index());
  });
  EXPECT_EQ(seen.size(), 6u);
}

TEST(Grammar, Examples) {
  EXPECT_FALSE(step(*step({}, LinkKind::IsaUp), LinkKind::IsaDown));
  ValidityState s = *step({}, LinkKind::RoleDown);
  s = *step(s, LinkKind::IsaUp);
  EXPECT_FALSE(step(s, LinkKind::RoleUp));
  std::vector<LinkKind> fig{LinkKind::RoleUp, LinkKind::IsaUp, LinkKind::RoleDown};
  EXPECT_TRUE(grammar_accepts(fig));
  std::vector<LinkKind> no_role{LinkKind::IsaUp, LinkKind::IsaUp};
  EXPECT_FALSE(grammar_accepts(no_role));
}

TEST(Grammar, JoinCompatibleMatchesGluing) {
  // Gluing prefix a with the reverse of prefix b is valid iff join_compatible says so.
  each_kind_sequence(4, [&](const std::vector<LinkKind>& a) {
    auto run = [](const std::vector<LinkKind>& seq) -> std::optional<ValidityState> {
      ValidityState s;
      for (LinkKind k : seq) {
        auto next = step(s, k);
        if (!next) return std::nullopt;
        s = *next;
      }
      return s;
    };
    auto sa = run(a);
    if (!sa) return;
    each_kind_sequence(4, [&](const std::vector<LinkKind>& b) {
      auto sb = run(b);
      if (!sb) return;
      std::vector<LinkKind> glued = a;
      for (auto it = b.rbegin(); it != b.rend(); ++it) glued.push_back(inverse(*it));
      ASSERT_EQ(join_compatible(*sa, *sb), fixture::conditions_hold(glued));
    });
  });
}

TEST(PathModel, FixturePathValidates) {
  KnowledgeBase kb = fixture::kb();
  Path p = parse_path(kb, fixture::kPath);
  ASSERT_EQ(p.links.size(), 3u);
  EXPECT_EQ(p.links[0].kind, LinkKind::RoleUp);
  EXPECT_EQ(p.links[1].kind, LinkKind::IsaUp);
  EXPECT_EQ(p.links[2].kind, LinkKind::RoleDown);
  EXPECT_TRUE(validate(p));
  EXPECT_DOUBLE_EQ(p.start.belief, 0.9);
  auto along = schemas_along(p);
  ASSERT_EQ(along.size(), 4u);
  EXPECT_EQ(along[2], kb.id("shopping"));
}

TEST(PathModel, ChainingErrorsAreDistinctFromInvalidity) {
  KnowledgeBase kb = fixture::kb();
  Path p = parse_path(kb, fixture::kPath);
  Path broken = p;
  broken.links.erase(broken.links.begin() + 1);
  EXPECT_THROW(validate(broken), PathStructureError);
  Path plateau;
  plateau.start = Observation{"a", kb.id("supermarket-shopping"), 1.0};
  plateau.end = Observation{"b", kb.id("supermarket-shopping"), 1.0};
  plateau.links = {Link{LinkKind::IsaUp, kb.id("supermarket-shopping"), kb.id("shopping"), {}},
                   Link{LinkKind::IsaDown, kb.id("shopping"), kb.id("supermarket-shopping"), {}}};
  EXPECT_FALSE(validate(plateau));
}

TEST(PathModel, ParseErrors) {
  KnowledgeBase kb = fixture::kb();
  EXPECT_THROW(parse_path(kb, "(inst a go)(inst b go)"), ParseError);
  EXPECT_THROW(parse_path(kb, "(inst a go)(role go go-step shopping)(inst b shopping)"), ParseError);
  EXPECT_THROW(parse_path(kb, "(inst a supermarket)(isa supermarket shopping)(inst b shopping)"), ParseError);
  EXPECT_THROW(parse_path(kb, "(inst a nowhere)(isa supermarket store-)(inst b store-)"), ParseError);
}

TEST(PathModel, AllFixtureSequencesAgreeWithConditions) {
  KnowledgeBase kb = fixture::kb();
  std::size_t checked = 0;
  std::vector<Link> links;
  std::function<void(SchemaId, SchemaId)> rec = [&](SchemaId start, SchemaId at) {
    if (!links.empty()) {
      Path p{Observation{"x", start, 1.0}, links, Observation{"y", at, 1.0}};
      ASSERT_EQ(validate(p), fixture::conditions_hold(kinds_of(p)));
      ++checked;
    }
    if (links.size() == 5) return;
    for (const Link& l : kb.neighbors(at)) {
      links.push_back(l);
      rec(start, l.to);
      links.pop_back();
    }
  };
  for (SchemaId s : kb.all()) rec(s, s);
  EXPECT_GT(checked, 100u);
}

TEST(PathModel, ReverseIsAnInvolutionAndRenderRoundTrips) {
  std::mt19937_64 rng(7);
  int tried = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    KnowledgeBase kb = random_kb(seed);
    for (int k = 0; k < 10; ++k) {
      auto p = random_valid_path(kb, rng, 8, 1, 4);
      if (!p) continue;
      ++tried;
      EXPECT_TRUE(validate(*p));
      EXPECT_TRUE(validate(reverse(*p)));
      EXPECT_EQ(reverse(reverse(*p)), *p);
      Path back = parse_path(kb, render_path(kb, *p, true));
      EXPECT_EQ(back, *p);
    }
  }
  EXPECT_GT(tried, 100);
}
