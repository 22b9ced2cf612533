#include <gtest/gtest.h>

#include <map>
#include <random>

#include "fixture.hpp"
#include "mprec/random_kb.hpp"
#include "mprec/semantics.hpp"

using namespace mprec;

namespace {

std::vector<std::string> rendered(const KnowledgeBase& kb, const StatementSet& s, const std::string& from,
                                  const std::string& to) {
  std::vector<std::string> out;
  for (const Statement& st : s.statements) {
    std::string text = render_statement(kb, st);
    for (std::size_t at; (at = text.find(from)) != std::string::npos;) text.replace(at, from.size(), to);
    out.push_back(text);
  }
  return out;
}

}  // namespace

TEST(Semantics, StatementsOfTheSupermarketPath) {
  KnowledgeBase kb = fixture::kb();
  Path p = parse_path(kb, fixture::kPath);
  StatementSet s = statements_of(p);
  std::vector<std::string> expected{
      "(inst supermarket2 supermarket)",
      "(= (store-of shopping3) supermarket2)",
      "(inst shopping3 supermarket-shopping)",
      "(inst shopping3 shopping)",
      "(= (go-step shopping3) go1)",
      "(inst go1 go)",
  };
  EXPECT_EQ(rendered(kb, s, "gen-1", "shopping3"), expected);
  ASSERT_EQ(s.fresh.size(), 1u);

  StatementSet rs = relevant_statements(s, kb);
  expected.erase(expected.begin() + 3);
  EXPECT_EQ(rendered(kb, rs, "gen-1", "shopping3"), expected);
}

TEST(Semantics, RelevantInstanceTrace) {
  KnowledgeBase kb = fixture::kb();
  Path p = parse_path(kb, fixture::kPath);
  auto trace = relevant_instance_trace(p, FreshNames{"q-"});
  std::vector<std::string> expected{"supermarket2", "q-gen-1", "q-gen-1", "go1"};
  EXPECT_EQ(trace, expected);
}

TEST(Semantics, RelevantTypeIsMostSpecific) {
  KnowledgeBase kb = fixture::kb();
  StatementSet s = statements_of(parse_path(kb, fixture::kPath));
  EXPECT_EQ(relevant_type("gen-1", s, kb), kb.id("supermarket-shopping"));
  EXPECT_EQ(relevant_type("go1", s, kb), kb.id("go"));
  EXPECT_THROW(relevant_type("nobody", s, kb), SemanticsError);
  StatementSet bad = s;
  bad.add(Inst{"gen-1", kb.id("go")});
  EXPECT_THROW(relevant_type("gen-1", bad, kb), SemanticsError);
}

TEST(Semantics, AddDeduplicates) {
  StatementSet s;
  s.add(Inst{"a", SchemaId{0}});
  s.add(Inst{"a", SchemaId{0}});
  s.add(SlotEq{"a", SlotId{0}, "b"});
  s.add(SlotEq{"a", SlotId{0}, "b"});
  EXPECT_EQ(s.statements.size(), 2u);
  EXPECT_EQ(s.instances(), (std::vector<std::string>{"a", "b"}));
}

TEST(Semantics, StructureOnRandomPaths) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    KnowledgeBase kb = random_kb(seed);
    for (int k = 0; k < 10; ++k) {
      auto p = random_valid_path(kb, rng, 8, 1, 5);
      if (!p) continue;
      ++checked;
      std::size_t roles = 0;
      for (const Link& l : p->links) roles += is_role(l.kind);
      StatementSet s = statements_of(*p);
      StatementSet rs = relevant_statements(s, kb);
      EXPECT_EQ(s.eqs().size(), roles);
      EXPECT_EQ(rs.eqs().size(), roles);
      EXPECT_EQ(s.fresh.size(), roles - 1);
      auto instances = rs.instances();
      EXPECT_EQ(instances.size(), roles + 1);
      // exactly one inst per instance in RS, at its relevant type
      std::map<std::string, int> count;
      for (const Inst& i : rs.insts()) {
        ++count[i.instance];
        EXPECT_EQ(i.schema, relevant_type(i.instance, s, kb));
      }
      for (const auto& name : instances) EXPECT_EQ(count[name], 1) << name;
      // RS is a subset of S
      for (const Statement& st : rs.statements) EXPECT_TRUE(s.contains(st));
      // every slot equality agrees with the KB's role declarations
      for (const SlotEq& e : rs.eqs()) {
        auto filler = kb.filler_of(relevant_type(e.owner, s, kb), e.slot);
        bool declared_above = false;
        for (const Inst& i : s.insts()) {
          if (i.instance == e.owner && kb.filler_of(i.schema, e.slot)) declared_above = true;
        }
        EXPECT_TRUE(filler || declared_above);
      }
    }
  }
  EXPECT_GT(checked, 200);
}
