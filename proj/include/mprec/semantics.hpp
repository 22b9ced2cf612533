// semantics.hpp - statements asserted by a path: S(P) and the relevant subset RS(P)

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mprec/kb.hpp"
#include "mprec/path.hpp"

namespace mprec {

struct Inst {
  std::string instance;
  SchemaId schema;
  friend bool operator==(const Inst&, const Inst&) = default;
};

/// (= (slot owner) filler)
struct SlotEq {
  std::string owner;
  SlotId slot;
  std::string filler;
  friend bool operator==(const SlotEq&, const SlotEq&) = default;
};

using Statement = std::variant<Inst, SlotEq>;

/// Statements in path order without duplicates, plus the instances the path invented.
struct StatementSet {
  std::vector<Statement> statements;
  std::vector<std::string> fresh;

  std::vector<Inst> insts() const;
  std::vector<SlotEq> eqs() const;
  bool contains(const Statement& s) const;
  /// Adds `s` unless already present.
  void add(Statement s);
  /// Distinct instances in order of first mention.
  std::vector<std::string> instances() const;
};

/// Generates names for invented instances: "<prefix>gen-<k>", k the 1-based role-link index.
struct FreshNames {
  std::string prefix;
  std::string make(std::size_t role_index) const { return prefix + "gen-" + std::to_string(role_index); }
};

/// Relevant instance at each path position (links.size() + 1 entries).
std::vector<std::string> relevant_instance_trace(const Path& path, const FreshNames& names = {});

StatementSet statements_of(const Path& path, const FreshNames& names = {});

class SemanticsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Most specific type the set attributes to `instance`.
SchemaId relevant_type(const std::string& instance, const StatementSet& set, const KnowledgeBase& kb);

/// Keeps every SlotEq and, per instance, only the Inst at its relevant type.
StatementSet relevant_statements(const StatementSet& set, const KnowledgeBase& kb);
StatementSet relevant_statements(const Path& path, const KnowledgeBase& kb, const FreshNames& names = {});

std::string render_statement(const KnowledgeBase& kb, const Statement& s);
std::string render_statements(const KnowledgeBase& kb, const StatementSet& set, const char* sep = "\n");

}  // namespace mprec
