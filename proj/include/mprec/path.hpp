// path.hpp - traversal-normalized paths and the validity automaton

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mprec/kb.hpp"

namespace mprec {

struct Observation {
  std::string instance;
  SchemaId schema;
  double belief = 1.0;  // p(i|e)

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// An alternating inst/link sequence, stored in travel order.
struct Path {
  Observation start;
  std::vector<Link> links;
  Observation end;

  friend bool operator==(const Path&, const Path&) = default;
};

enum class Phase : std::uint8_t { NoRoleYet, UpPhase, DownPhase };

struct ValidityState {
  Phase phase = Phase::NoRoleYet;
  bool last_was_isa_up = false;

  friend bool operator==(const ValidityState&, const ValidityState&) = default;
  /// Dense index in [0,6).
  int index() const { return static_cast<int>(phase) * 2 + (last_was_isa_up ? 1 : 0); }
};

/// Successor state, or nullopt when no extension of the prefix can be valid:
/// an isa-down right after an isa-up, or a role-up once a role-down was taken.
std::optional<ValidityState> step(ValidityState state, LinkKind kind);

/// DFA run over a whole kind sequence plus the at-least-one-role condition.
bool grammar_accepts(std::span<const LinkKind> kinds);

/// The same language written out as its four defining conditions, without the automaton.
bool grammar_accepts_declarative(std::span<const LinkKind> kinds);

/// Whether a half ending in state `a` glued to the reverse of a half ending in
/// state `b` (both at the same schema) forms a valid path.
bool join_compatible(ValidityState a, ValidityState b);

class PathStructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws PathStructureError when links do not chain from start.schema to end.schema.
void check_chain(const Path& path);

/// Grammar validity. Structural chaining problems are raised, not returned.
bool validate(const Path& path);

std::vector<LinkKind> kinds_of(const Path& path);

/// Schema at each position: position 0 is start.schema, position k the destination of link k.
std::vector<SchemaId> schemas_along(const Path& path);

Path reverse(const Path& path);

std::string render_link(const KnowledgeBase& kb, const Link& link);
std::string render_path(const KnowledgeBase& kb, const Path& path, bool with_beliefs = false);

/// Parses the canonical surface syntax. `(inst ID SCHEMA [:belief FLOAT])` endpoints;
/// every link must exist in the KB and chain. Errors carry positions.
Path parse_path(const KnowledgeBase& kb, std::string_view text);

}  // namespace mprec
