// kb.hpp - schema knowledge base: isa tree, role links, priors, textual loader

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mprec {

struct SchemaId {
  std::uint32_t index = 0;
  friend auto operator<=>(const SchemaId&, const SchemaId&) = default;
};

struct SlotId {
  std::uint32_t index = 0;
  friend auto operator<=>(const SlotId&, const SlotId&) = default;
};

/// Direction of travel over a KB link. Role moves go between a filled schema and
/// the filler type of one of its slots; isa moves go between a schema and its parent.
enum class LinkKind : std::uint8_t { IsaUp, IsaDown, RoleUp, RoleDown };

std::string_view to_string(LinkKind kind);
LinkKind inverse(LinkKind kind);
inline bool is_role(LinkKind k) { return k == LinkKind::RoleUp || k == LinkKind::RoleDown; }
inline bool is_isa(LinkKind k) { return !is_role(k); }

/// One traversal step. `from` and `to` are in travel order; `slot` is meaningful
/// for role kinds only.
struct Link {
  LinkKind kind = LinkKind::IsaUp;
  SchemaId from;
  SchemaId to;
  SlotId slot;

  // RoleUp travels filler -> filled, RoleDown filled -> filler.
  SchemaId filled() const { return kind == LinkKind::RoleUp ? to : from; }
  SchemaId filler() const { return kind == LinkKind::RoleUp ? from : to; }
  // IsaUp travels specific -> general, IsaDown general -> specific.
  SchemaId specific() const { return kind == LinkKind::IsaUp ? from : to; }
  SchemaId general() const { return kind == LinkKind::IsaUp ? to : from; }

  Link reversed() const { return Link{inverse(kind), to, from, slot}; }

  friend bool operator==(const Link& a, const Link& b) {
    return a.kind == b.kind && a.from == b.from && a.to == b.to &&
           (is_isa(a.kind) || a.slot == b.slot);
  }
};

struct Slot {
  SlotId name;
  SchemaId filler;
};

struct Schema {
  std::string name;
  std::optional<SchemaId> parent;
  double prior = 1.0;
  std::vector<Slot> slots;
  std::vector<SchemaId> children;
};

class KbError : public std::runtime_error {
 public:
  explicit KbError(const std::string& what, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

class KnowledgeBase {
 public:
  std::size_t size() const { return schemas_.size(); }
  const Schema& schema(SchemaId id) const;
  const std::string& name(SchemaId id) const { return schema(id).name; }
  std::optional<SchemaId> find(std::string_view name) const;
  /// Throws KbError for unknown names.
  SchemaId id(std::string_view name) const;

  const std::string& slot_name(SlotId id) const;
  std::optional<SlotId> find_slot(std::string_view name) const;
  std::size_t slot_count() const { return slot_names_.size(); }

  double prior(SchemaId id) const { return schema(id).prior; }
  double eq_prior() const { return eq_prior_; }

  /// True iff `general` is a proper isa ancestor of `specific`.
  bool isa_star(SchemaId specific, SchemaId general) const;

  /// Every isa/role move out of `id`, sorted by target name, then kind, then slot name.
  const std::vector<Link>& neighbors(SchemaId id) const;

  /// Filler type declared for `slot` on `owner` itself (slots are not inherited).
  std::optional<SchemaId> filler_of(SchemaId owner, SlotId slot) const;

  /// True iff `link` denotes an isa edge or role declaration present in the KB.
  bool has_link(const Link& link) const;

  std::vector<SchemaId> all() const;

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b);

 private:
  friend class KbBuilder;

  std::vector<Schema> schemas_;
  std::unordered_map<std::string, std::uint32_t> by_name_;
  std::vector<std::string> slot_names_;
  std::unordered_map<std::string, std::uint32_t> slot_by_name_;
  std::vector<std::vector<Link>> adjacency_;
  double eq_prior_ = 0.0;
};

/// Programmatic construction. Forward references are allowed; everything is
/// resolved and checked in build().
class KbBuilder {
 public:
  KbBuilder& eq_prior(double p, int line = 0);
  KbBuilder& schema(std::string name, std::optional<std::string> parent, double prior, int line = 0);
  KbBuilder& role(std::string filled, std::string slot, std::string filler, int line = 0);
  KnowledgeBase build() const;

 private:
  struct SchemaDecl {
    std::string name;
    std::optional<std::string> parent;
    double prior;
    int line;
  };
  struct RoleDecl {
    std::string filled, slot, filler;
    int line;
  };
  std::optional<double> eq_prior_;
  int eq_prior_line_ = 0;
  int eq_prior_count_ = 0;
  std::vector<SchemaDecl> schemas_;
  std::vector<RoleDecl> roles_;
};

KnowledgeBase load_kb(std::string_view text);
std::string render_kb(const KnowledgeBase& kb);

}  // namespace mprec
