#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ogroup/group.hpp"
#include "ogroup/limits.hpp"
#include "ogroup/morphism.hpp"

namespace ogroup {

/// An operator subgroup of a parent group: a membership mask closed under the
/// product, inverses and every operator.
class Subgroup {
public:
  /// Validates closure; throws PreconditionError if members is not an
  /// operator subgroup of parent.
  Subgroup(Group parent, ElementSet members);

  static Subgroup trivial(const Group &g);
  static Subgroup whole(const Group &g);

  const Group &parent() const { return parent_; }
  const ElementSet &members() const { return members_; }
  std::size_t order() const { return members_.count(); }
  bool contains(Element x) const { return members_.contains(x); }
  std::vector<Element> elements() const { return members_.elements(); }
  bool is_trivial() const { return order() == 1; }
  bool is_whole() const { return order() == parent_.order(); }
  bool is_contained_in(const Subgroup &other) const {
    return members_.is_subset_of(other.members_);
  }

  friend bool operator==(const Subgroup &a, const Subgroup &b) {
    return a.members_ == b.members_ && a.parent_ == b.parent_;
  }

private:
  struct Trusted {};
  Subgroup(Trusted, Group parent, ElementSet members)
    : parent_(std::move(parent)), members_(std::move(members)) {}

  Group parent_;
  ElementSet members_;

  friend Subgroup trusted_subgroup(const Group &, ElementSet);
};

/// Wraps a mask the caller has already proven closed.
Subgroup trusted_subgroup(const Group &g, ElementSet members);

/// A finite ordered family of subgroups of one parent; list positions play
/// the role of the index set.
class SubgroupFamily {
public:
  explicit SubgroupFamily(Group parent) : parent_(std::move(parent)) {}
  SubgroupFamily(Group parent, std::vector<Subgroup> entries);

  const Group &parent() const { return parent_; }
  const std::vector<Subgroup> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Subgroup &operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  void push_back(Subgroup h);
  bool contains(const Subgroup &h) const;

private:
  Group parent_;
  std::vector<Subgroup> entries_;
};

/// Least operator subgroup containing xs (worklist saturation).
Subgroup generated_subgroup(const Group &g, const ElementSet &xs);
Subgroup generated_subgroup(const Group &g, std::span<const Element> xs);

/// Least normal operator subgroup containing xs.
Subgroup normal_closure(const Group &g, const ElementSet &xs);
Subgroup normal_closure(const Group &g, std::span<const Element> xs);

/// Least operator subgroup containing xs that is normalized by every element
/// of `within` (which must be an operator subgroup containing xs).
Subgroup normal_closure_within(const Subgroup &within, const ElementSet &xs);

bool is_normal(const Subgroup &h);

/// {g : g x = x g for all x in xs}. Always a subgroup; whether it is stable
/// under the operators depends on the operators, so that is reported rather
/// than assumed.
struct Centralizer {
  ElementSet members;
  bool operator_closed;

  /// The centralizer as an operator subgroup; PreconditionError if it is not
  /// operator-closed.
  Subgroup subgroup(const Group &g) const;
};
Centralizer centralizer(const Group &g, const ElementSet &xs);

/// Subgroup generated by the commutators h k h^-1 k^-1.
Subgroup commutator_subgroup(const Subgroup &h, const Subgroup &k);

Subgroup intersection(const Subgroup &a, const Subgroup &b);

/// {ab : a in A, b in B} as a plain set.
ElementSet setwise_product(const Group &g, const ElementSet &a, const ElementSet &b);

/// Every operator subgroup, sorted by size then by member list. Throws
/// CapExceeded above limits.lattice.
SubgroupFamily enumerate_omega_subgroups(const Group &g, const Limits &limits = {});
/// The normal members of enumerate_omega_subgroups, same order.
SubgroupFamily enumerate_normal_omega_subgroups(const Group &g,
                                                const Limits &limits = {});

/// True iff g is nontrivial and its only normal operator subgroups are {1}
/// and g itself.
bool is_simple(const Group &g);
/// Same question for a subgroup regarded as an operator group in its own
/// right (normality relative to h, operators restricted to h).
bool is_simple(const Subgroup &h);

/// Simple normal operator subgroups of g in enumeration order.
SubgroupFamily simple_normal_subgroups(const Group &g, const Limits &limits = {});

/// Subgroup generated by a family of normal subgroups, computed as the setwise
/// product in list order and cross-checked against the closure of the union.
/// PreconditionError if an entry is not normal.
Subgroup join_normal(const SubgroupFamily &family);

/// Subgroup generated by the union of the family's members (no normality
/// requirement).
Subgroup join(const SubgroupFamily &family);

/// A subgroup re-materialized as a standalone group: its members in
/// ascending parent order become indices 0..|H|-1, operators restricted.
struct Embedding {
  Group group;
  OmegaMorphism inclusion;
  Subgroup image;

  /// A subgroup of the embedded group, mapped into the parent.
  Subgroup lift(const Subgroup &in_group) const;
  /// A parent subgroup contained in image, pulled back into the embedded group.
  Subgroup restrict(const Subgroup &in_parent) const;
};
Embedding as_group(const Subgroup &h);

Subgroup image(const OmegaMorphism &f, const Subgroup &h);
Subgroup image(const OmegaMorphism &f);
Subgroup kernel(const OmegaMorphism &f);
Subgroup preimage(const OmegaMorphism &f, const Subgroup &k);

} // namespace ogroup
