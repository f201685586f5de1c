#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ogroup/element_set.hpp"
#include "ogroup/limits.hpp"

namespace ogroup {

/// A labeled operator: an endomorphism of the group given pointwise.
struct Operator {
  std::string label;
  std::vector<Element> action;

  bool operator==(const Operator &) const = default;
};

/// A finite group with operators, stored as a Cayley table plus a labeled
/// family of endomorphisms. Element 0 is the identity.
///
/// Instances are immutable and cheap to copy (shared storage). Every instance
/// has passed the full axiom check of build_from_table, whatever constructor
/// produced it.
class Group {
public:
  /// The trivial group with no operators.
  Group();

  std::size_t order() const;

  Element multiply(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  Element inverse(Element a) const { return inverses_[a]; }
  /// g x g^-1
  Element conjugate(Element g, Element x) const {
    return multiply(multiply(g, x), inverse(g));
  }
  Element power(Element x, long long k) const;
  std::size_t element_order(Element x) const;

  /// Flat row-major table, size order()^2.
  std::span<const Element> table() const;
  std::span<const Element> inverses() const;

  /// Operators in declaration order.
  std::span<const Operator> operators() const;
  const Operator *find_operator(std::string_view label) const;
  /// Operator labels sorted bytewise.
  std::vector<std::string> labels() const;
  bool has_labels_of(const Group &other) const;

  const std::string &name() const;
  Group renamed(std::string name) const;

  bool is_abelian() const;

  /// Structural equality: same table and same operator list. Names are ignored.
  friend bool operator==(const Group &a, const Group &b);

private:
  struct Data;
  explicit Group(std::shared_ptr<const Data> data);

  std::shared_ptr<const Data> data_;
  // Hot-path views into data_.
  std::size_t n_ = 1;
  const Element *table_ = nullptr;
  const Element *inverses_ = nullptr;

  friend Group build_from_table(const std::vector<std::vector<Element>> &,
                                std::vector<Operator>, std::string);
  friend Group make_group(std::size_t, std::vector<Element>,
                          std::vector<Operator>, std::string);
};

/// Validates a table and operator list and returns the group. Checks, in this
/// order: squareness, entry range, identity at 0, inverses, associativity,
/// operator shape and label uniqueness, operator distributivity. Throws
/// InvalidGroup naming the first violated axiom.
Group build_from_table(const std::vector<std::vector<Element>> &table,
                       std::vector<Operator> operators = {},
                       std::string name = {});

/// Same validation, flat row-major input.
Group make_group(std::size_t order, std::vector<Element> table,
                 std::vector<Operator> operators = {}, std::string name = {});

enum class NamedKind { cyclic, symmetric, alternating, dihedral, klein4 };

/// Standard constructions. Element orders:
///  - cyclic n: index k is a^k.
///  - symmetric n / alternating n: permutations of {0..n-1} (even ones for
///    alternating) in lexicographic order of their image lists; product is
///    composition (p*q)(x) = p(q(x)).
///  - dihedral n (order 2n): index k < n is r^k, index n + k is s r^k, with
///    s r s = r^-1.
///  - klein4: {e, a, b, ab} with XOR multiplication; n is ignored.
/// Throws CapExceeded if the group order is above limits.construction.
Group build_named(NamedKind kind, std::size_t n, const Limits &limits = {});

/// Trivial group carrying the given labels, each acting as the identity.
Group trivial_group(const std::vector<std::string> &labels = {});

/// Adds one conjugation operator "inn<g>" (x -> g x g^-1) per element g,
/// keeping the existing operators. A label that already exists with the same
/// action is left alone; with a different action it is a PreconditionError.
Group with_inner_operators(const Group &g);

/// Returns a copy of g with one extra operator; validates distributivity.
Group with_operator(const Group &g, Operator op);

} // namespace ogroup
