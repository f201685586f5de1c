#pragma once

#include <span>
#include <vector>

#include "ogroup/group.hpp"
#include "ogroup/limits.hpp"
#include "ogroup/morphism.hpp"
#include "ogroup/subgroup.hpp"

namespace ogroup {

/// A direct product together with its canonical injections and projections.
///
/// Product elements are tuples indexed in mixed radix with the first factor
/// most significant, so the identity tuple is index 0 and indices enumerate
/// tuples in lexicographic order.
struct ProductWitness {
  Group product;
  std::vector<Group> factors;
  std::vector<OmegaMorphism> injections;
  std::vector<OmegaMorphism> projections;

  Element index_of(std::span<const Element> tuple) const;
  std::vector<Element> tuple_of(Element x) const;

  /// Product subgroup H_1 x ... x H_k, one subgroup per factor.
  Subgroup product_of(std::span<const Subgroup> parts) const;
};

/// Direct product of a finite family; for finite index sets this is the
/// restricted direct sum. Operators act componentwise; all factors must carry
/// the same label set (the operator order of the first factor is kept). The
/// empty family gives the trivial group carrying `empty_labels`.
ProductWitness direct_product(std::span<const Group> family,
                              const Limits &limits = {},
                              const std::vector<std::string> &empty_labels = {});

struct Quotient {
  Group group;
  OmegaMorphism projection;
};

/// G/N for a normal operator subgroup N. Cosets are indexed by ascending
/// minimal member, so the identity coset is 0; operators descend to cosets.
Quotient quotient(const Subgroup &n);

} // namespace ogroup
