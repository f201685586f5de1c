#pragma once

#include <optional>
#include <vector>

#include "ogroup/group.hpp"

namespace ogroup::detail {

/// Short generating sequence of g as a plain group: greedily picks the element
/// whose adjunction gives the largest subgroup, ties to the smaller index.
std::vector<Element> generating_sequence(const Group &g);

/// Extends generator images to a plain group homomorphism source -> target by
/// walking the Cayley graph; nothing if the images are inconsistent.
std::optional<std::vector<Element>> extend_to_hom(const Group &source,
                                                  const Group &target,
                                                  const std::vector<Element> &gens,
                                                  const std::vector<Element> &images);

/// True iff map commutes with every operator (labels must match).
bool commutes_with_operators(const Group &source, const Group &target,
                             const std::vector<Element> &map);

} // namespace ogroup::detail
