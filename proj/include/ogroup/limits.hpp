#pragma once

#include <cstddef>

namespace ogroup {

/// Order caps. Subgroup lattices and isomorphism search are exponential in the
/// group order, so every potentially expensive operation checks one of these.
struct Limits {
  /// Largest group any constructor (named, product, quotient) may produce.
  std::size_t construction = 64;
  /// Largest group whose subgroup lattice may be enumerated.
  std::size_t lattice = 24;
  /// Largest group for which a canonical certificate is computed.
  std::size_t certificate = 16;
  /// Largest source group for homomorphism enumeration.
  std::size_t hom = 16;
};

} // namespace ogroup
