#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ogroup/decomposition.hpp"
#include "ogroup/morphism.hpp"

namespace ogroup {

/// All operator homomorphisms source -> target, sorted by their maps, each
/// flagged normal or not.
struct HomSet {
  Group source;
  Group target;
  std::vector<OmegaMorphism> morphisms;
  std::vector<bool> normal;

  std::size_t size() const { return morphisms.size(); }
  std::size_t normal_count() const;
};

/// Throws CapExceeded when the source is above limits.hom, PreconditionError
/// when the operator label sets differ.
HomSet enumerate_homs(const Group &source, const Group &target,
                      const Limits &limits = {});

/// True iff f carries every normal operator subgroup of its source onto a
/// normal operator subgroup of its target. Checked exhaustively over the
/// normal lattice of the source.
bool is_normal_morphism(const OmegaMorphism &f, const Limits &limits = {});
/// Same, with the source's normal operator subgroups supplied by the caller.
bool is_normal_morphism(const OmegaMorphism &f, const SubgroupFamily &source_normal);

/// A normal morphism restricted to the isotypical components of class s in
/// source and target, as a morphism between the re-materialized components.
/// PreconditionError if f is not normal.
OmegaMorphism component_of_morphism(const OmegaMorphism &f, const Certificate &s,
                                    const Limits &limits = {});

/// One normal morphism per class in the common support of two semisimple
/// groups.
struct ComponentVector {
  std::map<Certificate, OmegaMorphism> entries;
  bool operator==(const ComponentVector &) const = default;
};

/// Decomposes a normal morphism between semisimple groups into its component
/// morphisms over Sup(G) n Sup(G').
ComponentVector phi(const OmegaMorphism &f, const Limits &limits = {});

/// Reassembles a normal morphism G -> G' from its components: components
/// outside the common support are sent to 1, and the result is composed with
/// the inverse of the decomposition of G into its components.
OmegaMorphism phi_inverse(const Group &g, const Group &g2, const ComponentVector &v,
                          const Limits &limits = {});

/// Exhaustive check that phi is a bijection between normal morphisms G -> G'
/// and component vectors, for semisimple G and G'.
struct PhiCensus {
  std::size_t normal_homs = 0;
  /// Normal morphisms between the S-components, per class in the common
  /// support.
  std::map<Certificate, std::size_t> component_counts;
  /// Product of component_counts.
  std::size_t vectors = 0;
  /// Normal f with phi_inverse(phi(f)) == f.
  std::size_t forward_round_trips = 0;
  /// Component vectors v with phi(phi_inverse(v)) == v.
  std::size_t backward_round_trips = 0;
  /// Components of normal morphisms that are themselves normal.
  std::size_t normal_components = 0;
  std::size_t components_checked = 0;
  /// Only for endomorphisms: whether phi(g o f) is the componentwise
  /// composite of phi(g) and phi(f) for every pair. Not a claimed property.
  std::optional<bool> respects_composition;

  bool bijective() const {
    return normal_homs == vectors && forward_round_trips == normal_homs &&
           backward_round_trips == vectors;
  }
};

PhiCensus phi_census(const Group &g, const Group &g2, const Limits &limits = {});

} // namespace ogroup
