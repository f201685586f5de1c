#pragma once

#include <optional>
#include <vector>

#include "ogroup/group.hpp"

namespace ogroup {

/// A total map between two groups with the same operator labels that preserves
/// products and commutes with every equally-labeled operator. The constructor
/// validates both conditions.
class OmegaMorphism {
public:
  OmegaMorphism(Group source, Group target, std::vector<Element> map);

  static OmegaMorphism identity(const Group &g);
  static OmegaMorphism null(const Group &source, const Group &target);

  const Group &source() const { return source_; }
  const Group &target() const { return target_; }
  const std::vector<Element> &map() const { return map_; }
  Element operator()(Element x) const { return map_[x]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  /// Image of a subset of the source, as a subset of the target.
  ElementSet image_of(const ElementSet &xs) const;

  friend bool operator==(const OmegaMorphism &a, const OmegaMorphism &b) {
    return a.map_ == b.map_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

private:
  struct Unchecked {};
  OmegaMorphism(Unchecked, Group source, Group target, std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  Group source_;
  Group target_;
  std::vector<Element> map_;

  friend OmegaMorphism compose(const OmegaMorphism &, const OmegaMorphism &);
  friend std::optional<OmegaMorphism> invert(const OmegaMorphism &);
};

/// Returns a description of the first violated morphism condition, or nothing.
std::optional<std::string> morphism_defect(const Group &source,
                                           const Group &target,
                                           const std::vector<Element> &map);

/// g after f. Throws PreconditionError if f.target() != g.source().
OmegaMorphism compose(const OmegaMorphism &g, const OmegaMorphism &f);

/// Inverse of a bijective morphism; nothing if f is not bijective.
std::optional<OmegaMorphism> invert(const OmegaMorphism &f);

} // namespace ogroup
