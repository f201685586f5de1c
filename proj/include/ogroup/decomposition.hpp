#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ogroup/constructions.hpp"
#include "ogroup/isomorphism.hpp"
#include "ogroup/limits.hpp"
#include "ogroup/subgroup.hpp"

namespace ogroup {

/// Isomorphism classes of simple operator groups, as certificates.
using SupportSet = std::set<Certificate>;

/// Join of all simple normal operator subgroups.
Subgroup socle(const Group &g, const Limits &limits = {});

/// Join of the simple normal operator subgroups whose class is `s`.
Subgroup isotypical_component(const Group &g, const Certificate &s,
                              const Limits &limits = {});
/// As above; PreconditionError unless s is a simple operator group.
Subgroup isotypical_component(const Group &g, const Group &s,
                              const Limits &limits = {});

SupportSet support(const Group &g, const Limits &limits = {});

/// True iff members of distinct entries commute elementwise.
bool check_cc(const SubgroupFamily &family);

/// The canonical morphism from the direct product of the members (each
/// re-materialized as a standalone group) into the parent, sending a tuple to
/// the ordered product of its entries.
struct Theta {
  ProductWitness product;
  std::vector<Embedding> members;
  OmegaMorphism map;
};

/// PreconditionError if the family does not satisfy check_cc.
Theta theta(const SubgroupFamily &family, const Limits &limits = {});

/// Injectivity/surjectivity of theta relative to an ambient subgroup that
/// contains every member. Injectivity is computed from theta and from mutual
/// independence, surjectivity from theta's image and from the generated
/// subgroup; the two routes disagreeing is an InternalError.
struct SdrReport {
  Subgroup ambient;
  SubgroupFamily family;
  bool cc_holds = false;
  std::optional<Theta> theta;
  bool injective = false;
  bool surjective = false;
  bool bijective = false;
  /// Each member meets the subgroup generated by the others trivially.
  bool mi_holds = false;
  /// The members generate the ambient subgroup.
  bool generates = false;
};

SdrReport sdr_report(const SubgroupFamily &family, const Limits &limits = {});
SdrReport sdr_report(const Subgroup &ambient, const SubgroupFamily &family,
                     const Limits &limits = {});

/// First normal operator subgroup K (enumeration order) with F n K = {1} and
/// FK = G. When G is semisimple the result is also checked against the
/// supplement built by greedy_refine. PreconditionError if F is not normal.
std::optional<Subgroup> find_supplementary(const Subgroup &f,
                                           const Limits &limits = {});

/// The three equivalent characterizations of semisimplicity, each evaluated
/// on its own.
struct SemisimplicityEvidence {
  /// G equals its socle. This is the verdict.
  bool socle_is_whole = false;
  /// Every normal operator subgroup has a supplementary.
  bool every_normal_is_summand = false;
  /// Some family of simple normal subgroups (found greedily) gives a
  /// bijective theta onto G.
  bool simple_family_bijective = false;

  bool semisimple() const { return socle_is_whole; }
  bool consistent() const {
    return socle_is_whole == every_normal_is_summand &&
           socle_is_whole == simple_family_bijective;
  }
};

SemisimplicityEvidence is_semisimple(const Group &g, const Limits &limits = {});

/// Given a normal F and simple normal H_0..H_k-1 generating G together with F,
/// returns indices J (ascending) such that F together with (H_j) for j in J
/// is a direct decomposition of G. Scans i upward and keeps H_i when it meets
/// the product accumulated so far trivially; the result is re-verified with
/// sdr_report.
std::vector<std::size_t> greedy_refine(const Subgroup &f, const SubgroupFamily &h,
                                       const Limits &limits = {});

struct Decomposition {
  Group parent;
  Subgroup socle;
  SubgroupFamily simple_normal;
  /// Nontrivial isotypical components keyed by class.
  std::map<Certificate, Subgroup> components;
  SupportSet support;

  /// Components in key order, as a family.
  SubgroupFamily component_family() const;
};

/// Socle, simple normal subgroups, components and support; verifies that the
/// components decompose the socle directly before returning.
Decomposition decompose(const Group &g, const Limits &limits = {});

} // namespace ogroup
