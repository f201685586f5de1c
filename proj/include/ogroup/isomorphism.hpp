#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ogroup/group.hpp"
#include "ogroup/limits.hpp"
#include "ogroup/morphism.hpp"

namespace ogroup {

/// An operator isomorphism g -> h if one exists. Groups with different orders
/// or operator label sets are rejected immediately.
std::optional<OmegaMorphism> are_isomorphic(const Group &g, const Group &h);

/// Byte serialization of a group in its own labeling:
///
///   u32 order n
///   n*n x u32 table entries, row-major
///   u32 operator count k
///   k x { u32 label byte length, label bytes, n x u32 action entries }
///
/// All integers little-endian, operators sorted bytewise by label.
std::vector<std::uint8_t> encode_group(const Group &g);

/// Inverse of encode_group (validating). Throws PreconditionError on
/// malformed bytes.
Group decode_group(const std::vector<std::uint8_t> &bytes);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::vector<std::uint8_t> &bytes);

/// Canonical form of a group up to operator isomorphism: the encoding of the
/// relabeling (fixing index 0) whose table, then operator actions, are
/// lexicographically smallest. Two groups have equal certificates iff they are
/// operator-isomorphic.
class Certificate {
public:
  explicit Certificate(std::vector<std::uint8_t> encoding);

  const std::vector<std::uint8_t> &encoding() const { return encoding_; }
  /// SHA-256 of the encoding, hex.
  const std::string &digest() const { return digest_; }
  std::size_t order() const;
  /// The canonical representative as a group.
  Group group() const { return decode_group(encoding_); }

  friend bool operator==(const Certificate &a, const Certificate &b) {
    return a.encoding_ == b.encoding_;
  }
  friend std::strong_ordering operator<=>(const Certificate &a, const Certificate &b) {
    return a.encoding_ <=> b.encoding_;
  }

private:
  std::vector<std::uint8_t> encoding_;
  std::string digest_;
};

/// Throws CapExceeded above limits.certificate; callers then fall back to
/// pairwise are_isomorphic.
Certificate certificate(const Group &g, const Limits &limits = {});

/// Isomorphism test that uses certificates when both groups are within the
/// certificate cap and pairwise search otherwise.
bool same_class(const Group &g, const Group &h, const Limits &limits = {});

} // namespace ogroup
