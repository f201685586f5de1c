#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "ogroup/frontend/spec.hpp"
#include "ogroup/group.hpp"
#include "ogroup/limits.hpp"

namespace ogroup::frontend {

using Json = nlohmann::json;

inline constexpr const char *report_format = "ogroup-report/1";

/// Directory of analysis results keyed by the digest of a group's encoding.
/// Writes go to a temporary file that is renamed into place.
class Cache {
public:
  explicit Cache(std::filesystem::path dir);

  static std::string key_for(const Group &g);

  std::optional<Json> load(const std::string &key) const;
  void store(const std::string &key, const Json &value) const;
  const std::filesystem::path &dir() const { return dir_; }

private:
  std::filesystem::path dir_;
};

/// Structural analysis of one group (no name): lattice counts, simple normal
/// subgroups, socle, components, support, semisimplicity evidence. Subgroups
/// appear as ascending element lists, classes as certificate digests.
Json analyze_group(const Group &g, const Limits &limits = {});

/// analyze_group through the cache when one is given.
Json analyze_group(const Group &g, const Limits &limits, const Cache *cache);

/// Report for a whole spec file, or for one named group of it.
Json analyze_spec(const std::string &path, const std::string &text,
                  const Environment &env, const std::optional<std::string> &only,
                  const Limits &limits, const Cache *cache);

/// Hom-set statistics, plus the phi census when both groups are semisimple.
Json hom_report(const std::string &source_name, const Group &source,
                const std::string &target_name, const Group &target,
                const Limits &limits = {});

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string dump(const Json &j);

} // namespace ogroup::frontend
