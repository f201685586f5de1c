#include "ogroup/frontend/report.hpp"

#include <atomic>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "ogroup/decomposition.hpp"
#include "ogroup/homs.hpp"
#include "ogroup/isomorphism.hpp"

namespace ogroup::frontend {

namespace {

Json mask(const Subgroup &h) { return h.elements(); }

Json limits_json(const Limits &l) {
  return {{"construction", l.construction},
          {"lattice", l.lattice},
          {"certificate", l.certificate},
          {"hom", l.hom}};
}

Subgroup classical_socle(const SubgroupFamily &normal) {
  SubgroupFamily minimal(normal.parent());
  for (const Subgroup &n : normal) {
    if (n.is_trivial())
      continue;
    bool is_minimal = true;
    for (const Subgroup &m : normal)
      if (!m.is_trivial() && m.order() < n.order() && m.is_contained_in(n)) {
        is_minimal = false;
        break;
      }
    if (is_minimal)
      minimal.push_back(n);
  }
  return join_normal(minimal);
}

std::vector<std::uint8_t> bytes_of(const std::string &s) {
  return {s.begin(), s.end()};
}

} // namespace

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::string Cache::key_for(const Group &g) {
  auto bytes = bytes_of(report_format);
  bytes.push_back(0);
  auto enc = encode_group(g);
  bytes.insert(bytes.end(), enc.begin(), enc.end());
  return sha256_hex(bytes);
}

std::optional<Json> Cache::load(const std::string &key) const {
  std::ifstream in(dir_ / (key + ".json"));
  if (!in)
    return std::nullopt;
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded())
    return std::nullopt;
  return j;
}

void Cache::store(const std::string &key, const Json &value) const {
  static std::atomic<unsigned> counter{0};
  auto final_path = dir_ / (key + ".json");
  auto tmp = dir_ / (key + ".json.tmp." + std::to_string(::getpid()) + "." +
                     std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary);
    out << dump(value);
    if (!out)
      throw Error("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path);
}

Json analyze_group(const Group &g, const Limits &limits) {
  SubgroupFamily all = enumerate_omega_subgroups(g, limits);
  SubgroupFamily normal(g);
  for (const Subgroup &h : all)
    if (is_normal(h))
      normal.push_back(h);

  Decomposition d = decompose(g, limits);
  SemisimplicityEvidence e = is_semisimple(g, limits);
  SdrReport r = sdr_report(d.socle, d.component_family(), limits);

  Json j;
  j["order"] = g.order();
  j["abelian"] = g.is_abelian();
  j["operators"] = g.labels();
  j["subgroup_count"] = all.size();
  j["normal_subgroup_count"] = normal.size();
  j["normal_subgroups"] = Json::array();
  for (const Subgroup &h : normal)
    j["normal_subgroups"].push_back(mask(h));

  j["simple_normal_subgroups"] = Json::array();
  for (const Subgroup &h : d.simple_normal)
    j["simple_normal_subgroups"].push_back(
      {{"members", mask(h)},
       {"class", certificate(as_group(h).group, limits).digest()}});

  j["socle"] = mask(d.socle);
  j["socle_order"] = d.socle.order();
  j["classical_socle"] = {
    {"members", mask(classical_socle(normal))},
    {"note", "join of the minimal normal operator subgroups, for comparison; "
             "it can differ from the socle when a minimal normal subgroup is "
             "not simple"}};

  j["components"] = Json::object();
  for (const auto &[cert, h] : d.components)
    j["components"][cert.digest()] = mask(h);

  j["support"] = Json::array();
  for (const Certificate &c : d.support) {
    Group rep = c.group();
    j["support"].push_back(
      {{"digest", c.digest()}, {"order", rep.order()}, {"abelian", rep.is_abelian()}});
  }

  j["semisimple"] = {{"verdict", e.semisimple()},
                     {"socle_is_whole", e.socle_is_whole},
                     {"every_normal_is_summand", e.every_normal_is_summand},
                     {"simple_family_bijective", e.simple_family_bijective},
                     {"criteria_agree", e.consistent()}};

  j["socle_decomposition"] = {{"cc_holds", r.cc_holds},
                              {"mi_holds", r.mi_holds},
                              {"injective", r.injective},
                              {"surjective", r.surjective},
                              {"bijective", r.bijective}};
  return j;
}

Json analyze_group(const Group &g, const Limits &limits, const Cache *cache) {
  if (!cache)
    return analyze_group(g, limits);
  std::string key = Cache::key_for(g);
  if (auto hit = cache->load(key))
    return *hit;
  Json fresh = analyze_group(g, limits);
  cache->store(key, fresh);
  return fresh;
}

Json analyze_spec(const std::string &path, const std::string &text,
                  const Environment &env, const std::optional<std::string> &only,
                  const Limits &limits, const Cache *cache) {
  Json j;
  j["format"] = report_format;
  j["input"] = {{"path", path}, {"sha256", sha256_hex(bytes_of(text))}, {"text", text}};
  j["limits"] = limits_json(limits);
  j["certificates"] =
    "class digests are SHA-256 of the lexicographically least relabeled "
    "encoding of the group";
  j["groups"] = Json::array();
  for (const auto &[name, g] : env.groups()) {
    if (only && *only != name)
      continue;
    Json a = analyze_group(g, limits, cache);
    a["name"] = name;
    j["groups"].push_back(std::move(a));
  }
  return j;
}

Json hom_report(const std::string &source_name, const Group &source,
                const std::string &target_name, const Group &target,
                const Limits &limits) {
  HomSet hs = enumerate_homs(source, target, limits);
  bool ss_source = socle(source, limits).is_whole();
  bool ss_target = socle(target, limits).is_whole();

  Json j;
  j["format"] = report_format;
  j["source"] = {{"name", source_name}, {"order", source.order()}, {"semisimple", ss_source}};
  j["target"] = {{"name", target_name}, {"order", target.order()}, {"semisimple", ss_target}};
  j["homs"] = hs.size();
  j["normal_homs"] = hs.normal_count();
  j["limits"] = limits_json(limits);

  if (!ss_source || !ss_target) {
    j["phi"] = nullptr;
    return j;
  }
  PhiCensus c = phi_census(source, target, limits);
  Json counts = Json::object();
  Json common = Json::array();
  for (const auto &[cert, n] : c.component_counts) {
    counts[cert.digest()] = n;
    common.push_back(cert.digest());
  }
  j["phi"] = {{"common_support", common},
              {"component_normal_homs", counts},
              {"vectors", c.vectors},
              {"forward_round_trips", c.forward_round_trips},
              {"backward_round_trips", c.backward_round_trips},
              {"components_normal", c.normal_components == c.components_checked},
              {"bijective", c.bijective()}};
  if (c.respects_composition)
    j["phi"]["respects_composition"] = *c.respects_composition;
  else
    j["phi"]["respects_composition"] = nullptr;
  return j;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

} // namespace ogroup::frontend
