#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ogroup/frontend/cli.hpp"
#include "ogroup/frontend/report.hpp"

using namespace ogroup::frontend;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

fs::path write_spec(const std::string &name, const std::string &text) {
  fs::path dir = fs::temp_directory_path() / "ogroup-cli-test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

const fs::path golden = OGROUP_GOLDEN_DIR;

} // namespace

TEST(Cli, CounterexampleGolden) {
  Outcome r = run({"counterexample"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(golden / "counterexample.txt"));

  Outcome j = run({"counterexample", "--json"});
  EXPECT_EQ(j.code, 0);
  Json parsed = Json::parse(j.out);
  EXPECT_EQ(parsed["product_socle_order"], 9);
  EXPECT_EQ(parsed["diagonal_normal_in_product"], false);
  EXPECT_EQ(parsed["diagonal_simple_normal_in_socle"], true);
}

TEST(Cli, AnalyzeGolden) {
  fs::path spec = golden / "rotation.ogs";
  Outcome r = run({"analyze", spec.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  Json got = Json::parse(r.out);
  got["input"].erase("path");
  EXPECT_EQ(dump(got), slurp(golden / "rotation.json"));
}

TEST(Cli, AnalyzeIsByteIdentical) {
  fs::path spec = write_spec("det.ogs", "group s = symmetric 3\ngroup p = product s s\n");
  fs::path a = spec.parent_path() / "a.json", b = spec.parent_path() / "b.json";
  EXPECT_EQ(run({"--lattice-cap", "36", "analyze", spec.string(), "--json", a.string()}).code, 0);
  EXPECT_EQ(run({"--lattice-cap", "36", "analyze", spec.string(), "--json", b.string()}).code, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST(Cli, CachedRunMatchesFresh) {
  fs::path spec = write_spec("cache.ogs", "group d = dihedral 6\ngroup c = cyclic 12\n");
  fs::path dir = spec.parent_path() / "cache";
  fs::remove_all(dir);
  Outcome fresh = run({"analyze", spec.string()});
  Outcome first = run({"--cache", dir.string(), "analyze", spec.string()});
  Outcome second = run({"--cache", dir.string(), "analyze", spec.string()});
  EXPECT_EQ(fresh.out, first.out);
  EXPECT_EQ(fresh.out, second.out);
  EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator()), 2);
}

TEST(Cli, TrivialGroupReport) {
  fs::path spec = write_spec("trivial.ogs", "group t = cyclic 1\n");
  Outcome r = run({"analyze", spec.string(), "--group", "t"});
  ASSERT_EQ(r.code, 0);
  Json g = Json::parse(r.out)["groups"][0];
  EXPECT_TRUE(g["support"].empty());
  EXPECT_TRUE(g["semisimple"]["verdict"].get<bool>());
}

TEST(Cli, Homs) {
  fs::path spec = write_spec("homs.ogs", "group a = cyclic 6\ngroup b = symmetric 3\n");
  Outcome r = run({"homs", spec.string(), "--from", "a", "--to", "a"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["homs"], 6);
  EXPECT_EQ(j["normal_homs"], 6);
  EXPECT_EQ(j["phi"]["vectors"], 6);
  EXPECT_TRUE(j["phi"]["bijective"].get<bool>());

  Outcome s = run({"homs", spec.string(), "--from", "b", "--to", "b"});
  ASSERT_EQ(s.code, 0);
  Json k = Json::parse(s.out);
  EXPECT_EQ(k["homs"], 10);
  EXPECT_EQ(k["normal_homs"], 7);
  EXPECT_TRUE(k["phi"].is_null());
}

TEST(Cli, InputErrors) {
  fs::path bad = write_spec("bad.ogs", "group b = table [[0,1],[1,1]]\n");
  Outcome r = run({"analyze", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("no inverse for element 1"), std::string::npos);

  Outcome j = run({"analyze", bad.string(), "--json", (bad.parent_path() / "o.json").string()});
  EXPECT_EQ(j.code, 2);
  Json e = Json::parse(j.err);
  EXPECT_EQ(e["error"]["kind"], "semantic");
  EXPECT_EQ(e["error"]["line"], 1);

  EXPECT_EQ(run({"analyze", "/nonexistent/x.ogs"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  fs::path ok = write_spec("ok.ogs", "group a = cyclic 2\n");
  EXPECT_EQ(run({"homs", ok.string(), "--from", "a", "--to", "zz"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CapExceeded) {
  fs::path spec = write_spec("cap.ogs", "group s = symmetric 4\n");
  Outcome r = run({"--lattice-cap", "12", "analyze", spec.string(), "--json",
               (spec.parent_path() / "cap.json").string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(Json::parse(r.err)["error"]["kind"], "cap");
  fs::path big = write_spec("big.ogs", "group s = symmetric 6\n");
  EXPECT_EQ(run({"analyze", big.string()}).code, 3);
}

TEST(Cli, VerifySuiteOutputIndependentOfJobs) {
  Outcome one = run({"verify", "--suite", "lemma", "--max-order", "8", "--jobs", "1"});
  Outcome four = run({"verify", "--suite", "lemma", "--max-order", "8", "--jobs", "4"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, four.out);
  EXPECT_NE(one.out.find("verify: PASS"), std::string::npos);
}
