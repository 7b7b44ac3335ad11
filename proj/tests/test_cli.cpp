#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chevhopf/cli.hpp"

using chevhopf::cli::Json;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = chevhopf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CHEVHOPF_DATA_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "chevhopf_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, ValidateSamples) {
  for (const char* f : {"sweedler.json", "sweedler_b4.json", "klein_polarized.json", "z4_w2.json"}) {
    const auto r = run({"validate", data(f)});
    EXPECT_EQ(r.code, 0) << f << r.err;
    EXPECT_TRUE(Json::parse(r.out)["ok"].get<bool>());
  }
}

TEST(Cli, BuildThenCheckIsDeterministic) {
  const auto p1 = scratch("a1.json"), p2 = scratch("a2.json");
  ASSERT_EQ(run({"build", data("sweedler.json"), "-o", p1.string()}).code, 0);
  ASSERT_EQ(run({"build", data("sweedler.json"), "-o", p2.string()}).code, 0);
  std::ifstream f1(p1), f2(p2);
  const std::string s1((std::istreambuf_iterator<char>(f1)), {}), s2((std::istreambuf_iterator<char>(f2)), {});
  EXPECT_EQ(s1, s2);
  const auto dump = Json::parse(s1);
  EXPECT_EQ(dump["dim"].get<int>(), 4);
  EXPECT_TRUE(dump["minimal"].get<bool>());
  EXPECT_TRUE(dump["pointed"].get<bool>());

  const auto c = run({"check", p1.string(), "--all"});
  EXPECT_EQ(c.code, 0) << c.out << c.err;
  const auto rep = Json::parse(c.out);
  EXPECT_EQ(rep["chevalley"]["radical_dim"].get<int>(), 2);
  EXPECT_TRUE(rep["minimal"].get<bool>());
  EXPECT_TRUE(rep["drinfeld_squared_is_unit"].get<bool>());
}

TEST(Cli, CheckReportsNonMinimal) {
  const auto p = scratch("z4.json");
  ASSERT_EQ(run({"build", data("z4_w2.json"), "-o", p.string()}).code, 0);
  const auto rep = Json::parse(run({"check", p.string(), "--minimal"}).out);
  EXPECT_FALSE(rep["minimal"].get<bool>());
}

TEST(Cli, CheckDetectsBrokenAxiom) {
  const auto p = scratch("broken.json");
  ASSERT_EQ(run({"build", data("sweedler.json"), "-o", p.string()}).code, 0);
  std::ifstream in(p);
  Json j = Json::parse(in);
  j["counit"][0] = "2";
  const auto q = scratch("broken2.json");
  write(q, j.dump());
  EXPECT_EQ(run({"check", q.string(), "--axioms"}).code, 1);
}

TEST(Cli, IsoConvertEnumerate) {
  const auto iso = run({"iso", data("sweedler.json"), data("sweedler_b4.json")});
  EXPECT_EQ(iso.code, 0);
  EXPECT_EQ(Json::parse(iso.out)["witness"]["B_match"], "scalar");
  EXPECT_EQ(run({"iso", data("sweedler.json"), data("z4_w2.json")}).code, 1);

  const auto t2 = run({"convert", "--t1-to-t2", data("sweedler.json")});
  ASSERT_EQ(t2.code, 0) << t2.err;
  const auto p = scratch("t2.json");
  write(p, t2.out);
  const auto t1 = run({"convert", "--t2-to-t1", p.string()});
  ASSERT_EQ(t1.code, 0) << t1.err;
  const auto q = scratch("t1.json");
  write(q, t1.out);
  EXPECT_EQ(run({"iso", q.string(), data("sweedler.json")}).code, 0);

  const auto e = run({"enumerate", "--group", "2,2", "--max-n", "2", "--json"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(Json::parse(e.out).size(), 5u);
  EXPECT_EQ(e.out, run({"enumerate", "--group", "2,2", "--max-n", "2", "--json"}).out);
  EXPECT_NE(run({"enumerate", "--group", "2", "--max-n", "1"}).out.find("2 classes"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  const auto p = scratch("garbage.json");
  write(p, "{ not json");
  EXPECT_EQ(run({"validate", p.string()}).code, 2);
  EXPECT_EQ(run({"validate", scratch("missing.json").string()}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  write(p, R"({"group": {"abelian_invariants": [2]}, "W": {"dim": 1, "matrices": {"1": [["1"]]}}, "u": 1})");
  EXPECT_EQ(run({"validate", p.string()}).code, 1);
  EXPECT_EQ(run({"enumerate", "--group", "2,x", "--max-n", "1"}).code, 2);
  EXPECT_EQ(run({"enumerate", "--group", "4,4,4", "--max-n", "1"}).code, 3);

  ::setenv("HOPF_MAX_DIM", "2", 1);
  const auto r = run({"build", data("sweedler.json")});
  ::unsetenv("HOPF_MAX_DIM");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("TooLarge"), std::string::npos);
}
