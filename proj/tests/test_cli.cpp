#include <doctest.h>

#include <cstdlib>
#include <regex>

#include "chroma/io.hpp"
#include "cli_harness.hpp"

using namespace chroma;
using chroma::testing::run_cli;
using chroma::testing::slurp;
using chroma::testing::TempDir;
using io::json;

namespace {

const char* kTwoFar = R"({"diameter": 1.0, "disks": [
  {"x": 0, "y": 0, "color": 0}, {"x": 2, "y": 0, "color": 1}]})";

const char* kConcentric = R"({"diameter": 1.0, "disks": [
  {"x": 0, "y": 0, "color": 0}, {"x": 0, "y": 0, "color": 1}]})";

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("solve smcsc on two far disks") {
    TempDir dir;
    const auto in = dir.write("two.json", kTwoFar);
    const auto r = run_cli({"solve", "smcsc", "-i", in});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "solve smcsc");
    CHECK(j["radius"].get<double>() == 0.5);
    CHECK(j["center"] == json::array({1.0, 0.0}));
    CHECK(j["realization"][0]["x"].get<double>() == 0.5);
    CHECK(j["realization"][1]["x"].get<double>() == 1.5);
  }

  TEST_CASE("solve lmcsc on concentric disks") {
    TempDir dir;
    const auto in = dir.write("conc.json", kConcentric);
    const auto out = dir.file("sol.json");
    const auto r = run_cli({"solve", "lmcsc", "-i", in, "-o", out, "--samples", "50", "--seed", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const json j = json::parse(slurp(out));
    CHECK(j["certificate"]["branch"] == "grid");
    CHECK(j["certificate"]["factor"].get<double>() == 0.5);
    CHECK(j["radius"].get<double>() == 0.25);
    CHECK(j["oracle"]["samples"] == 50);
    CHECK(j["oracle"]["radius"].get<double>() <= 0.5);
  }

  TEST_CASE("solve mcsc on a points file") {
    TempDir dir;
    const auto in = dir.write("pts.json", R"({"points": [
      {"x": 0, "y": 0, "color": 0}, {"x": 1, "y": 0, "color": 1}]})");
    const auto r = run_cli({"solve", "mcsc", "-i", in});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["radius"].get<double>() == 0.5);
    CHECK(j["center"] == json::array({0.5, 0.0}));
  }

  TEST_CASE("stack realization passes the pdelta check at 9/8") {
    TempDir dir;
    const auto pts = dir.file("stack.json");
    REQUIRE(run_cli({"gen", "stack", "--realization", "L", "-o", pts}).code == 0);
    auto r = run_cli({"check", "pdelta", "-i", pts, "--delta", "1.125"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["min_cross_color_distance"].get<double>() == 1.125);

    r = run_cli({"check", "pdelta", "-i", pts, "--delta", "1.2"});
    CHECK(r.code == 1);
    j = json::parse(r.out);
    CHECK(j["pass"] == false);
    CHECK(j["violating_pairs"].size() == 2);
  }

  TEST_CASE("pdelta check accepts solution files") {
    TempDir dir;
    const auto in = dir.write("two.json", kTwoFar);
    const auto sol = dir.file("sol.json");
    REQUIRE(run_cli({"solve", "smcsc", "-i", in, "-o", sol}).code == 0);
    const auto r = run_cli({"check", "pdelta", "-i", sol, "--delta", "1.0"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["min_cross_color_distance"].get<double>() == 1.0);
  }

  TEST_CASE("generators") {
    auto r = run_cli({"gen", "random", "--n", "10", "--k", "3", "--seed", "5"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["diameter"].get<double>() == 1.0);
    CHECK(j["disks"].size() == 10);
    CHECK(run_cli({"gen", "random", "--n", "10", "--k", "3", "--seed", "5"}).out == r.out);

    r = run_cli({"gen", "tight", "--epsilon", "0.05", "--far-blue", "2"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["annotations"]["gadget"] == "tightness");
    const io::InstanceFile f = io::parse_instance(j);
    CHECK(f.instance.k == 2);

    r = run_cli({"gen", "stack", "--cx", "1", "--cy", "2", "--pattern", "RBR"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    const std::size_t middle = j["annotations"]["parts"]["middle"];
    CHECK(j["disks"][middle]["x"].get<double>() == 1.0);
    CHECK(j["disks"][middle]["y"].get<double>() == 2.0);
    CHECK(j["disks"][middle]["color"] == 1);

    r = run_cli({"gen", "clause", "--gx", "3"});
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    const std::size_t blue = j["annotations"]["parts"]["blue"];
    CHECK(j["disks"][blue]["x"].get<double>() == 3.0);
    CHECK(j["annotations"]["t_anchors"].size() == 3);
  }

  TEST_CASE("exit codes") {
    TempDir dir;
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"solve"}).code == 2);
    CHECK(run_cli({"solve", "smcsc", "-i", dir.file("missing.json")}).code == 2);
    CHECK(run_cli({"solve", "smcsc", "-i", dir.write("bad.json", "{not json")}).code == 2);
    CHECK(run_cli({"solve", "mcsc", "-i", dir.write("disks.json", kTwoFar)}).code == 2);

    const auto wrong_diameter = dir.write("d2.json", R"({"diameter": 2, "disks": [{"x":0,"y":0,"color":0}]})");
    CHECK(run_cli({"solve", "smcsc", "-i", wrong_diameter}).code == 1);
    const auto gap = dir.write("gap.json", R"({"diameter": 1, "disks": [
      {"x":0,"y":0,"color":0}, {"x":1,"y":0,"color":2}]})");
    const auto r = run_cli({"solve", "lmcsc", "-i", gap});
    CHECK(r.code == 1);
    CHECK(r.err.find("color 1") != std::string::npos);

    CHECK(run_cli({"gen", "random", "--n", "2", "--k", "3"}).code == 2);
    CHECK(run_cli({"gen", "stack", "--pattern", "XYZ"}).code == 2);
    CHECK(run_cli({"oracle", "lmcsc", "-i", dir.write("t.json", kTwoFar), "--samples", "0", "--seed", "1"}).code == 2);
  }

  TEST_CASE("tolerance from the environment") {
    TempDir dir;
    // Centers 1 + 1e-7 apart: the check fails at the default eps but
    // passes with eps = 1e-6.
    const auto pts = dir.write("near.json", R"({"points": [
      {"x": 0, "y": 0, "color": 0}, {"x": 1.0, "y": 0, "color": 1}]})");
    CHECK(run_cli({"check", "pdelta", "-i", pts, "--delta", "1.0000001"}).code == 1);
    ::setenv("CHROMA_EPS", "1e-6", 1);
    CHECK(run_cli({"check", "pdelta", "-i", pts, "--delta", "1.0000001"}).code == 0);
    ::setenv("CHROMA_EPS", "-1", 1);
    CHECK(run_cli({"check", "pdelta", "-i", pts, "--delta", "1"}).code == 2);
    ::setenv("CHROMA_EPS", "abc", 1);
    CHECK(run_cli({"check", "pdelta", "-i", pts, "--delta", "1"}).code == 2);
    ::unsetenv("CHROMA_EPS");
  }

  TEST_CASE("svg output") {
    TempDir dir;
    const auto inst = dir.file("inst.json");
    REQUIRE(run_cli({"gen", "random", "--n", "7", "--k", "3", "--seed", "2", "-o", inst}).code == 0);
    for (const char* cmd : {"smcsc", "lmcsc"}) {
      const auto svg = dir.file(std::string(cmd) + ".svg");
      REQUIRE(run_cli({"solve", cmd, "-i", inst, "--svg", svg}).code == 0);
      const std::string text = slurp(svg);
      CHECK(text.find("<svg") != std::string::npos);
      CHECK(text.find("</svg>") != std::string::npos);
      CHECK(count(text, "<circle") == 8);
      CHECK(count(text, "<rect") == 7);
      CHECK(std::regex_search(text, std::regex(R"(viewBox="[-0-9.e ]+")")));
    }
  }

  TEST_CASE("solution files are byte-identical across permutations and workers") {
    TempDir dir;
    const auto a = dir.write("a.json", R"({"diameter": 1, "disks": [
      {"x": 0, "y": 0, "color": 0}, {"x": 3, "y": 1, "color": 1},
      {"x": 1, "y": 4, "color": 2}, {"x": 2, "y": 2, "color": 0}]})");
    const auto b = dir.write("b.json", R"({"diameter": 1, "disks": [
      {"x": 2, "y": 2, "color": 0}, {"x": 1, "y": 4, "color": 2},
      {"x": 0, "y": 0, "color": 0}, {"x": 3, "y": 1, "color": 1}]})");
    for (const char* cmd : {"smcsc", "lmcsc"}) {
      const auto base = run_cli({"solve", cmd, "-i", a, "--samples", "40", "--seed", "9"});
      REQUIRE(base.code == 0);
      for (const char* w : {"1", "2", "5"}) {
        CHECK(run_cli({"solve", cmd, "-i", b, "--samples", "40", "--seed", "9", "--workers", w}).out == base.out);
      }
    }
  }
}
