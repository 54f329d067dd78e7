#include "doctest.h"
#include "support.hpp"

#include "bwbverify/cli.hpp"

#include <sstream>

using namespace bwbverify;
using namespace testing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bwb subcommand") {
  CHECK(cli({"bwb", "w1+w6-4w2"}).out == "Acyclic (singular at vertex 4 after s2 s4 s3 s5)\n");
  CHECK(cli({"bwb", "[1,-4,0,0,0,1]"}).out == "Acyclic (singular at vertex 4 after s2 s4 s3 s5)\n");
  CHECK(cli({"bwb", "w1+w3+w5-3w2"}).out == "V^{w1}[-2] (w = s2 s4)\n");
  CHECK(cli({"bwb", "[0,0,0,0,0,0]"}).out == "C[0]\n");
  CHECK(cli({"bwb", "w4-2w2"}).out == "C[-1] (w = s2)\n");
  CHECK(cli({"bwb", "S^{w4}(-2)"}).out == "C[-1] (w = s2)\n");
  CHECK(cli({"bwb", "w1+w6-4w2"}).code == 0);
}

TEST_CASE("tensor, ext, dual, rank") {
  CHECK(cli({"tensor", "w6-w2", "w1"}).out == "O + S^{w1+w6}(-1)\n");
  CHECK(cli({"tensor", "w4", "w4"}).out == "S^{2w4} + S^{w3+w5}(1) + O(3) + S^{w1+w6}(2)\n");
  CHECK(cli({"tensor", "w1+w3", "0"}).out == "S^{w1+w3}\n");
  CHECK(cli({"ext", "O(1)", "S^{w4}(-1)"}).out == "C[-1]\n");
  CHECK(cli({"ext", "S^{w1}", "S^{w1}"}).out == "C[0]\n");
  CHECK(cli({"ext", "T~", "O"}).out == "C[0] + C[-1] (semisimplified, upper bound)\n");
  CHECK(cli({"ext", "O", "T~"}).out == "C[0] + V^{w2}[0] (semisimplified, exact)\n");
  CHECK(cli({"dual", "w1"}).out == "S^{w6}(-1)\n");
  CHECK(cli({"dual", "T~"}).out == "S^{w4}(-2) + O(-1) + O\n");
  CHECK(cli({"rank", "T~"}).out == "22\n");
  CHECK(cli({"rank", "w1+w6-w2"}).out == "35\n");
}

TEST_CASE("roots and korder") {
  const std::string roots = cli({"roots"}).out;
  CHECK(roots.find("positive roots: E6 36, A5 15") != std::string::npos);
  CHECK(roots.find("non-parabolic roots: 21") != std::string::npos);
  CHECK(roots.find("degree 1: 20 roots, highest -w2+w4") != std::string::npos);
  CHECK(roots.find("degree 2: 1 roots, highest w2") != std::string::npos);
  CHECK(cli({"korder"}).out == "|W(E6)| = 51840, |W(A5)| = 720, rank K_0 = 72, canonical index = 11\n");
}

TEST_CASE("weight literals round-trip through the printer") {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int n = 0; n < 300; ++n) {
    Weight w = zero_weight(6);
    for (int i = 0; i < 6; ++i) w(i) = c(rng);
    CHECK(parse_weight(format_weight(w), 6) == w);
    CHECK(parse_weight(bracket_string(w), 6) == w);
  }
  CHECK(parse_weight("w1+w6-4w2", 6) == parse_weight("[1,-4,0,0,0,1]", 6));
  CHECK(format_weight(parse_weight("w6-4w2+w1", 6)) == "w1-4w2+w6");
  CHECK(format_weight(zero_weight(6)) == "0");
  CHECK(parse_weight("1/2w1", 6)(0) == Rational(1, 2));
  CHECK_THROWS_AS(parse_weight("w7", 6), ParseError);
  CHECK_THROWS_AS(parse_weight("[1,2]", 6), ParseError);
  CHECK_THROWS_AS(parse_weight("w1++w2", 6), ParseError);
  std::mt19937 rng2(13);
  for (int n = 0; n < 200; ++n) {
    const Weight mu = random_bundle_weight(rng2, 3, -9, 9);
    CHECK(W(format_bundle(e6p2(), mu)) == mu);
  }
  CHECK(split_twist("T~(-1)") == std::pair<std::string, int>{"T~", -1});
  GradedVector g = parse_graded({"2*C[-1]", "V^{w1}[-2]", "C[0]"}, 6);
  CHECK(parse_graded({format_graded(g)}, 6) == g);
}

TEST_CASE("verify subcommand") {
  Run r = cli({"verify", "lemma-3.5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: verified (2 proven") != std::string::npos);

  r = cli({"verify", "lemma-3.7"});
  CHECK(r.code == 1);
  CHECK(r.out.find("verdict: refuted (425 proven, 31 refuted, 0 unknown of 456 required") != std::string::npos);

  r = cli({"verify", "lemma-3.6", "--format", "json"});
  CHECK(r.code == 1);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.at("verdict") == "refuted");
  CHECK(j.at("counts").at("refuted") == 1);

  r = cli({"verify", "main-theorem", "--format", "json", "--jobs", "4"});
  CHECK(r.code == 1);
  CHECK(r.out == cli({"verify", "main-theorem", "--format", "json"}).out);

  CHECK(cli({"verify", "lemma-4.4", "--jobs", "2"}).code == 0);
}

TEST_CASE("usage and domain errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"bwb"}).code == 2);
  CHECK(cli({"bwb", "w1+"}).code == 2);
  CHECK(cli({"bwb", "-w1"}).code == 2);
  CHECK(cli({"tensor", "w1", "w9"}).code == 2);
  CHECK(cli({"verify", "nonexistent-script"}).code == 2);
  CHECK(cli({"verify", "lemma-3.5", "--format", "xml"}).code == 2);
  CHECK(cli({"verify", "lemma-3.5", "--jobs", "0"}).code == 2);
  const Run r = cli({"bwb", "-w1"});
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(cli({"--help"}).code == 0);
}
