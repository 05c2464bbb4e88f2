#include "monocurve/cli.hpp"
#include "monocurve/serialize.hpp"
#include "monocurve/verify.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace monocurve;
using monocurve::testing::params_7_1_3;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "monocurve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Serialize, PolynomialTermsSortedDescending) {
  const auto c = params_7_1_3();
  const MonomialOrder ord(c);
  const auto j = to_json(ord, build_phi(c, 1, 2));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["coeff"], "1/1");
  EXPECT_EQ(j[0]["expo"], json({1, 1, 0, 0}));
  EXPECT_EQ(j[1]["coeff"], "-1/1");
  EXPECT_EQ(j[1]["expo"], json({0, 0, 1, 1}));
  EXPECT_EQ(polynomial_from_json(3, j), build_phi(c, 1, 2));
}

TEST(Serialize, RationalCoefficients) {
  Polynomial f(Monomial::of(3, {{1, 1}}), Rational(-3, 4));
  const MonomialOrder ord(params_7_1_3());
  const auto j = to_json(ord, f);
  EXPECT_EQ(j[0]["coeff"], "-3/4");
  EXPECT_EQ(polynomial_from_json(3, j), f);
  EXPECT_THROW(polynomial_from_json(2, j), DimensionError);
}

TEST(Serialize, ModuleElementRoundTrip) {
  const auto c = params_7_1_3();
  const ModuleOrder ord(c);
  for (const auto& s : build_G_hat(c).all()) {
    const auto j = to_json(ord, s.elem);
    EXPECT_EQ(module_element_from_json(3, j), s.elem) << s.name;
  }
  const auto j = to_json(ord, build_L(c, 1, 2, 2));
  EXPECT_EQ(j[0]["basis"], json({{"kind", "Phi"}, {"i", 2}, {"j", 2}}));
}

TEST(Serialize, GeneratorsDumpReverifiesIdentically) {
  for (const auto& c : {params_7_1_3(), make_params(13, 3, 5), make_params(8, 3, 2)}) {
    const auto dump = json::parse(generators_to_json(c).dump());
    const auto parsed_params = params_from_json(dump["params"]);
    ASSERT_EQ(parsed_params, c);
    std::vector<Polynomial> parsed;
    for (const auto& g : dump["G_prime"]) parsed.push_back(polynomial_from_json(c.p(), g["poly"]));
    const auto built = build_G_prime(c).polys();
    ASSERT_EQ(parsed, built);
    EXPECT_EQ(to_json(verify_groebner_set(parsed_params, parsed)),
              to_json(verify_groebner_set(c, built)));
    EXPECT_EQ(to_json(verify_minimality_set(parsed_params, parsed)),
              to_json(verify_minimality_set(c, built)));
  }
}

TEST(Serialize, SyzygyDumpReverifiesIdentically) {
  const auto c = params_7_1_3();
  const auto dump = json::parse(syzygies_to_json(c).dump());
  EXPECT_EQ(dump["counts"]["total"], 11);
  const auto built = build_G_hat(c).all();
  std::vector<LabeledSyzygy> parsed;
  for (std::size_t k = 0; k < built.size(); ++k) {
    const auto& m = dump["members"][k];
    parsed.push_back({m["label"], module_element_from_json(c.p(), m["element"]),
                      built[k].underlined});
    ASSERT_EQ(parsed.back().elem, built[k].elem);
  }
  EXPECT_EQ(to_json(verify_groebner_G_hat_with(c, parsed)),
            to_json(verify_groebner_G_hat_with(c, built)));
}

TEST(Serialize, ReportShape) {
  const auto j = to_json(verify_minimality(params_7_1_3()));
  EXPECT_EQ(j["status"], "pass");
  for (const auto& ch : j["checks"]) {
    EXPECT_TRUE(ch.contains("check"));
    EXPECT_TRUE(ch.contains("params"));
    EXPECT_EQ(ch["status"], "pass");
    EXPECT_FALSE(ch.contains("witness"));
  }
}

TEST(Cli, VerifyJson) {
  const auto r = run_cli({"verify", "--m0", "7", "--d", "1", "--p", "3", "--bound", "6", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["counts"]["G_hat"], 11);
  EXPECT_EQ(j["syzygy_members"], 11);
}

TEST(Cli, InfoRejectsCommonFactor) {
  const auto r = run_cli({"info", "--m0", "6", "--d", "2", "--p", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("gcd(m0,d) must be 1"), std::string::npos);
}

TEST(Cli, InfoShowsBothRelations) {
  const auto r = run_cli({"info", "--m0", "7", "--d", "1", "--p", "3", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["min_multiple_of_mp"]["search"], j["min_multiple_of_mp"]["closed_form"]);
  EXPECT_EQ(j["min_multiple_of_m0"]["search"], json({{"n", 4}, {"m", 2}, {"i", 1}}));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--m0", "7", "--d", "1"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--m0", "x", "--d", "1", "--p", "3"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--m0", "7", "--d", "1", "--p", "3", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--m0", "7", "--d", "1", "--p", "3", "--bound", "1"}).code, 2);
  EXPECT_EQ(run_cli({"sweep", "--p", "5..2"}).code, 2);
  EXPECT_EQ(run_cli({"info", "--m0", "3", "--d", "1", "--p", "3"}).code, 2);
}

TEST(Cli, GeneratorsAndSyzygiesDumps) {
  const auto g = run_cli({"generators", "--m0", "7", "--d", "1", "--p", "3", "--format", "json"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(json::parse(g.out)["G_prime"].size(), 6u);
  const auto s = run_cli({"syzygies", "--m0", "7", "--d", "1", "--p", "3"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("L(1;2,2)"), std::string::npos);
  EXPECT_NE(s.out.find("total 11"), std::string::npos);
}

TEST(Cli, SweepSkipsInvalidCombinations) {
  const auto r = run_cli({"sweep", "--p", "2..3", "--a", "1..2", "--b", "1..p", "--d", "1..2",
                          "--format", "json", "--threads", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = json::parse(r.out);
  const auto& summary = j["summary"];
  EXPECT_EQ(summary["failed"], 0);
  EXPECT_GT(summary["skipped"].get<int>(), 0);
  EXPECT_EQ(summary["passed"].get<int>() + summary["skipped"].get<int>(), 2 * 2 * 2 + 2 * 3 * 2);
  // Entries come back in index order regardless of scheduling.
  std::vector<std::tuple<int, int, int, int>> keys;
  for (const auto& e : j["entries"]) keys.emplace_back(e["p"], e["a"], e["b"], e["d"]);
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
}

TEST(Cli, SweepTextSummary) {
  const auto r = run_cli({"sweep", "--p", "2..2", "--a", "1..1", "--b", "1..p", "--d", "1..2",
                          "--no-syzygies"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS p=2 a=1 b=1 d=1"), std::string::npos);
  EXPECT_NE(r.out.find("SKIP p=2 a=1 b=2 d=2"), std::string::npos);
  EXPECT_NE(r.out.find("skipped"), std::string::npos);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "monocurve_cli_output.json";
  const auto r = run_cli({"verify", "--m0", "7", "--d", "1", "--p", "3", "--format", "json",
                          "--output", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(json::parse(in)["status"], "pass");
  std::filesystem::remove(path);
}

TEST(Cli, RangeParse) {
  const auto r = cli::Range::parse("1..p");
  EXPECT_EQ(r.lo, 1);
  EXPECT_TRUE(r.hi_is_p);
  EXPECT_EQ(r.upper(4), 4);
  const auto single = cli::Range::parse("3");
  EXPECT_EQ(single.lo, 3);
  EXPECT_EQ(single.hi, 3);
  EXPECT_THROW(cli::Range::parse("a..b"), std::invalid_argument);
  EXPECT_THROW(cli::Range::parse("4..1"), std::invalid_argument);
}
