#include <sstream>

#include <gtest/gtest.h>

#include "acd/verifier/report.hpp"

using namespace acd;

namespace {

GroupAnalysis analyze(std::string_view spec) {
  auto rg = build(spec);
  return GroupAnalysis(rg.recipe.to_string(), rg.group);
}

PermGroup normal_of_order(const RecipeGroup& rg, std::uint64_t order) {
  for (const auto& n : rg.normal_subgroups)
    if (n.order() == order) return n;
  throw std::runtime_error("no recipe normal subgroup of that order");
}

}  // namespace

TEST(Decide, Table) {
  EXPECT_EQ(decide(false, false), Verdict::vacuous);
  EXPECT_EQ(decide(false, true), Verdict::vacuous);
  EXPECT_EQ(decide(true, true), Verdict::confirmed);
  EXPECT_EQ(decide(true, false), Verdict::violation);
  EXPECT_STREQ(verdict_name(Verdict::violation), "VIOLATION");
}

TEST(NormalSylowCheck, Examples) {
  auto s3 = analyze("sym:3");
  auto o = check_theorem_A(s3, 3);
  EXPECT_EQ(o.acd, 1);
  EXPECT_EQ(o.threshold, Rational(3, 2));
  EXPECT_EQ(o.verdict, Verdict::confirmed);

  o = check_theorem_A(s3, 2);
  EXPECT_EQ(o.acd, Rational(4, 3));
  EXPECT_FALSE(o.hypothesis_met);
  EXPECT_FALSE(o.conclusion_holds);
  EXPECT_TRUE(o.boundary);
  EXPECT_EQ(o.verdict, Verdict::vacuous);

  auto agl = analyze("agl1:11");
  o = check_theorem_A(agl, 5);
  EXPECT_EQ(o.acd, Rational(20, 11));
  EXPECT_TRUE(o.boundary);
  EXPECT_FALSE(o.conclusion_holds);
  EXPECT_EQ(o.verdict, Verdict::vacuous);
}

TEST(SolvableResidualCheck, Examples) {
  auto a5 = analyze("alt:5");
  auto o = check_theorem_B(a5, 2);
  EXPECT_EQ(o.acd, Rational(5, 2));
  EXPECT_TRUE(o.boundary);
  EXPECT_FALSE(o.conclusion_holds);
  EXPECT_EQ(o.verdict, Verdict::vacuous);

  auto l27 = analyze("psl2:7");
  o = check_theorem_B(l27, 7);
  EXPECT_EQ(o.acd, 4);
  EXPECT_TRUE(o.boundary);
  EXPECT_FALSE(o.conclusion_holds);

  auto s4 = analyze("sym:4");
  o = check_theorem_B(s4, 2);
  EXPECT_EQ(o.acd, Rational(4, 3));
  EXPECT_TRUE(o.hypothesis_met);
  EXPECT_TRUE(o.conclusion_holds);
  EXPECT_EQ(o.verdict, Verdict::confirmed);
}

TEST(ItoMichlerCheck, Examples) {
  auto c6 = analyze("cyclic:6");
  auto o = check_ito_michler(c6, 2);
  EXPECT_EQ(o.acd, 1);
  EXPECT_EQ(o.verdict, Verdict::confirmed);
  EXPECT_EQ(o.note, "acd=1: yes, abelian normal Sylow: yes");

  auto s4 = analyze("sym:4");
  o = check_ito_michler(s4, 2);
  EXPECT_GT(o.acd, 1);
  EXPECT_EQ(o.note, "acd=1: no, abelian normal Sylow: no");
  EXPECT_EQ(o.verdict, Verdict::confirmed);

  auto rg = build("extraspecial:3xcyclic:2");
  GroupAnalysis e(rg.recipe.to_string(), rg.group, 0, degree_spectrum(std::span<const PermGroup>(rg.factors)));
  o = check_ito_michler(e, 3);
  EXPECT_GT(o.acd, 1);
  EXPECT_TRUE(is_normal(e.group(), e.sylow(3)));
  EXPECT_FALSE(e.sylow(3).is_abelian());
  EXPECT_EQ(o.verdict, Verdict::confirmed);
}

TEST(SubsetCheck, Examples) {
  auto rg = build("sym:4");
  GroupAnalysis s4("sym:4", rg.group);
  auto o = check_subset_lemma(s4, normal_of_order(rg, 4), 2);
  ASSERT_TRUE(o);
  EXPECT_EQ(o->acd, Rational(4, 3));
  EXPECT_TRUE(o->hypothesis_met);
  EXPECT_TRUE(o->conclusion_holds);
  EXPECT_NE(o->note.find("quotient acd 4/3"), std::string::npos);

  o = check_subset_lemma(s4, PermGroup::trivial(4), 2);
  ASSERT_TRUE(o);
  EXPECT_EQ(o->verdict, Verdict::confirmed);
  EXPECT_NE(o->note.find("quotient acd 4/3"), std::string::npos);

  o = check_subset_lemma(s4, normal_of_order(rg, 12), 2);
  ASSERT_TRUE(o);
  EXPECT_EQ(o->verdict, Verdict::confirmed);
  EXPECT_NE(o->note.find("quotient acd 1/1"), std::string::npos);
}

TEST(SubsetCheck, SkipsOutsideDerivedSubgroup) {
  auto rg = build("sym:3xcyclic:2");
  GroupAnalysis a(rg.recipe.to_string(), rg.group);
  // The C_2 factor is normal but not inside G'.
  PermGroup c2 = normal_of_order(rg, 2);
  EXPECT_FALSE(check_subset_lemma(a, c2, 2).has_value());
}

TEST(OrbitCheck, Examples) {
  auto agl = build("agl1:11");
  GroupAnalysis a("agl1:11", agl.group);
  auto sizes = dual_orbit_sizes(*agl.split);
  EXPECT_EQ(sizes, (std::vector<std::uint64_t>{10}));
  auto o = check_orbit_lemma("agl1:11", *agl.split, a.acd(5), 5);
  EXPECT_EQ(o.verdict, Verdict::confirmed);
  EXPECT_TRUE(o.boundary);
  EXPECT_EQ(o.acd, Rational(20, 11));

  auto f = build("frob:7:1:3");
  GroupAnalysis fa("frob:7:1:3", f.group);
  EXPECT_EQ(fa.spectrum().degrees, (std::vector<std::uint64_t>{1, 1, 1, 3, 3}));
  EXPECT_EQ(dual_orbit_sizes(*f.split), (std::vector<std::uint64_t>{3, 3}));
  o = check_orbit_lemma("frob:7:1:3", *f.split, fa.acd(3), 3);
  EXPECT_EQ(o.acd, Rational(9, 5));
  EXPECT_EQ(o.verdict, Verdict::confirmed);
  EXPECT_TRUE(o.boundary);
  EXPECT_NE(o.note.find("least bound 9/5"), std::string::npos);

  SplitExtensionData trivial_h{5, 2, {}, {}, 1};
  EXPECT_EQ(dual_orbit_sizes(trivial_h), std::vector<std::uint64_t>(24, 1));
  o = check_orbit_lemma("cyclic:5xcyclic:5", trivial_h, 1, 5);
  EXPECT_EQ(o.verdict, Verdict::confirmed);
  EXPECT_TRUE(o.boundary);
}

TEST(OrbitCheck, DualActionOnTwoDimensionalModules) {
  auto s4 = build("sym:4");
  EXPECT_EQ(dual_orbit_sizes(*s4.split), (std::vector<std::uint64_t>{3}));
  auto es = build("extraspecial:3");
  auto sizes = dual_orbit_sizes(*es.split);
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::uint64_t>{1, 1, 3, 3}));
}

TEST(OrbitCheck, NoQualifyingOrbitIsVacuous) {
  auto s3 = build("sym:3");
  GroupAnalysis a("sym:3", s3.group);
  auto o = check_orbit_lemma("sym:3", *s3.split, a.acd(3), 3);
  EXPECT_EQ(o.verdict, Verdict::vacuous);
  EXPECT_FALSE(o.hypothesis_met);
}

TEST(Report, TrivialCatalog) {
  VerifyConfig cfg;
  cfg.max_order = 1;
  cfg.threads = 1;
  auto rep = run_catalog(cfg);
  EXPECT_EQ(rep.summary.groups, 1u);
  EXPECT_EQ(rep.summary.violations, 0u);
  EXPECT_EQ(rep.summary.errors, 0u);
  for (const auto& c : rep.checks) EXPECT_NE(c.verdict, Verdict::violation);
  EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Report, Order200IsClean) {
  VerifyConfig cfg;
  cfg.max_order = 200;
  auto rep = run_catalog(cfg);
  EXPECT_EQ(rep.summary.violations, 0u);
  EXPECT_EQ(rep.summary.errors, 0u);
  EXPECT_GT(rep.summary.confirmed, 1000u);
  std::set<std::pair<std::string, std::uint64_t>> boundary_A, boundary_B;
  for (const auto& c : rep.checks) {
    if (c.check == "theorem_A" && c.boundary) boundary_A.insert({c.group, c.p});
    if (c.check == "theorem_B" && c.boundary) boundary_B.insert({c.group, c.p});
  }
  EXPECT_TRUE(boundary_A.count({"sym:3", 2}));
  EXPECT_TRUE(boundary_A.count({"agl1:11", 5}));
  EXPECT_TRUE(boundary_B.count({"alt:5", 2}));
  EXPECT_TRUE(boundary_B.count({"alt:5", 3}));
  EXPECT_TRUE(boundary_B.count({"psl2:5", 5}));
  EXPECT_TRUE(boundary_B.count({"psl2:7", 7}));
}

TEST(Report, DeterministicAcrossThreadCounts) {
  VerifyConfig one;
  one.max_order = 80;
  one.threads = 1;
  one.normalizer_table = true;
  VerifyConfig many = one;
  many.threads = 4;
  auto a = to_json(run_catalog(one)).dump();
  auto b = to_json(run_catalog(many)).dump();
  auto c = to_json(run_catalog(one)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Report, JsonShape) {
  VerifyConfig cfg;
  cfg.max_order = 12;
  cfg.lie = true;
  auto rep = run_catalog(cfg);
  auto j = to_json(rep);
  for (auto key : {"version", "config", "checks", "summary", "lie"}) EXPECT_TRUE(j.contains(key)) << key;
  for (auto key : {"confirmed", "vacuous", "violations", "errors"}) EXPECT_TRUE(j["summary"].contains(key)) << key;
  const auto& c0 = j["checks"][0];
  EXPECT_TRUE(c0["acd"].is_string());
  EXPECT_NE(c0["acd"].get<std::string>().find('/'), std::string::npos);
  EXPECT_FALSE(c0.contains("millis"));
  for (const auto& l : j["lie"]) EXPECT_TRUE(l["missing"].empty()) << l["group"];
  std::ostringstream csv;
  write_csv(csv, rep);
  EXPECT_EQ(csv.str().rfind("group,check,p,", 0), 0u);
}

TEST(Report, PrimesTested) {
  EXPECT_EQ(detail::primes_to_test(1), (std::vector<std::uint64_t>{2, 3, 5, 7}));
  EXPECT_EQ(detail::primes_to_test(22), (std::vector<std::uint64_t>{2, 3, 5, 7, 11}));
}

TEST(Report, ExitCodes) {
  VerificationReport r;
  EXPECT_EQ(r.exit_code(), 0);
  r.summary.errors = 1;
  EXPECT_EQ(r.exit_code(), 2);
  r.summary.violations = 1;
  EXPECT_EQ(r.exit_code(), 1);
}
