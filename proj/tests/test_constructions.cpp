#include <array>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "acd/constructions/catalog.hpp"
#include "acd/constructions/finite_field.hpp"
#include "acd/core/subgroups.hpp"

using namespace acd;

namespace {

std::uint64_t factorial(std::uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::set<std::string> ids(const std::vector<CatalogEntry>& c) {
  std::set<std::string> out;
  for (const auto& e : c) out.insert(e.id());
  return out;
}

}  // namespace

TEST(FiniteField, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128}) {
    auto f = FiniteField::of_order(q);
    ASSERT_EQ(f.order(), q);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.order() - 1);
    for (int i = 0; i < 1000; ++i) {
      auto a = pick(rng), b = pick(rng), c = pick(rng);
      ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c))) << q;
      ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))) << q;
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))) << q;
      ASSERT_EQ(f.add(a, b), f.add(b, a));
      ASSERT_EQ(f.mul(a, b), f.mul(b, a));
      ASSERT_EQ(f.mul(a, b), f.slow_mul(a, b)) << q;
      ASSERT_EQ(f.add(a, f.neg(a)), 0u);
      if (a != 0) ASSERT_EQ(f.mul(a, f.inv(a)), 1u) << q;
    }
  }
}

TEST(FiniteField, PrimitiveElementGeneratesUnits) {
  for (std::uint64_t q : {4, 8, 9, 11, 49, 128}) {
    auto f = FiniteField::of_order(q);
    std::set<std::uint32_t> seen;
    for (std::uint64_t k = 0; k + 1 < q; ++k) seen.insert(f.power_of_primitive(k));
    EXPECT_EQ(seen.size(), q - 1);
    EXPECT_EQ(seen.count(0), 0u);
    EXPECT_EQ(f.pow(f.primitive(), q - 1), 1u);
  }
}

TEST(FiniteField, ModulusIsLeastIrreducible) {
  EXPECT_EQ(FiniteField(2, 2).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  EXPECT_EQ(FiniteField(2, 3).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(FiniteField(3, 2).modulus(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(FiniteField, MultiplicationMatrixActsOnDigits) {
  auto f = FiniteField::of_order(27);
  for (std::uint32_t a = 0; a < 27; ++a) {
    auto m = f.multiplication_matrix(a);
    for (std::uint32_t x = 0; x < 27; ++x) {
      auto v = f.digits(x);
      std::vector<std::uint32_t> w(3, 0);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) w[i] = (w[i] + m[i][j] * v[j]) % 3;
      ASSERT_EQ(f.from_digits(w), f.mul(a, x));
    }
  }
}

TEST(FiniteField, Rejects) {
  EXPECT_THROW(FiniteField::of_order(12), ConstructionError);
  EXPECT_THROW(FiniteField(4, 1), ConstructionError);
  EXPECT_THROW(FiniteField::of_order(5).inv(0), PreconditionError);
}

TEST(Builders, OrdersMatchFormulas) {
  for (std::uint64_t n = 1; n <= 30; ++n) EXPECT_EQ(build_cyclic(n).group.order(), n);
  for (std::uint64_t n = 3; n <= 30; ++n) EXPECT_EQ(build_dihedral(n).group.order(), 2 * n);
  for (std::uint64_t n = 1; n <= 8; ++n) EXPECT_EQ(build_symmetric(n).group.order(), factorial(n));
  for (std::uint64_t n = 3; n <= 8; ++n) EXPECT_EQ(build_alternating(n).group.order(), factorial(n) / 2);
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 16, 27, 32, 49, 64, 81, 121, 125, 128})
    EXPECT_EQ(build_agl1(q).group.order(), q * (q - 1)) << q;
  for (std::uint64_t q : psl2_supported()) {
    const std::uint64_t z = q % 2 ? 2 : 1;
    EXPECT_EQ(build_psl2(q).group.order(), q * (q * q - 1) / z) << q;
  }
  for (std::uint64_t p : {3, 5}) EXPECT_EQ(build_extraspecial(p).group.order(), p * p * p);
}

TEST(Builders, Examples) {
  EXPECT_EQ(build("agl1:3").group.order(), 6);
  EXPECT_FALSE(build("agl1:3").group.is_abelian());
  EXPECT_TRUE(same_group(build("agl1:3").group, build("sym:3").group));
  auto a4 = build("agl1:4");
  EXPECT_EQ(a4.group.order(), 12);
  EXPECT_EQ(a4.normal_subgroups[0].order(), 4);
  EXPECT_EQ(derived_subgroup(a4.group).order(), 4);
  EXPECT_EQ(build("agl1:11").group.order(), 110);

  EXPECT_TRUE(same_group(build("frob:3:1:2").group, build("sym:3").group));
  auto f21 = build("frob:7:1:3").group;
  EXPECT_EQ(f21.order(), 21);
  EXPECT_FALSE(f21.is_abelian());
  auto f12 = build("frob:2:2:3");
  EXPECT_EQ(f12.group.order(), 12);
  EXPECT_EQ(f12.normal_subgroups[0].order(), 4);

  auto psl5 = build("psl2:5").group;
  EXPECT_EQ(psl5.order(), 60);
  EXPECT_TRUE(same_group(derived_subgroup(psl5).group, psl5));
  EXPECT_EQ(build("psl2:7").group.order(), 168);
  EXPECT_EQ(build("psl2:9").group.order(), 360);

  EXPECT_EQ(build("extraspecial:3").group.order(), 27);
  EXPECT_EQ(build("extraspecial:5").group.order(), 125);
  EXPECT_FALSE(build("extraspecial:3").group.is_abelian());
}

TEST(Builders, Psl2IsPerfect) {
  for (std::uint64_t q : psl2_supported()) {
    auto g = build_psl2(q).group;
    EXPECT_TRUE(same_group(derived_subgroup(g).group, g)) << q;
  }
}

TEST(Builders, Agl1KernelAndComplement) {
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 16, 25, 27}) {
    auto b = build_agl1(q);
    const PermGroup& n = b.normal_subgroups.at(0);
    EXPECT_EQ(n.order(), q);
    EXPECT_TRUE(is_normal(b.group, n));
    EXPECT_TRUE(n.is_abelian());
    auto r = prime_divisors_small(q)[0];
    for (const auto& x : n.elements()) EXPECT_TRUE(x.pow(r).is_identity());
    // The stabilizer of 0 is the complement; find an element of order q - 1.
    std::size_t stab = 0;
    bool cyclic = false;
    for (const auto& x : b.group.elements())
      if (x[0] == 0) {
        ++stab;
        cyclic = cyclic || x.order() == q - 1;
      }
    EXPECT_EQ(stab, q - 1);
    EXPECT_TRUE(cyclic) << q;
    ASSERT_TRUE(b.split);
    EXPECT_EQ(b.split->complement_order, q - 1);
  }
}

TEST(Builders, FrobeniusSylowOfComplementNotNormal) {
  for (auto [r, m, d] : std::vector<std::array<std::uint64_t, 3>>{{7, 1, 3}, {7, 1, 6}, {13, 1, 4}, {2, 4, 5}, {3, 2, 4}, {11, 1, 10}, {2, 3, 7}}) {
    auto g = build_frobenius(r, m, d).group;
    for (auto p : prime_divisors_small(d)) EXPECT_FALSE(is_normal(g, sylow(g, p))) << r << ":" << m << ":" << d << " p=" << p;
  }
}

TEST(Builders, Rejects) {
  EXPECT_THROW(build("frob:7:1:4"), ConstructionError);
  EXPECT_THROW(build("agl1:6"), ConstructionError);
  EXPECT_THROW(build("dihedral:2"), ConstructionError);
  EXPECT_THROW(build("psl2:31"), ConstructionError);
  EXPECT_THROW(build("extraspecial:7"), ConstructionError);
}

TEST(Recipe, ParserIsStrict) {
  for (auto bad : {"", "sym", "sym:", "sym:3x", "sym:3xx", "foo:3", "Sym:3", "sym:-3", "sym:3 ", " sym:3", "frob:7:1",
                   "sym:3:4", "sym:1234567890", "cyclic:2*cyclic:3", "sym3", "x", "sym:3y"})
    EXPECT_THROW(parse_recipe(bad), ConstructionError) << bad;
}

TEST(Recipe, RoundTrip) {
  for (auto s : {"sym:3", "frob:7:1:3xcyclic:2", "psl2:7", "dihedral:5xdihedral:9", "extraspecial:3xcyclic:2"})
    EXPECT_EQ(parse_recipe(s).to_string(), s);
  auto r = parse_recipe("sym:3xcyclic:5");
  EXPECT_TRUE(r.is_product());
  EXPECT_EQ(r.kind(), GroupKind::product);
  EXPECT_EQ(build(r).group.order(), 30);
}

TEST(Recipe, ProductCarriesFactorNormals) {
  auto g = build("sym:4xcyclic:3");
  EXPECT_EQ(g.factors.size(), 2u);
  for (const auto& n : g.normal_subgroups) EXPECT_TRUE(is_normal(g.group, n));
  bool has_v4 = false;
  for (const auto& n : g.normal_subgroups) has_v4 = has_v4 || n.order() == 4;
  EXPECT_TRUE(has_v4);
}

TEST(Catalog, Examples) {
  auto c30 = ids(catalog(30));
  for (auto s : {"sym:3", "alt:4", "frob:7:1:3", "agl1:5"}) EXPECT_TRUE(c30.count(s)) << s;
  for (int n = 2; n <= 30; ++n) EXPECT_TRUE(c30.count("cyclic:" + std::to_string(n))) << n;
  for (int n = 4; n <= 15; ++n) EXPECT_TRUE(c30.count("dihedral:" + std::to_string(n))) << n;

  auto c1 = catalog(1);
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1[0].order, 1u);
  EXPECT_EQ(c1[0].materialize().group.order(), 1);

  auto c200 = ids(catalog(200));
  for (auto s : {"psl2:5", "agl1:11", "psl2:7"}) EXPECT_TRUE(c200.count(s)) << s;
}

TEST(Catalog, SortedUniqueAndOrdersCorrect) {
  auto c = catalog(100);
  EXPECT_EQ(ids(c).size(), c.size());
  for (std::size_t i = 1; i < c.size(); ++i)
    EXPECT_TRUE(c[i - 1].order < c[i].order || (c[i - 1].order == c[i].order && c[i - 1].id() < c[i].id()));
  for (const auto& e : c) {
    EXPECT_LE(e.order, 100u);
    EXPECT_EQ(e.order, recipe_order(e.recipe));
    EXPECT_EQ(e.materialize().group.order(), e.order) << e.id();
  }
}

TEST(Catalog, Deterministic) {
  auto a = catalog(300), b = catalog(300);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].id(), b[i].id());
}
