#include <random>

#include <gtest/gtest.h>

#include "acd/lie/families.hpp"

using namespace acd;

namespace {

std::vector<BigInt> degrees_of(const WitnessSet& ws) {
  std::vector<BigInt> out;
  for (const auto& w : ws.witnesses) out.push_back(w.degree);
  return out;
}

std::vector<BigInt> big(std::initializer_list<std::uint64_t> v) {
  std::vector<BigInt> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

BigInt product(const std::vector<BigInt>& v) {
  BigInt p = 1;
  for (const auto& x : v) p *= x;
  return p;
}

BigInt r_part(BigInt n, std::uint64_t r) {
  BigInt out = 1;
  while (n % r == 0) {
    n /= r;
    out *= r;
  }
  return out;
}

std::string category_of(LieFamily f, std::uint64_t q, unsigned n = 0) {
  try {
    witness_degrees(LieFamilySpec::make(f, q, n));
  } catch (const LieExclusionError& e) {
    return e.category();
  }
  return "";
}

}  // namespace

TEST(Cyclotomic, Examples) {
  EXPECT_EQ(cyclotomic(1).to_string(), "x - 1");
  EXPECT_EQ(cyclotomic(6).to_string(), "x^2 - x + 1");
  EXPECT_EQ(cyclotomic(12).evaluate(2), 13);
  EXPECT_EQ(cyclotomic(7).degree(), 6);
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
  for (unsigned n = 1; n <= 120; ++n) {
    IntegerPolynomial p = IntegerPolynomial::monomial(0);
    for (unsigned d = 1; d <= n; ++d)
      if (n % d == 0) p = p * cyclotomic(d);
    EXPECT_EQ(p, IntegerPolynomial::monomial(n) - IntegerPolynomial::monomial(0)) << n;
  }
}

TEST(Cyclotomic, FirstCoefficientOutsideUnitRange) {
  // Phi_105 is the least cyclotomic polynomial with a coefficient -2.
  for (unsigned k = 1; k < 105; ++k) {
    const auto phi = cyclotomic(k);
    for (const auto& c : phi.coefficients()) ASSERT_LE(abs(c), 1) << k;
  }
  const auto phi105 = cyclotomic(105);
  const auto& c105 = phi105.coefficients();
  EXPECT_EQ(std::count(c105.begin(), c105.end(), BigInt(-2)), 2);
}

TEST(Cyclotomic, RangeChecked) {
  EXPECT_THROW(cyclotomic(0), PreconditionError);
  EXPECT_THROW(cyclotomic(201), PreconditionError);
}

TEST(Polynomial, DivmodRejectsNonMonic) {
  IntegerPolynomial two_x = IntegerPolynomial::monomial(1, 2);
  EXPECT_THROW(IntegerPolynomial::divmod(IntegerPolynomial::monomial(3), two_x), PreconditionError);
  auto [q, r] = IntegerPolynomial::divmod(IntegerPolynomial::monomial(3) + IntegerPolynomial::monomial(0), cyclotomic(1));
  EXPECT_EQ(r, IntegerPolynomial::monomial(0, 2));
  EXPECT_EQ(q * cyclotomic(1) + r, IntegerPolynomial::monomial(3) + IntegerPolynomial::monomial(0));
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(168), big({2, 2, 2, 3, 7}));
  EXPECT_EQ(factorize(979200), big({2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 5, 5, 17}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_THROW(factorize(0), PreconditionError);
}

TEST(Factorize, LargeSemiprimes) {
  BigInt m67 = (BigInt(1) << 67) - 1;
  EXPECT_EQ(factorize(m67), (std::vector<BigInt>{BigInt(193707721), BigInt("761838257287")}));
  BigInt p = BigInt("1000000007"), q = BigInt("998244353"), r = BigInt("1000000000039");
  EXPECT_EQ(factorize(p * q * r), (std::vector<BigInt>{q, p, r}));
}

TEST(Factorize, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    BigInt n = BigInt(rng() >> 1) * BigInt(rng() >> 20) + 1;
    auto f = factorize(n);
    ASSERT_EQ(product(f), n);
    ASSERT_TRUE(std::is_sorted(f.begin(), f.end()));
    for (const auto& p : f) ASSERT_TRUE(is_probable_prime(p)) << p;
  }
}

TEST(GroupOrder, Examples) {
  EXPECT_EQ(group_order(LieFamilySpec::make(LieFamily::PSL, 5, 2)).order, 60);
  EXPECT_EQ(group_order(LieFamilySpec::make(LieFamily::Sp4Even, 4)).order, 979200);
  EXPECT_EQ(group_order(LieFamilySpec::make(LieFamily::G2, 3)).order, 4245696);
  EXPECT_EQ(group_order(LieFamilySpec::make(LieFamily::PSL, 7, 2)).order, 168);
  EXPECT_EQ(group_order(LieFamilySpec::make(LieFamily::PSU, 3, 3)).order, 6048);
  EXPECT_EQ(group_order(LieFamilySpec::make(LieFamily::PSp, 3, 2)).order, 25920);
}

TEST(Witnesses, Examples) {
  auto sp = witness_degrees(LieFamilySpec::make(LieFamily::Sp4Even, 4));
  EXPECT_EQ(degrees_of(sp), big({18, 50, 34}));
  EXPECT_EQ(sp.steinberg, 256);

  auto g2 = witness_degrees(LieFamilySpec::make(LieFamily::G2, 3));
  auto d = degrees_of(g2);
  EXPECT_NE(std::find(d.begin(), d.end(), BigInt(91)), d.end());
  EXPECT_NE(std::find(d.begin(), d.end(), BigInt(64)), d.end());
  EXPECT_EQ(g2.steinberg, 729);
  EXPECT_FALSE(g2.corrections.empty());

  auto l27 = witness_degrees(LieFamilySpec::make(LieFamily::PSL, 7, 2));
  EXPECT_EQ(degrees_of(l27), big({8, 6}));
  EXPECT_EQ(l27.steinberg, 7);
}

TEST(Witnesses, FixedSetsForSmallLinearGroups) {
  EXPECT_EQ(degrees_of(witness_degrees(LieFamilySpec::make(LieFamily::PSL, 2, 6))), big({62, 588, 6480}));
  EXPECT_EQ(degrees_of(witness_degrees(LieFamilySpec::make(LieFamily::PSL, 2, 7))), big({126, 2540, 5208}));
}

TEST(Witnesses, Psl2OddIsQPlusMinusOne) {
  for (std::uint64_t q : {7, 11, 13, 17, 19, 23, 25, 27, 29, 31, 49, 81, 121, 125, 343}) {
    auto ws = witness_degrees(LieFamilySpec::make(LieFamily::PSL, q, 2));
    EXPECT_EQ(degrees_of(ws), (std::vector<BigInt>{BigInt(q + 1), BigInt(q - 1)})) << q;
    EXPECT_EQ(ws.steinberg, q);
    EXPECT_GE((q - 3) / 2, 2u);
    EXPECT_GE((q - 1) / 2, 2u);
  }
}

TEST(Witnesses, DivideGroupOrderAcrossMatrix) {
  for (const auto& s : default_lie_matrix()) {
    auto ord = group_order(s);
    auto ws = witness_degrees(s);
    EXPECT_EQ(ord.order % ws.steinberg, 0) << s.name();
    EXPECT_EQ(r_part(ord.order, s.r), ws.steinberg) << s.name();
    for (const auto& w : ws.witnesses) EXPECT_EQ(ord.order % w.degree, 0) << s.name() << " " << w.label;
  }
}

TEST(Coverage, Examples) {
  auto sp = prime_coverage_check(LieFamilySpec::make(LieFamily::Sp4Even, 4));
  EXPECT_EQ(sp.primes_of_order, big({2, 3, 5, 17}));
  EXPECT_TRUE(sp.ok());
  auto g2 = prime_coverage_check(LieFamilySpec::make(LieFamily::G2, 3));
  EXPECT_EQ(g2.primes_of_order, big({2, 3, 7, 13}));
  EXPECT_TRUE(g2.ok());
  auto l27 = prime_coverage_check(LieFamilySpec::make(LieFamily::PSL, 7, 2));
  EXPECT_EQ(l27.primes_of_order, big({2, 3, 7}));
  EXPECT_TRUE(l27.ok());
}

TEST(Coverage, DefaultMatrixHasNoMissingPrimes) {
  auto matrix = default_lie_matrix();
  EXPECT_GE(matrix.size(), 100u);
  for (const auto& s : matrix) {
    auto r = prime_coverage_check(s);
    EXPECT_TRUE(r.ok()) << s.name();
    EXPECT_EQ(product(r.primes_of_order) > 0, true);
    BigInt rest = r.order;
    for (const auto& p : r.primes_of_order)
      while (rest % p == 0) rest /= p;
    EXPECT_EQ(rest, 1) << s.name();
  }
}

TEST(Exclusions, Categories) {
  EXPECT_EQ(category_of(LieFamily::PSL, 5, 2), "alternating");
  EXPECT_EQ(category_of(LieFamily::PSL, 9, 2), "alternating");
  EXPECT_EQ(category_of(LieFamily::PSL, 3, 2), "not-simple");
  EXPECT_EQ(category_of(LieFamily::PSL, 8, 2), "cyclic-out");
  EXPECT_EQ(category_of(LieFamily::PSL, 8, 3), "atlas");
  EXPECT_EQ(category_of(LieFamily::PSU, 2, 3), "not-simple");
  EXPECT_EQ(category_of(LieFamily::Sp4Even, 2), "atlas");
  EXPECT_EQ(category_of(LieFamily::G2, 2), "not-simple");
  EXPECT_EQ(category_of(LieFamily::PSp, 4, 3), "cyclic-out");
  EXPECT_EQ(category_of(LieFamily::POmegaPlus, 3, 3), "invalid");
  EXPECT_EQ(category_of(LieFamily::G2, 9), "");
}

TEST(Families, Parsing) {
  EXPECT_EQ(parse_family("PSL_n"), LieFamily::PSL);
  EXPECT_EQ(parse_family("E7"), LieFamily::E7);
  EXPECT_THROW(parse_family("PSL"), PreconditionError);
  EXPECT_THROW(LieFamilySpec::make(LieFamily::PSL, 12, 2), PreconditionError);
  EXPECT_THROW(LieFamilySpec::make(LieFamily::PSL, 7), PreconditionError);
  EXPECT_EQ(LieFamilySpec::make(LieFamily::POmegaMinus, 3, 4).name(), "POmega-_8(3)");
}
