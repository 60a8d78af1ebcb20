#include <gtest/gtest.h>

#include "acd/acd_metrics.hpp"
#include "acd/constructions/catalog.hpp"

using namespace acd;

namespace {

DegreeSpectrum spec_of(std::vector<std::uint64_t> d) {
  std::uint64_t n = 0;
  for (auto x : d) n += x * x;
  std::sort(d.begin(), d.end());
  return {d, n, d.size()};
}

const DegreeSpectrum kA5 = spec_of({1, 3, 3, 4, 5});

bool prime_power_oracle(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

TEST(IrrP, Examples) {
  EXPECT_EQ(irr_p_subset(kA5, 2), (std::vector<std::uint64_t>{1, 4}));
  EXPECT_EQ(irr_p_subset(kA5, 3), (std::vector<std::uint64_t>{1, 3, 3}));
  EXPECT_EQ(irr_p_subset(abelian_spectrum(8), 5).size(), 8u);
}

TEST(AcdP, Examples) {
  EXPECT_EQ(acd_p(kA5, 2), Rational(5, 2));
  EXPECT_EQ(acd_p(kA5, 3), Rational(7, 3));
  EXPECT_EQ(acd_p(spec_of({1, 3, 3, 6, 7, 8}), 7), 4);
  EXPECT_EQ(acd_p(spec_of({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 10}), 5), Rational(20, 11));
  EXPECT_EQ(acd_p(abelian_spectrum(12), 3), 1);
}

TEST(AcdP, SerializedAsReducedFraction) {
  EXPECT_EQ(to_string(acd_p(kA5, 2)), "5/2");
  EXPECT_EQ(to_string(Rational(4)), "4/1");
  EXPECT_EQ(to_string(b_p(3)), "3/2");
}

TEST(IsPrimePower, Examples) {
  EXPECT_TRUE(is_prime_power(8));
  EXPECT_FALSE(is_prime_power(12));
  EXPECT_TRUE(is_prime_power(343));
  EXPECT_FALSE(is_prime_power(1));
  EXPECT_TRUE(is_prime_power(2));
}

TEST(IsPrimePower, AgreesWithTrialDivision) {
  for (std::uint64_t n = 1; n <= 20000; ++n) ASSERT_EQ(is_prime_power(n), prime_power_oracle(n)) << n;
}

TEST(IsPrimePower, LargeValues) {
  EXPECT_TRUE(is_prime_power(1000003ull * 1000003ull));
  EXPECT_TRUE(is_prime_power(1000003ull * 1000003ull * 1000003ull));
  EXPECT_FALSE(is_prime_power(1000003ull * 1000033ull));
  EXPECT_TRUE(is_prime_power(2305843009213693951ull));
  EXPECT_TRUE(is_prime_power(1ull << 62));
}

TEST(Ell, Examples) {
  EXPECT_EQ(ell(2), 1u);
  EXPECT_EQ(ell(3), 1u);
  EXPECT_EQ(ell(7), 1u);
  EXPECT_EQ(ell(5), 2u);
  EXPECT_EQ(ell(11), 2u);
  EXPECT_EQ(ell(13), 2u);
  EXPECT_EQ(ell(17), 6u);
}

TEST(Ell, LeastWitnessForPrimesTo10000) {
  for (std::uint64_t p = 2; p <= 10000; ++p) {
    if (!is_prime_u64(p)) continue;
    auto l = ell(p);
    ASSERT_TRUE(prime_power_oracle(l * p + 1)) << p;
    for (std::uint64_t k = 1; k < l; ++k) ASSERT_FALSE(prime_power_oracle(k * p + 1)) << p;
  }
}

TEST(Thresholds, Examples) {
  EXPECT_EQ(b_p(2), Rational(4, 3));
  EXPECT_EQ(b_p(3), Rational(3, 2));
  EXPECT_EQ(b_p(5), Rational(20, 11));
  EXPECT_EQ(a_p(2), Rational(5, 2));
  EXPECT_EQ(a_p(3), Rational(7, 3));
  EXPECT_EQ(a_p(7), 4);
}

TEST(Thresholds, BpStrictlyBetweenOneAndTwo) {
  for (std::uint64_t p = 2; p <= 10000; ++p) {
    if (!is_prime_u64(p)) continue;
    Rational b = b_p(p);
    EXPECT_GT(b, 1);
    EXPECT_LT(b, 2);
    BigInt lp = BigInt(ell(p)) * p;
    EXPECT_EQ(b, Rational(2 * lp, lp + 1));
  }
}

TEST(Nd, Examples) {
  EXPECT_EQ(n_d(kA5, 3), 2u);
  EXPECT_EQ(n_d(kA5, 2), 0u);
  EXPECT_EQ(n_d(spec_of({1, 1, 2, 3, 3}), 1), 2u);
}

TEST(AcdReport, Fields) {
  auto r = acd_report(kA5, 2);
  EXPECT_EQ(r.acd, Rational(5, 2));
  EXPECT_EQ(r.b_p, Rational(4, 3));
  EXPECT_FALSE(r.below_b);
  EXPECT_FALSE(r.below_a);
  EXPECT_TRUE(acd_report(kA5, 7).below_b);
}

TEST(AcdP, PropertiesOnCatalog) {
  for (const auto& e : catalog(100)) {
    if (e.product_rule_only) continue;
    auto s = degree_spectrum(e.materialize().group);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      Rational a = acd_p(s, p);
      auto sel = irr_p_subset(s, p);
      EXPECT_GE(a, 1);
      EXPECT_EQ(a == 1, std::all_of(sel.begin(), sel.end(), [](auto d) { return d == 1; })) << e.id();
      for (auto d : sel)
        if (d > 1) EXPECT_GE(d, p);
      if (e.order % p != 0) EXPECT_EQ(a, 1) << e.id() << " p=" << p;
    }
  }
}

TEST(AcdP, EmptySpectrumRejected) {
  DegreeSpectrum empty{{}, 1, 0};
  EXPECT_THROW(acd_p(empty, 2), PreconditionError);
}
