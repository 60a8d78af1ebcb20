#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "acd/arith/bigint.hpp"
#include "acd/arith/modular.hpp"
#include "acd/char_degrees.hpp"
#include "acd/core/error.hpp"

namespace acd {

/// Degrees equal to 1 or divisible by p.
inline std::vector<std::uint64_t> irr_p_subset(const DegreeSpectrum& spec, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (auto d : spec.degrees)
    if (d == 1 || d % p == 0) out.push_back(d);
  return out;
}

inline Rational acd_p(const DegreeSpectrum& spec, std::uint64_t p) {
  auto sel = irr_p_subset(spec, p);
  if (sel.empty()) throw PreconditionError("spectrum has no linear characters");
  BigInt sum = 0;
  for (auto d : sel) sum += d;
  return Rational(sum, BigInt(sel.size()));
}

/// n = r^k with r prime and k >= 1.
inline bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t r = 0;
  for (std::uint64_t d = 2; d <= 1000000 && d * d <= n; ++d) {
    if (n % d == 0) {
      r = d;
      break;
    }
  }
  if (r == 0) {
    if (is_prime_u64(n)) return true;
    // No factor below 10^6: n can only be r^2 or r^3 with a large prime r.
    for (unsigned k = 2; k <= 3; ++k) {
      auto root = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / k)));
      for (std::uint64_t c = root > 2 ? root - 2 : 1; c <= root + 2; ++c) {
        BigInt pw = big_pow(BigInt(c), k);
        if (pw == n) return is_prime_u64(c);
      }
    }
    return false;
  }
  while (n % r == 0) n /= r;
  return n == 1;
}

inline std::uint64_t ell(std::uint64_t p) {
  constexpr std::uint64_t cap = 1000000;
  for (std::uint64_t l = 1; l <= cap; ++l)
    if (is_prime_power(l * p + 1)) return l;
  throw InternalError("ell search exhausted for p = " + std::to_string(p));
}

inline Rational b_p(std::uint64_t p) {
  BigInt lp = BigInt(ell(p)) * p;
  return Rational(2 * lp, lp + 1);
}

inline Rational a_p(std::uint64_t p) {
  if (p == 2) return Rational(5, 2);
  if (p == 3) return Rational(7, 3);
  return Rational(BigInt(p + 1), BigInt(2));
}

inline std::size_t n_d(const DegreeSpectrum& spec, std::uint64_t d) {
  return static_cast<std::size_t>(std::count(spec.degrees.begin(), spec.degrees.end(), d));
}

struct AcdReport {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> irr_p_degrees;
  Rational acd;
  Rational b_p;
  Rational a_p;
  bool below_b = false;
  bool below_a = false;
};

inline AcdReport acd_report(const DegreeSpectrum& spec, std::uint64_t p) {
  AcdReport r;
  r.p = p;
  r.irr_p_degrees = irr_p_subset(spec, p);
  r.acd = acd_p(spec, p);
  r.b_p = acd::b_p(p);
  r.a_p = acd::a_p(p);
  r.below_b = r.acd < r.b_p;
  r.below_a = r.acd < r.a_p;
  return r;
}

}  // namespace acd
