#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/miller_rabin.hpp>
#include <random>

#include "acd/arith/bigint.hpp"
#include "acd/core/error.hpp"

namespace acd {

inline bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  std::mt19937_64 gen(0x5eed);
  return boost::multiprecision::miller_rabin_test(n, 32, gen);
}

namespace detail {

inline BigInt gcd_big(BigInt a, BigInt b) { return boost::multiprecision::gcd(a, b); }

// Pollard rho with Brent's cycle detection; returns a nontrivial factor or 0.
inline BigInt pollard_brent(const BigInt& n, const BigInt& c, const BigInt& y0, std::uint64_t budget) {
  if (n % 2 == 0) return 2;
  BigInt y = y0, x, ys, g = 1, q = 1;
  const std::uint64_t m = 128;
  std::uint64_t r = 1, steps = 0;
  auto f = [&](const BigInt& v) { return (v * v + c) % n; };
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      std::uint64_t lim = std::min(m, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = f(y);
        BigInt d = x > y ? x - y : y - x;
        q = (q * d) % n;
      }
      g = gcd_big(q, n);
      k += m;
      steps += lim;
      if (steps > budget) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      BigInt d = x > ys ? x - ys : ys - x;
      g = gcd_big(d, n);
    } while (g == 1);
  }
  return g == n ? BigInt(0) : g;
}

inline void factor_into(const BigInt& n, std::vector<BigInt>& out, std::uint64_t budget) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  // Deterministic retry schedule over (c, y0).
  for (unsigned attempt = 1; attempt <= 24; ++attempt) {
    BigInt d = pollard_brent(n, BigInt(attempt), BigInt(attempt + 1), budget);
    if (d != 0 && d != 1 && d != n) {
      factor_into(d, out, budget);
      factor_into(n / d, out, budget);
      return;
    }
  }
  throw CapExceededError("factorization timeout; unfactored cofactor " + n.str());
}

}  // namespace detail

/// Prime factorization with multiplicity, ascending.
inline std::vector<BigInt> factorize(BigInt n, std::uint64_t budget = 4000000) {
  if (n < 1) throw PreconditionError("factorize needs n >= 1");
  std::vector<BigInt> out;
  for (std::uint32_t d = 2; d <= 1000000; d += (d == 2 ? 1 : 2)) {
    if (BigInt(d) * d > n) break;
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) detail::factor_into(n, out, budget);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<BigInt> distinct_primes(const BigInt& n) {
  auto f = factorize(n);
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

}  // namespace acd
