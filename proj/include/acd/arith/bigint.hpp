#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace acd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

/// Always "num/den", including integers ("4/1").
inline std::string to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt big_pow(BigInt base, unsigned exp) {
  BigInt result = 1;
  while (exp) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

}  // namespace acd
