#pragma once

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "acd/arith/bigint.hpp"
#include "acd/core/error.hpp"

namespace acd {

/// Dense polynomial with arbitrary-precision integer coefficients, constant term first.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntegerPolynomial monomial(std::size_t degree, BigInt coeff = 1) {
    std::vector<BigInt> c(degree + 1, 0);
    c[degree] = std::move(coeff);
    return IntegerPolynomial(std::move(c));
  }

  /// Degree of the zero polynomial is -1.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  BigInt coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  BigInt evaluate(const BigInt& x) const {
    BigInt v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
  }

  friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return IntegerPolynomial(std::move(c));
  }

  friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return IntegerPolynomial(std::move(c));
  }

  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return IntegerPolynomial(std::move(c));
  }

  /// Quotient and remainder by a monic divisor.
  static std::pair<IntegerPolynomial, IntegerPolynomial> divmod(const IntegerPolynomial& a, const IntegerPolynomial& m) {
    if (m.is_zero() || m.c_.back() != 1) throw PreconditionError("division by a non-monic polynomial");
    std::vector<BigInt> r = a.c_;
    if (a.degree() < m.degree()) return {IntegerPolynomial(), a};
    std::vector<BigInt> q(r.size() - m.c_.size() + 1, 0);
    for (std::size_t shift = q.size(); shift-- > 0;) {
      BigInt lead = r[shift + m.c_.size() - 1];
      q[shift] = lead;
      if (lead != 0)
        for (std::size_t i = 0; i < m.c_.size(); ++i) r[shift + i] -= lead * m.c_[i];
    }
    return {IntegerPolynomial(std::move(q)), IntegerPolynomial(std::move(r))};
  }

  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      BigInt a = abs(c_[i]);
      s += s.empty() ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + ");
      if (a != 1 || i == 0) s += a.str();
      if (i >= 1) s += "x";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

/// Phi_k by dividing x^k - 1 by Phi_d for every proper divisor d of k; memoized.
inline IntegerPolynomial cyclotomic(unsigned k) {
  if (k < 1 || k > 200) throw PreconditionError("cyclotomic index must lie in [1, 200]");
  static std::mutex mu;
  static std::map<unsigned, IntegerPolynomial> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
  }
  IntegerPolynomial f = IntegerPolynomial::monomial(k) - IntegerPolynomial::monomial(0);
  for (unsigned d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto [q, r] = IntegerPolynomial::divmod(f, cyclotomic(d));
    if (!r.is_zero()) throw InternalError("cyclotomic division left a remainder");
    f = std::move(q);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(k, f);
  return f;
}

}  // namespace acd
