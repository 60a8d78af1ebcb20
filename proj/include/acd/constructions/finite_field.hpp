#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acd/arith/modular.hpp"
#include "acd/core/error.hpp"

namespace acd {

/// F_q with q = r^m. Elements are integer codes 0..q-1 whose base-r digits
/// are the coefficients of a polynomial in x (digit i = coefficient of x^i).
class FiniteField {
 public:
  using Element = std::uint32_t;

  FiniteField(std::uint32_t r, std::uint32_t m) : r_(r), m_(m) {
    if (!is_prime_u64(r)) throw ConstructionError("field characteristic " + std::to_string(r) + " is not prime");
    if (m == 0) throw ConstructionError("field extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      q *= r;
      if (q > (1u << 16)) throw ConstructionError("field too large");
    }
    q_ = static_cast<std::uint32_t>(q);
    modulus_ = least_irreducible(r, m);
    build_tables();
  }

  /// Field of order q; q must be a prime power.
  static FiniteField of_order(std::uint64_t q) {
    if (q < 2) throw ConstructionError("field order must be at least 2");
    auto primes = prime_divisors_small(q);
    if (primes.size() != 1) throw ConstructionError(std::to_string(q) + " is not a prime power");
    std::uint32_t m = 0;
    for (std::uint64_t t = q; t > 1; t /= primes[0]) ++m;
    return FiniteField(static_cast<std::uint32_t>(primes[0]), m);
  }

  std::uint32_t characteristic() const noexcept { return r_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Monic modulus coefficients, constant term first, length m + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  Element primitive() const noexcept { return primitive_; }

  Element add(Element a, Element b) const noexcept { return add_[a * q_ + b]; }
  Element neg(Element a) const noexcept { return neg_[a]; }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }

  Element inv(Element a) const {
    if (a == 0) throw PreconditionError("inverse of zero in finite field");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  Element pow(Element a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1))];
  }

  /// omega^k for the fixed primitive element omega.
  Element power_of_primitive(std::uint64_t k) const noexcept { return exp_[k % (q_ - 1)]; }

  std::vector<std::uint32_t> digits(Element a) const {
    std::vector<std::uint32_t> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i, a /= r_) d[i] = a % r_;
    return d;
  }

  Element from_digits(const std::vector<std::uint32_t>& d) const {
    Element a = 0;
    for (std::uint32_t i = m_; i-- > 0;) a = a * r_ + d[i] % r_;
    return a;
  }

  /// x^i, the i-th element of the polynomial basis over F_r.
  Element basis(std::uint32_t i) const {
    Element a = 1;
    for (std::uint32_t k = 0; k < i; ++k) a *= r_;
    return a;
  }

  /// Matrix of multiplication by a over F_r in the polynomial basis
  /// (column j holds the digits of a * x^j).
  std::vector<std::vector<std::uint32_t>> multiplication_matrix(Element a) const {
    std::vector<std::vector<std::uint32_t>> mat(m_, std::vector<std::uint32_t>(m_));
    for (std::uint32_t j = 0; j < m_; ++j) {
      auto col = digits(mul(a, basis(j)));
      for (std::uint32_t i = 0; i < m_; ++i) mat[i][j] = col[i];
    }
    return mat;
  }

  /// Polynomial product modulo the field polynomial, on digit vectors.
  Element slow_mul(Element a, Element b) const {
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * m_, 0);
    for (std::uint32_t i = 0; i < m_; ++i)
      for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % r_;
    for (std::uint32_t k = 2 * m_ - 1; k >= m_; --k) {
      std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (std::uint32_t i = 0; i < m_; ++i) prod[k - m_ + i] = (prod[k - m_ + i] + (r_ - c) * modulus_[i]) % r_;
    }
    std::vector<std::uint32_t> d(m_);
    for (std::uint32_t i = 0; i < m_; ++i) d[i] = static_cast<std::uint32_t>(prod[i]);
    return from_digits(d);
  }

 private:
  // Monic polynomials of degree m are coded by their lower coefficients, with the
  // x^(m-1) coefficient most significant; the search returns the least irreducible code.
  static std::vector<std::uint32_t> least_irreducible(std::uint32_t r, std::uint32_t m) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= r;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> f(m + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < m; ++i, c /= r) f[i] = static_cast<std::uint32_t>(c % r);
      f[m] = 1;
      if (is_irreducible(f, r)) return f;
    }
    throw InternalError("no irreducible polynomial found");
  }

  static bool divides(const std::vector<std::uint32_t>& g, std::vector<std::uint64_t> f, std::uint32_t r) {
    const std::size_t dg = g.size() - 1;
    for (std::size_t k = f.size(); k-- > dg;) {
      std::uint64_t c = f[k] % r;
      if (c == 0) continue;
      for (std::size_t i = 0; i <= dg; ++i) f[k - dg + i] = (f[k - dg + i] + (r - c) * g[i]) % r;
    }
    for (std::size_t i = 0; i < dg; ++i)
      if (f[i] % r != 0) return false;
    return true;
  }

  static bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t r) {
    const std::uint32_t m = static_cast<std::uint32_t>(f.size() - 1);
    if (m == 1) return true;
    std::vector<std::uint64_t> fw(f.begin(), f.end());
    for (std::uint32_t d = 1; 2 * d <= m; ++d) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < d; ++i) count *= r;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<std::uint32_t> g(d + 1);
        std::uint64_t c = code;
        for (std::uint32_t i = 0; i < d; ++i, c /= r) g[i] = static_cast<std::uint32_t>(c % r);
        g[d] = 1;
        if (divides(g, fw, r)) return false;
      }
    }
    return true;
  }

  void build_tables() {
    add_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    for (Element a = 0; a < q_; ++a) {
      auto da = digits(a);
      std::vector<std::uint32_t> dn(m_);
      for (std::uint32_t i = 0; i < m_; ++i) dn[i] = (r_ - da[i]) % r_;
      neg_[a] = from_digits(dn);
      for (Element b = 0; b < q_; ++b) {
        auto db = digits(b);
        std::vector<std::uint32_t> ds(m_);
        for (std::uint32_t i = 0; i < m_; ++i) ds[i] = (da[i] + db[i]) % r_;
        add_[a * q_ + b] = from_digits(ds);
      }
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    if (q_ == 2) {
      primitive_ = 1;
      exp_[0] = 1;
      return;
    }
    for (Element g = 2; g < q_ + 1; ++g) {
      Element cand = g % q_;
      if (cand == 0) continue;
      Element x = 1;
      std::uint32_t k = 0;
      do {
        exp_[k] = x;
        x = slow_mul(x, cand);
        ++k;
      } while (x != 1 && k < q_ - 1);
      if (x == 1 && k == q_ - 1) {
        primitive_ = cand;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) log_[exp_[i]] = i;
        return;
      }
    }
    throw InternalError("no primitive element found");
  }

  std::uint32_t r_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Element primitive_ = 1;
  std::vector<Element> add_;
  std::vector<Element> neg_;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace acd
