#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "acd/arith/modular.hpp"
#include "acd/core/class_structure.hpp"
#include "acd/core/config.hpp"
#include "acd/core/perm_group.hpp"

namespace acd {

/// Sorted multiset of irreducible character degrees.
struct DegreeSpectrum {
  std::vector<std::uint64_t> degrees;
  std::uint64_t group_order = 1;
  std::size_t class_count = 1;

  /// Throws InternalError unless sum d^2 = |G|, every d divides |G| and the count matches.
  void validate() const {
    if (degrees.size() != class_count) throw InternalError("spectrum size differs from class count");
    BigInt sum = 0;
    for (auto d : degrees) {
      if (d == 0 || group_order % d != 0) throw InternalError("degree " + std::to_string(d) + " does not divide |G|");
      sum += BigInt(d) * d;
    }
    if (sum != group_order) throw InternalError("sum of squared degrees differs from |G|");
    if (!std::is_sorted(degrees.begin(), degrees.end())) throw InternalError("spectrum not sorted");
  }

  friend bool operator==(const DegreeSpectrum&, const DegreeSpectrum&) = default;
};

/// Class multiplication constants for a fixed class i:
/// a[j][k] = #{(x, y) in C_i x C_j : xy = z_k} for a fixed z_k in C_k.
struct ClassMatrix {
  std::size_t i = 0;
  std::vector<std::vector<std::uint64_t>> a;
};

inline ClassMatrix class_matrix(const ClassStructure& cs, std::size_t i) {
  const std::size_t k = cs.class_count();
  ClassMatrix m{i, std::vector<std::vector<std::uint64_t>>(k, std::vector<std::uint64_t>(k, 0))};
  const auto& elems = cs.elements();
  for (std::uint32_t xi : cs.members(i)) {
    Permutation x_inv = elems[xi].inverse();
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t j = cs.class_of(x_inv * cs.reps()[c]);
      ++m.a[j][c];
    }
  }
  return m;
}

namespace detail::dixon {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;
using Poly = std::vector<std::uint64_t>;  // coefficients, low degree first

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t c = mul_mod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = sub(a[shift + i], mul_mod(c, m[i], p), p);
    trim(a);
  }
  return a;
}

inline Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
  return poly_mod(std::move(r), m, p);
}

inline Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = poly_mul_mod(result, base, m, p);
    base = poly_mul_mod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

inline Poly make_monic(Poly f, std::uint64_t p) {
  trim(f);
  if (f.empty()) return f;
  std::uint64_t inv = inv_mod(f.back(), p);
  for (auto& c : f) c = mul_mod(c, inv, p);
  return f;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

inline Poly poly_div(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  if (a.size() < m.size()) return {};
  Poly q(a.size() - m.size() + 1, 0);
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t c = mul_mod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - m.size();
    q[shift] = c;
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = sub(a[shift + i], mul_mod(c, m[i], p), p);
    trim(a);
  }
  return q;
}

/// Characteristic polynomial via reduction to upper Hessenberg form.
inline Poly char_poly(Mat h, std::uint64_t p) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    std::uint64_t inv = inv_mod(h[j + 1][j], p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h[i][j] == 0) continue;
      std::uint64_t u = mul_mod(h[i][j], inv, p);
      for (std::size_t c = 0; c < n; ++c) h[i][c] = sub(h[i][c], mul_mod(u, h[j + 1][c], p), p);
      for (std::size_t r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + mul_mod(u, h[r][i], p)) % p;
    }
  }
  std::vector<Poly> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly cur(m + 1, 0);
    // (x - h[m-1][m-1]) * polys[m-1]
    const Poly& prev = polys[m - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = (cur[i + 1] + prev[i]) % p;
      cur[i] = sub(cur[i], mul_mod(h[m - 1][m - 1], prev[i], p), p);
    }
    std::uint64_t t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mul_mod(t, h[m - i][m - i - 1], p);
      std::uint64_t coef = mul_mod(t, h[m - i - 1][m - 1], p);
      const Poly& q = polys[m - i - 1];
      for (std::size_t c = 0; c < q.size(); ++c) cur[c] = sub(cur[c], mul_mod(coef, q[c], p), p);
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

inline void split_roots(const Poly& g, std::uint64_t p, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back((p - g[0] % p) % p);
    return;
  }
  std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
  while (true) {
    Poly shifted{pick(rng), 1};
    Poly w = poly_pow_mod(shifted, (p - 1) / 2, g, p);
    if (w.empty()) w = {0};
    w[0] = sub(w[0], 1, p);
    Poly h = poly_gcd(g, w, p);
    if (h.size() > 1 && h.size() < g.size()) {
      split_roots(h, p, rng, out);
      split_roots(make_monic(poly_div(g, h, p), p), p, rng, out);
      return;
    }
  }
}

/// Distinct roots in F_p of f, sorted.
inline std::vector<std::uint64_t> distinct_roots(const Poly& f, std::uint64_t p, std::mt19937_64& rng) {
  Poly monic = make_monic(f, p);
  Poly xp = poly_pow_mod(Poly{0, 1}, p, monic, p);
  if (xp.size() < 2) xp.resize(2, 0);
  xp[1] = sub(xp[1], 1, p);
  Poly g = poly_gcd(monic, xp, p);
  std::vector<std::uint64_t> roots;
  split_roots(g, p, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Reduced row echelon form; returns the nonzero rows and fills pivots.
inline Mat rref(Mat rows, std::uint64_t p, std::vector<std::size_t>& pivots) {
  pivots.clear();
  if (rows.empty()) return rows;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::uint64_t inv = inv_mod(rows[r][c], p);
    for (auto& v : rows[r]) v = mul_mod(v, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint64_t f = rows[i][c];
      for (std::size_t cc = 0; cc < ncols; ++cc) rows[i][cc] = sub(rows[i][cc], mul_mod(f, rows[r][cc], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return rows;
}

/// Basis of {c : A c = 0} for a square matrix A.
inline Mat null_space(const Mat& a, std::uint64_t p) {
  const std::size_t n = a.size();
  std::vector<std::size_t> pivots;
  Mat red = rref(a, p, pivots);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - red[r][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Space {
  Mat basis;  // rows, in reduced echelon form
  std::vector<std::size_t> pivots;
};

inline std::uint64_t choose_prime(std::uint64_t exponent, std::uint64_t order) {
  for (std::uint64_t t = 1;; ++t) {
    std::uint64_t ell = t * exponent + 1;
    if (static_cast<unsigned __int128>(ell) * ell <= static_cast<unsigned __int128>(4) * order) continue;
    if (is_prime_u64(ell)) return ell;
  }
}

}  // namespace detail::dixon

/// Least prime ell = 1 (mod exponent) with ell > 2 sqrt(order).
inline std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order) {
  return detail::dixon::choose_prime(exponent, order);
}

/// Irreducible character degrees by common eigenspace splitting of the class
/// matrices over F_ell.
inline DegreeSpectrum dixon_degrees(const ClassStructure& cs, std::uint64_t seed = 0,
                                    const Limits& limits = default_limits()) {
  using namespace detail::dixon;
  const std::size_t k = cs.class_count();
  if (k > limits.max_classes)
    throw CapExceededError("class count " + std::to_string(k) + " exceeds Dixon bound " +
                           std::to_string(limits.max_classes));
  const std::uint64_t order = cs.order();
  const std::uint64_t ell = dixon_prime(cs.exponent(), order);
  std::mt19937_64 rng(seed);

  std::vector<Space> spaces(1);
  for (std::size_t i = 0; i < k; ++i) {
    Vec e(k, 0);
    e[i] = 1;
    spaces[0].basis.push_back(std::move(e));
    spaces[0].pivots.push_back(i);
  }

  std::vector<std::size_t> order_of_classes(k);
  std::iota(order_of_classes.begin(), order_of_classes.end(), std::size_t{0});
  std::stable_sort(order_of_classes.begin(), order_of_classes.end(),
                   [&](std::size_t a, std::size_t b) { return cs.sizes()[a] < cs.sizes()[b]; });

  auto all_split = [&] {
    return std::all_of(spaces.begin(), spaces.end(), [](const Space& s) { return s.basis.size() == 1; });
  };

  for (std::size_t ci : order_of_classes) {
    if (all_split()) break;
    if (ci == 0) continue;
    ClassMatrix cm = class_matrix(cs, ci);
    Mat m(k, Vec(k));
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) m[r][c] = cm.a[r][c] % ell;

    std::vector<Space> next;
    for (auto& sp : spaces) {
      const std::size_t d = sp.basis.size();
      if (d == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      // Restricted action: M v_a = sum_b R[b][a] v_b, read off at the pivots.
      Mat images(d, Vec(k, 0));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t r = 0; r < k; ++r) {
          std::uint64_t acc = 0;
          for (std::size_t c = 0; c < k; ++c)
            if (sp.basis[a][c]) acc = (acc + mul_mod(m[r][c], sp.basis[a][c], ell)) % ell;
          images[a][r] = acc;
        }
      Mat restricted(d, Vec(d, 0));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) restricted[b][a] = images[a][sp.pivots[b]];

      std::vector<std::uint64_t> roots = distinct_roots(char_poly(restricted, ell), ell, rng);
      if (roots.size() <= 1) {
        next.push_back(std::move(sp));
        continue;
      }
      std::size_t total = 0;
      for (std::uint64_t lambda : roots) {
        Mat shifted = restricted;
        for (std::size_t a = 0; a < d; ++a) shifted[a][a] = sub(shifted[a][a], lambda, ell);
        Mat coeffs = null_space(shifted, ell);
        Mat vecs;
        for (const auto& c : coeffs) {
          Vec v(k, 0);
          for (std::size_t a = 0; a < d; ++a)
            if (c[a])
              for (std::size_t col = 0; col < k; ++col)
                v[col] = (v[col] + mul_mod(c[a], sp.basis[a][col], ell)) % ell;
          vecs.push_back(std::move(v));
        }
        Space piece;
        piece.basis = rref(std::move(vecs), ell, piece.pivots);
        total += piece.basis.size();
        next.push_back(std::move(piece));
      }
      if (total != d) throw InternalError("class matrix not diagonalizable on a common eigenspace");
    }
    spaces = std::move(next);
  }
  if (!all_split()) throw InternalError("eigenspace splitting did not separate all characters");

  DegreeSpectrum spec;
  spec.group_order = order;
  spec.class_count = k;
  const auto& inv = cs.inverse_class();
  for (const auto& sp : spaces) {
    const Vec& w = sp.basis[0];
    if (w[0] == 0) throw InternalError("central character vanishes on the identity class");
    std::uint64_t norm = inv_mod(w[0], ell);
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t wj = mul_mod(w[j], norm, ell);
      std::uint64_t wjs = mul_mod(w[inv[j]], norm, ell);
      s = (s + mul_mod(mul_mod(wj, wjs, ell), inv_mod(cs.sizes()[j] % ell, ell), ell)) % ell;
    }
    std::uint64_t d2 = mul_mod(order % ell, inv_mod(s, ell), ell);
    auto root = sqrt_mod(d2, ell);
    if (!root) throw InternalError("squared degree is not a square modulo ell");
    std::uint64_t d = std::min(*root, ell - *root);
    if (d == 0 || order % d != 0 || static_cast<unsigned __int128>(d) * d > order)
      throw InternalError("lifted degree " + std::to_string(d) + " inconsistent with |G|");
    spec.degrees.push_back(d);
  }
  std::sort(spec.degrees.begin(), spec.degrees.end());
  spec.validate();
  return spec;
}

inline DegreeSpectrum abelian_spectrum(std::uint64_t order) {
  return DegreeSpectrum{std::vector<std::uint64_t>(order, 1), order, static_cast<std::size_t>(order)};
}

/// Pointwise products of two spectra (the spectrum of a direct product).
inline DegreeSpectrum product_spectrum(const DegreeSpectrum& a, const DegreeSpectrum& b) {
  DegreeSpectrum r;
  r.group_order = a.group_order * b.group_order;
  r.class_count = a.class_count * b.class_count;
  r.degrees.reserve(r.class_count);
  for (auto x : a.degrees)
    for (auto y : b.degrees) r.degrees.push_back(x * y);
  std::sort(r.degrees.begin(), r.degrees.end());
  return r;
}

/// Abelian groups directly, everything else through Dixon.
inline DegreeSpectrum degree_spectrum(const PermGroup& g, std::uint64_t seed = 0,
                                      const Limits& limits = default_limits()) {
  if (g.order() > limits.max_enumeration)
    throw CapExceededError("group too large for enumeration (order " + g.order().str() + ")");
  if (g.is_abelian()) return abelian_spectrum(g.order_u64());
  return dixon_degrees(ClassStructure(g, limits), seed, limits);
}

/// Spectrum of an explicit direct product, factor by factor.
inline DegreeSpectrum degree_spectrum(std::span<const PermGroup> factors, std::uint64_t seed = 0,
                                      const Limits& limits = default_limits()) {
  DegreeSpectrum acc = abelian_spectrum(1);
  for (const auto& f : factors) acc = product_spectrum(acc, degree_spectrum(f, seed, limits));
  return acc;
}

}  // namespace acd
