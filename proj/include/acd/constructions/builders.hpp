#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acd/arith/modular.hpp"
#include "acd/constructions/finite_field.hpp"
#include "acd/core/error.hpp"
#include "acd/core/perm_group.hpp"

namespace acd {

using Matrix = std::vector<std::vector<std::uint32_t>>;

/// G = N x| H with N = (F_r)^m elementary abelian. H is given by the matrices
/// of its generators acting on column vectors of F_r^m.
struct SplitExtensionData {
  std::uint32_t r = 2;
  std::uint32_t m = 1;
  std::vector<Matrix> complement_generators;
  /// Generators of N inside the ambient permutation group.
  std::vector<Permutation> kernel_generators;
  std::uint64_t complement_order = 1;
};

struct BuiltGroup {
  PermGroup group;
  std::optional<SplitExtensionData> split;
  /// Normal subgroups known from the construction (besides 1 and G).
  std::vector<PermGroup> normal_subgroups;
};

namespace detail {

inline std::uint32_t to_u32(std::uint64_t v, const char* what) {
  if (v > (1u << 20)) throw ConstructionError(std::string(what) + " parameter too large");
  return static_cast<std::uint32_t>(v);
}

inline Permutation cycle_perm(std::size_t degree, const std::vector<Point>& cycle) {
  return Permutation::from_cycles(degree, {cycle});
}

}  // namespace detail

inline BuiltGroup build_cyclic(std::uint64_t n) {
  if (n == 0) throw ConstructionError("cyclic group order must be positive");
  auto deg = detail::to_u32(n, "cyclic");
  if (n == 1) return {PermGroup::trivial(1), std::nullopt, {}};
  std::vector<Point> c(deg);
  for (Point i = 0; i < deg; ++i) c[i] = i;
  PermGroup g(deg, {detail::cycle_perm(deg, c)});
  BuiltGroup out{g, std::nullopt, {}};
  if (is_prime_u64(n)) out.split = SplitExtensionData{deg, 1, {}, g.generators(), 1};
  return out;
}

/// Symmetries of the regular n-gon, order 2n.
inline BuiltGroup build_dihedral(std::uint64_t n) {
  if (n < 3) throw ConstructionError("dihedral group needs n >= 3");
  auto deg = detail::to_u32(n, "dihedral");
  std::vector<Point> rot(deg), refl(deg);
  for (Point i = 0; i < deg; ++i) {
    rot[i] = (i + 1) % deg;
    refl[i] = (deg - i) % deg;
  }
  Permutation r(rot), s(refl);
  PermGroup g(deg, {r, s});
  BuiltGroup out{g, std::nullopt, {PermGroup(deg, {r})}};
  if (n % 2 == 0 && n > 2) out.normal_subgroups.push_back(PermGroup(deg, {r * r}));
  if (is_prime_u64(n)) out.split = SplitExtensionData{deg, 1, {{{deg - 1}}}, {r}, 2};
  return out;
}

inline BuiltGroup build_symmetric(std::uint64_t n) {
  if (n == 0) throw ConstructionError("symmetric group degree must be positive");
  auto deg = detail::to_u32(n, "symmetric");
  if (n == 1) return {PermGroup::trivial(1), std::nullopt, {}};
  std::vector<Point> c(deg);
  for (Point i = 0; i < deg; ++i) c[i] = i;
  PermGroup g(deg, {detail::cycle_perm(deg, {0, 1}), detail::cycle_perm(deg, c)});
  BuiltGroup out{g, std::nullopt, {}};
  if (n == 3) {
    auto rot = detail::cycle_perm(3, {0, 1, 2});
    out.split = SplitExtensionData{3, 1, {{{2}}}, {rot}, 2};
  }
  if (n == 4) {
    auto a = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
    auto b = Permutation::from_cycles(4, {{0, 2}, {1, 3}});
    out.normal_subgroups.push_back(PermGroup(4, {a, b}));
    // V_4 = F_2^2 with a = e1, b = e2; the stabilizer of 0 is GL(2,2).
    out.split = SplitExtensionData{2, 2, {{{0, 1}, {1, 0}}, {{1, 1}, {0, 1}}}, {a, b}, 6};
  }
  if (n >= 3) {
    std::vector<Permutation> gens;
    for (Point i = 2; i < deg; ++i) gens.push_back(detail::cycle_perm(deg, {0, 1, i}));
    out.normal_subgroups.push_back(PermGroup(deg, std::move(gens)));
  }
  return out;
}

inline BuiltGroup build_alternating(std::uint64_t n) {
  if (n == 0) throw ConstructionError("alternating group degree must be positive");
  auto deg = detail::to_u32(n, "alternating");
  if (n < 3) return {PermGroup::trivial(deg), std::nullopt, {}};
  std::vector<Permutation> gens;
  for (Point i = 2; i < deg; ++i) gens.push_back(detail::cycle_perm(deg, {0, 1, i}));
  BuiltGroup out{PermGroup(deg, std::move(gens)), std::nullopt, {}};
  if (n == 4) {
    auto a = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
    auto b = Permutation::from_cycles(4, {{0, 2}, {1, 3}});
    out.normal_subgroups.push_back(PermGroup(4, {a, b}));
    // Conjugation by (1 2 3) sends a -> b -> ab.
    out.split = SplitExtensionData{2, 2, {{{0, 1}, {1, 1}}}, {a, b}, 3};
  }
  return out;
}

/// Subgroup of AGL(1, r^m) with multipliers of order d, acting on F_q.
inline BuiltGroup build_frobenius(std::uint64_t r, std::uint64_t m, std::uint64_t d) {
  if (!is_prime_u64(r)) throw ConstructionError("frobenius: r must be prime");
  if (m == 0 || m > 16) throw ConstructionError("frobenius: bad extension degree");
  FiniteField f(detail::to_u32(r, "frobenius"), static_cast<std::uint32_t>(m));
  const std::uint32_t q = f.order();
  if (d == 0 || (q - 1) % d != 0) throw ConstructionError("frobenius: d must divide r^m - 1");
  std::vector<Permutation> translations;
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    std::vector<Point> img(q);
    for (std::uint32_t x = 0; x < q; ++x) img[x] = f.add(x, f.basis(i));
    translations.emplace_back(std::move(img));
  }
  std::vector<Permutation> gens = translations;
  const auto a = f.power_of_primitive((q - 1) / d);
  std::vector<Matrix> hmats;
  if (d > 1) {
    std::vector<Point> img(q);
    for (std::uint32_t x = 0; x < q; ++x) img[x] = f.mul(a, x);
    gens.emplace_back(std::move(img));
    hmats.push_back(f.multiplication_matrix(a));
  }
  BuiltGroup out{PermGroup(q, std::move(gens)), std::nullopt, {}};
  PermGroup kernel(q, translations);
  out.normal_subgroups.push_back(kernel);
  out.split = SplitExtensionData{f.characteristic(), f.degree(), std::move(hmats), std::move(translations), d};
  return out;
}

/// AGL(1, q) = F_q x| F_q^*.
inline BuiltGroup build_agl1(std::uint64_t q) {
  if (q < 3) throw ConstructionError("agl1 needs q >= 3");
  auto primes = prime_divisors_small(q);
  if (primes.size() != 1) throw ConstructionError("agl1: " + std::to_string(q) + " is not a prime power");
  std::uint64_t m = 0;
  for (std::uint64_t t = q; t > 1; t /= primes[0]) ++m;
  return build_frobenius(primes[0], m, q - 1);
}

inline const std::vector<std::uint64_t>& psl2_supported() {
  static const std::vector<std::uint64_t> qs{4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27};
  return qs;
}

/// PSL_2(q) on the q + 1 points of the projective line.
inline BuiltGroup build_psl2(std::uint64_t q) {
  bool ok = false;
  for (auto s : psl2_supported()) ok = ok || s == q;
  if (!ok) throw ConstructionError("psl2: unsupported q = " + std::to_string(q));
  FiniteField f = FiniteField::of_order(q);
  const std::uint32_t n = f.order() + 1;
  // (1, x) -> x, (0, 1) -> q.
  auto point_of = [&](std::uint32_t u, std::uint32_t v) -> Point {
    if (u == 0) return f.order();
    return f.mul(v, f.inv(u));
  };
  auto act = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    // Row vector (u, v) times [[a, b], [c, d]].
    std::vector<Point> img(n);
    for (Point pt = 0; pt < n; ++pt) {
      std::uint32_t u = pt == f.order() ? 0 : 1;
      std::uint32_t v = pt == f.order() ? 1 : pt;
      img[pt] = point_of(f.add(f.mul(u, a), f.mul(v, c)), f.add(f.mul(u, b), f.mul(v, d)));
    }
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    gens.push_back(act(1, f.basis(i), 0, 1));
    gens.push_back(act(1, 0, f.basis(i), 1));
  }
  return {PermGroup(n, std::move(gens)), std::nullopt, {}};
}

/// The extraspecial group of order p^3 and exponent p in its regular representation.
/// Elements are triples (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
inline BuiltGroup build_extraspecial(std::uint64_t p) {
  if (p != 3 && p != 5) throw ConstructionError("extraspecial: supported p are 3 and 5");
  const auto pp = static_cast<std::uint32_t>(p);
  const std::uint32_t n = pp * pp * pp;
  auto index = [pp](std::uint32_t a, std::uint32_t b, std::uint32_t c) { return a + pp * b + pp * pp * c; };
  auto right_mult = [&](std::uint32_t a2, std::uint32_t b2, std::uint32_t c2) {
    std::vector<Point> img(n);
    for (std::uint32_t a = 0; a < pp; ++a)
      for (std::uint32_t b = 0; b < pp; ++b)
        for (std::uint32_t c = 0; c < pp; ++c)
          img[index(a, b, c)] = index((a + a2) % pp, (b + b2) % pp, (c + c2 + a * b2) % pp);
    return Permutation(std::move(img));
  };
  auto x = right_mult(1, 0, 0), y = right_mult(0, 1, 0), z = right_mult(0, 0, 1);
  BuiltGroup out{PermGroup(n, {x, y}), std::nullopt, {PermGroup(n, {z}), PermGroup(n, {x, z})}};
  // N = {b = 0} with coordinates (a, c); conjugation by (0,1,0) maps (a, c) to (a, c + a).
  out.split = SplitExtensionData{pp, 2, {{{1, 0}, {1, 1}}}, {x, z}, p};
  return out;
}

/// Direct product on the disjoint union of the factors' point sets.
inline PermGroup direct_product(const std::vector<PermGroup>& factors) {
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) {
      std::vector<Point> img(degree);
      for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
      for (std::size_t i = 0; i < f.degree(); ++i) img[offset + i] = static_cast<Point>(offset + g[static_cast<Point>(i)]);
      gens.emplace_back(std::move(img));
    }
    offset += f.degree();
  }
  return PermGroup(degree, std::move(gens));
}

/// Embeds a subgroup of factor `which` into the direct product of `factors`.
inline PermGroup embed_factor_subgroup(const std::vector<PermGroup>& factors, std::size_t which, const PermGroup& sub) {
  std::size_t degree = 0, offset = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k < which) offset += factors[k].degree();
    degree += factors[k].degree();
  }
  std::vector<Permutation> gens;
  for (const auto& g : sub.generators()) {
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < sub.degree(); ++i) img[offset + i] = static_cast<Point>(offset + g[static_cast<Point>(i)]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(degree, std::move(gens));
}

}  // namespace acd
