#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "acd/arith/bigint.hpp"
#include "acd/core/class_structure.hpp"
#include "acd/core/perm_group.hpp"

namespace acd {

/// A subgroup together with the ambient group it was taken from.
struct SubgroupHandle {
  PermGroup group;
  PermGroup parent;

  BigInt order() const { return group.order(); }
  BigInt index() const { return parent.order() / group.order(); }
};

inline BigInt p_part(BigInt n, std::uint64_t p) {
  BigInt r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool is_power_of(const BigInt& n, std::uint64_t p) { return p_part(n, p) == n; }

/// Smallest subgroup of `g` containing `h` and normalized by `g`.
inline PermGroup normal_closure(const PermGroup& g, std::vector<Permutation> seeds) {
  PermGroup n(g.degree(), std::move(seeds));
  while (true) {
    std::vector<Permutation> extra;
    for (const auto& x : n.generators()) {
      for (const auto& s : g.generators()) {
        Permutation c = x ^ s;
        if (!n.contains(c) && std::find(extra.begin(), extra.end(), c) == extra.end()) extra.push_back(std::move(c));
      }
    }
    if (extra.empty()) return n;
    std::vector<Permutation> gens = n.generators();
    for (auto& e : extra) gens.push_back(std::move(e));
    n = PermGroup(g.degree(), std::move(gens));
  }
}

inline SubgroupHandle derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  }
  return {normal_closure(g, std::move(comms)), g};
}

/// G = G^(0) > G^(1) > ... until the series stabilizes; the last entry is the perfect core.
inline std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = derived_subgroup(series.back()).group;
    if (next.order() == series.back().order()) return series;
    series.push_back(std::move(next));
  }
}

inline bool is_solvable(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

/// gHg^-1 = H for all generators g of G, checked on generators of H.
inline bool is_normal(const PermGroup& g, const PermGroup& h) {
  for (const auto& x : h.generators())
    for (const auto& s : g.generators())
      if (!h.contains(x ^ s)) return false;
  return true;
}

inline bool is_normal(const PermGroup& g, const SubgroupHandle& h) { return is_normal(g, h.group); }

namespace detail {

// Adjoins y to P when <P, y> is still a p-group.
inline bool try_extend_p_group(PermGroup& p_group, const Permutation& y, std::uint64_t p) {
  if (y.is_identity() || p_group.contains(y)) return false;
  std::vector<Permutation> gens = p_group.generators();
  gens.push_back(y);
  PermGroup candidate(p_group.degree(), std::move(gens));
  if (!is_power_of(candidate.order(), p)) return false;
  p_group = std::move(candidate);
  return true;
}

}  // namespace detail

/// A Sylow p-subgroup: grows a p-subgroup by random p-elements, with an
/// enumeration fallback walking p-elements in canonical order.
inline SubgroupHandle sylow(const PermGroup& g, std::uint64_t p, std::uint64_t seed = 0,
                            const Limits& limits = default_limits()) {
  const BigInt target = p_part(g.order(), p);
  PermGroup p_group = PermGroup::trivial(g.degree());
  if (target == 1) return {p_group, g};

  std::mt19937_64 rng(seed ^ (p * 0x9e3779b97f4a7c15ull));
  const int budget = 400;
  for (int attempt = 0; attempt < budget && p_group.order() != target; ++attempt) {
    Permutation x = g.random_element(rng);
    std::uint64_t ord = x.order();
    std::uint64_t pp = 1;
    while (ord % p == 0) {
      ord /= p;
      pp *= p;
    }
    if (pp == 1) continue;
    Permutation y = x.pow(ord);
    // Conjugate by a random element so repeated draws explore different Sylow subgroups' elements.
    if (!p_group.is_trivial()) y = y ^ g.random_element(rng);
    detail::try_extend_p_group(p_group, y, p);
  }
  if (p_group.order() != target) {
    ElementIndex all(g, limits);
    bool grew = true;
    while (p_group.order() != target && grew) {
      grew = false;
      for (const auto& y : all.elements()) {
        if (!is_power_of(BigInt(y.order()), p)) continue;
        if (detail::try_extend_p_group(p_group, y, p)) {
          grew = true;
          if (p_group.order() == target) break;
        }
      }
    }
    if (p_group.order() != target) throw InternalError("Sylow construction did not reach |G|_p");
  }
  return {p_group, g};
}

/// O^{p'}(G): the normal closure of a Sylow p-subgroup.
inline SubgroupHandle p_residual(const PermGroup& g, std::uint64_t p, std::uint64_t seed = 0) {
  SubgroupHandle s = sylow(g, p, seed);
  return {normal_closure(g, s.group.generators()), g};
}

/// G/N as the permutation action of G on the cosets of N (N normal, so left
/// and right cosets coincide; the action is x N -> x g N in the left-to-right
/// product convention).
inline PermGroup quotient_group(const PermGroup& g, const PermGroup& n, const Limits& limits = default_limits()) {
  if (!g.contains_subgroup(n) || !is_normal(g, n)) throw PreconditionError("quotient by a non-normal subgroup");
  BigInt index = g.order() / n.order();
  if (index > limits.max_points)
    throw CapExceededError("quotient index " + index.str() + " exceeds max points");
  const auto idx = static_cast<std::size_t>(index);
  if (idx == 1) return PermGroup::trivial(1);

  ElementIndex all(g, limits);
  std::vector<Permutation> n_elems = n.elements(limits);
  std::vector<std::uint32_t> coset_of(all.size(), 0xffffffffu);
  std::vector<std::uint32_t> coset_rep;
  for (std::uint32_t e = 0; e < all.size(); ++e) {
    if (coset_of[e] != 0xffffffffu) continue;
    auto c = static_cast<std::uint32_t>(coset_rep.size());
    coset_rep.push_back(e);
    for (const auto& m : n_elems) coset_of[all.index_of(all[e] * m)] = c;
  }
  if (coset_rep.size() != idx) throw InternalError("coset count mismatch");

  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    std::vector<Point> img(idx);
    for (std::size_t c = 0; c < idx; ++c) img[c] = coset_of[all.index_of(all[coset_rep[c]] * s)];
    gens.emplace_back(std::move(img));
  }
  return PermGroup(idx, std::move(gens), limits);
}

inline PermGroup quotient_group(const PermGroup& g, const SubgroupHandle& n, const Limits& limits = default_limits()) {
  return quotient_group(g, n.group, limits);
}

/// [G : N_G(H)] by enumeration of G.
inline BigInt normalizer_index(const PermGroup& g, const PermGroup& h, const Limits& limits = default_limits()) {
  std::uint64_t count = 0;
  for (const auto& x : g.elements(limits)) {
    bool normalizes = true;
    for (const auto& y : h.generators()) {
      if (!h.contains(y ^ x)) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) ++count;
  }
  return g.order() / count;
}

}  // namespace acd
