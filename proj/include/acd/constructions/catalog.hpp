#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "acd/arith/modular.hpp"
#include "acd/constructions/recipe.hpp"
#include "acd/core/class_structure.hpp"

namespace acd {

/// Closed-form order of a single factor.
inline std::uint64_t factor_order(const FactorRecipe& f) {
  const auto& a = f.params;
  switch (f.kind) {
    case GroupKind::cyclic: return a.at(0);
    case GroupKind::dihedral: return 2 * a.at(0);
    case GroupKind::sym:
    case GroupKind::alt: {
      std::uint64_t o = 1;
      for (std::uint64_t i = 2; i <= a.at(0); ++i) o *= i;
      return f.kind == GroupKind::alt && a.at(0) >= 2 ? o / 2 : o;
    }
    case GroupKind::agl1: return a.at(0) * (a.at(0) - 1);
    case GroupKind::frobenius: {
      std::uint64_t q = 1;
      for (std::uint64_t i = 0; i < a.at(1); ++i) q *= a.at(0);
      return q * a.at(2);
    }
    case GroupKind::psl2: {
      std::uint64_t q = a.at(0);
      return q * (q * q - 1) / (q % 2 == 0 ? 1 : 2);
    }
    case GroupKind::extraspecial: return a.at(0) * a.at(0) * a.at(0);
    case GroupKind::product: break;
  }
  throw ConstructionError("not a single-factor recipe");
}

inline std::uint64_t recipe_order(const GroupRecipe& r) {
  std::uint64_t o = 1;
  for (const auto& f : r.factors) o *= factor_order(f);
  return o;
}

/// Catalog entries carry recipes; groups are built on demand to keep memory flat.
struct CatalogEntry {
  GroupRecipe recipe;
  std::uint64_t order = 1;
  /// Set for products whose class count exceeds the Dixon class cap.
  bool product_rule_only = false;

  std::string id() const { return recipe.to_string(); }
  RecipeGroup materialize() const { return build(recipe); }
};

namespace detail {

inline bool is_prime_power_small(std::uint64_t q) { return q >= 2 && prime_divisors_small(q).size() == 1; }

inline FactorRecipe fr(GroupKind k, std::vector<std::uint64_t> params) { return {k, std::move(params)}; }

// D_n has (n + 3) / 2 classes for odd n and n / 2 + 3 for even n.
inline constexpr std::uint64_t kMaxDihedral = 297;
inline constexpr std::uint64_t kMaxAffineField = 128;
inline constexpr std::uint64_t kPoolOrder = 60;
inline constexpr std::uint64_t kPoolPairOrder = 24;
inline constexpr std::uint64_t kPoolCyclic = 12;

inline std::vector<FactorRecipe> nonabelian_factors(std::uint64_t max_order, const Limits& limits) {
  std::vector<FactorRecipe> out;
  for (std::uint64_t n = 3; n <= kMaxDihedral && 2 * n <= max_order; ++n) {
    const std::uint64_t classes = n % 2 ? (n + 3) / 2 : n / 2 + 3;
    if (classes <= limits.max_classes) out.push_back(fr(GroupKind::dihedral, {n}));
  }
  for (std::uint64_t n = 3; n <= 7; ++n)
    if (factor_order(fr(GroupKind::sym, {n})) <= max_order) out.push_back(fr(GroupKind::sym, {n}));
  for (std::uint64_t n = 4; n <= 7; ++n)
    if (factor_order(fr(GroupKind::alt, {n})) <= max_order) out.push_back(fr(GroupKind::alt, {n}));
  for (std::uint64_t q = 3; q <= kMaxAffineField; ++q) {
    if (!is_prime_power_small(q)) continue;
    auto primes = prime_divisors_small(q);
    std::uint64_t r = primes[0], m = 0;
    for (std::uint64_t t = q; t > 1; t /= r) ++m;
    if (q * (q - 1) <= max_order) out.push_back(fr(GroupKind::agl1, {q}));
    for (std::uint64_t d = 2; d < q - 1; ++d) {
      if ((q - 1) % d != 0 || q * d > max_order) continue;
      out.push_back(fr(GroupKind::frobenius, {r, m, d}));
    }
  }
  for (auto q : psl2_supported())
    if (factor_order(fr(GroupKind::psl2, {q})) <= max_order) out.push_back(fr(GroupKind::psl2, {q}));
  for (std::uint64_t p : {3u, 5u})
    if (p * p * p <= max_order) out.push_back(fr(GroupKind::extraspecial, {p}));
  return out;
}

inline std::size_t factor_class_count(const FactorRecipe& f, std::map<std::string, std::size_t>& memo) {
  auto key = f.to_string();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::size_t k = f.kind == GroupKind::cyclic ? factor_order(f) : ClassStructure(build_factor(f).group).class_count();
  memo.emplace(key, k);
  return k;
}

}  // namespace detail

/// Deterministic list of test groups with order <= max_order, sorted by (order, recipe string).
inline std::vector<CatalogEntry> catalog(std::uint64_t max_order, const Limits& limits = default_limits()) {
  using detail::fr;
  std::vector<GroupRecipe> recipes;
  if (max_order >= 1) recipes.push_back({{fr(GroupKind::cyclic, {1})}});
  for (std::uint64_t n = 2; n <= max_order; ++n) recipes.push_back({{fr(GroupKind::cyclic, {n})}});
  for (std::uint64_t a = 2; a * a <= max_order; ++a)
    for (std::uint64_t b = a; a * b <= max_order; b += a)
      recipes.push_back({{fr(GroupKind::cyclic, {a}), fr(GroupKind::cyclic, {b})}});

  auto nonabelian = detail::nonabelian_factors(max_order, limits);
  for (const auto& f : nonabelian) recipes.push_back({{f}});

  std::vector<FactorRecipe> pool;
  for (const auto& f : nonabelian)
    if (factor_order(f) <= detail::kPoolOrder) pool.push_back(f);
  for (const auto& f : pool) {
    const std::uint64_t o = factor_order(f);
    for (std::uint64_t c = 2; c <= detail::kPoolCyclic && o * c <= max_order; ++c)
      recipes.push_back({{f, fr(GroupKind::cyclic, {c})}});
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (factor_order(pool[i]) > detail::kPoolPairOrder) continue;
    for (std::size_t j = i; j < pool.size(); ++j) {
      if (factor_order(pool[j]) > detail::kPoolPairOrder) continue;
      if (factor_order(pool[i]) * factor_order(pool[j]) <= max_order) recipes.push_back({{pool[i], pool[j]}});
    }
  }

  std::map<std::string, std::size_t> class_memo;
  std::vector<CatalogEntry> out;
  out.reserve(recipes.size());
  for (auto& r : recipes) {
    CatalogEntry e{std::move(r), 0, false};
    e.order = recipe_order(e.recipe);
    if (e.order > limits.max_enumeration) continue;
    if (e.recipe.is_product()) {
      std::size_t classes = 1;
      for (const auto& f : e.recipe.factors) classes *= detail::factor_class_count(f, class_memo);
      e.product_rule_only = classes > limits.max_classes;
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.id() < b.id();
  });
  return out;
}

}  // namespace acd
