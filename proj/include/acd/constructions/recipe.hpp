#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acd/constructions/builders.hpp"
#include "acd/core/error.hpp"

namespace acd {

enum class GroupKind { cyclic, dihedral, sym, alt, agl1, frobenius, psl2, extraspecial, product };

/// One factor of a group spec, e.g. `frob:7:1:3`.
struct FactorRecipe {
  GroupKind kind = GroupKind::cyclic;
  std::vector<std::uint64_t> params;

  std::string to_string() const {
    static const char* tags[] = {"cyclic", "dihedral", "sym", "alt", "agl1", "frob", "psl2", "extraspecial", "product"};
    std::string s = tags[static_cast<int>(kind)];
    for (auto v : params) s += ":" + std::to_string(v);
    return s;
  }

  friend bool operator==(const FactorRecipe&, const FactorRecipe&) = default;
};

/// A group spec: one factor, or a direct product of factors joined by `x`.
struct GroupRecipe {
  std::vector<FactorRecipe> factors;

  GroupKind kind() const { return factors.size() == 1 ? factors[0].kind : GroupKind::product; }
  bool is_product() const { return factors.size() > 1; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += "x";
      s += factors[i].to_string();
    }
    return s;
  }

  friend bool operator==(const GroupRecipe&, const GroupRecipe&) = default;
};

namespace detail {

struct TagInfo {
  std::string_view tag;
  GroupKind kind;
  std::size_t arity;
};

inline constexpr TagInfo kTags[] = {
    {"cyclic", GroupKind::cyclic, 1},     {"dihedral", GroupKind::dihedral, 1}, {"sym", GroupKind::sym, 1},
    {"alt", GroupKind::alt, 1},           {"agl1", GroupKind::agl1, 1},         {"frob", GroupKind::frobenius, 3},
    {"psl2", GroupKind::psl2, 1},         {"extraspecial", GroupKind::extraspecial, 1},
};

}  // namespace detail

/// Strict parser for specs such as `sym:3xcyclic:5`.
inline GroupRecipe parse_recipe(std::string_view text) {
  auto fail = [&](const std::string& why) -> GroupRecipe {
    throw ConstructionError("bad group spec '" + std::string(text) + "': " + why);
  };
  GroupRecipe recipe;
  std::size_t pos = 0;
  if (text.empty()) return fail("empty");
  while (true) {
    std::size_t colon = text.find(':', pos);
    if (colon == std::string_view::npos) return fail("missing ':' after tag");
    std::string_view tag = text.substr(pos, colon - pos);
    const detail::TagInfo* info = nullptr;
    for (const auto& t : detail::kTags)
      if (t.tag == tag) info = &t;
    if (!info) return fail("unknown tag '" + std::string(tag) + "'");
    FactorRecipe f{info->kind, {}};
    pos = colon;
    for (std::size_t k = 0; k < info->arity; ++k) {
      if (pos >= text.size() || text[pos] != ':') return fail("expected ':' before parameter");
      ++pos;
      std::size_t start = pos;
      std::uint64_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (pos - start >= 9) return fail("parameter too large");
        v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        ++pos;
      }
      if (pos == start) return fail("expected a number");
      f.params.push_back(v);
    }
    recipe.factors.push_back(std::move(f));
    if (pos == text.size()) break;
    if (text[pos] != 'x') return fail("unexpected character '" + std::string(1, text[pos]) + "'");
    ++pos;
  }
  return recipe;
}

inline BuiltGroup build_factor(const FactorRecipe& f) {
  const auto& a = f.params;
  switch (f.kind) {
    case GroupKind::cyclic: return build_cyclic(a.at(0));
    case GroupKind::dihedral: return build_dihedral(a.at(0));
    case GroupKind::sym: return build_symmetric(a.at(0));
    case GroupKind::alt: return build_alternating(a.at(0));
    case GroupKind::agl1: return build_agl1(a.at(0));
    case GroupKind::frobenius: return build_frobenius(a.at(0), a.at(1), a.at(2));
    case GroupKind::psl2: return build_psl2(a.at(0));
    case GroupKind::extraspecial: return build_extraspecial(a.at(0));
    case GroupKind::product: break;
  }
  throw ConstructionError("not a single-factor recipe");
}

/// A built recipe: the group itself plus its factors and known normal subgroups.
struct RecipeGroup {
  GroupRecipe recipe;
  PermGroup group;
  std::vector<PermGroup> factors;
  std::optional<SplitExtensionData> split;
  std::vector<PermGroup> normal_subgroups;
};

inline RecipeGroup build(const GroupRecipe& recipe) {
  if (recipe.factors.empty()) throw ConstructionError("empty recipe");
  if (recipe.factors.size() == 1) {
    BuiltGroup b = build_factor(recipe.factors[0]);
    return {recipe, b.group, {b.group}, std::move(b.split), std::move(b.normal_subgroups)};
  }
  std::vector<BuiltGroup> parts;
  std::vector<PermGroup> factors;
  for (const auto& f : recipe.factors) {
    parts.push_back(build_factor(f));
    factors.push_back(parts.back().group);
  }
  RecipeGroup out{recipe, direct_product(factors), factors, std::nullopt, {}};
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (!factors[k].is_trivial()) out.normal_subgroups.push_back(embed_factor_subgroup(factors, k, factors[k]));
    for (const auto& n : parts[k].normal_subgroups) out.normal_subgroups.push_back(embed_factor_subgroup(factors, k, n));
  }
  return out;
}

inline RecipeGroup build(std::string_view spec) { return build(parse_recipe(spec)); }

}  // namespace acd
