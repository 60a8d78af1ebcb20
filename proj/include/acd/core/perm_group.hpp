#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "acd/arith/bigint.hpp"
#include "acd/core/config.hpp"
#include "acd/core/error.hpp"
#include "acd/core/permutation.hpp"

namespace acd {

/// Base and strong generating set built by deterministic Schreier-Sims.
class Bsgs {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;     // strong generators fixing the earlier base points
    std::vector<Point> orbit;          // orbit of `base`, in discovery order
    std::vector<std::int32_t> pos;     // point -> index in orbit, -1 if absent
    std::vector<Permutation> transversal;  // base -> orbit[i]
    std::vector<Permutation> inverse_transversal;
    std::vector<std::size_t> checked;  // per orbit point: generators already used for Schreier gens
  };

  Bsgs(std::size_t degree, const std::vector<Permutation>& generators) : degree_(degree) {
    std::vector<Permutation> gens;
    for (const auto& g : generators) {
      if (g.degree() != degree) throw ConstructionError("generator degree mismatch");
      if (!g.is_identity()) gens.push_back(g);
    }
    build(gens);
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  const std::vector<Level>& levels() const noexcept { return levels_; }

  BigInt order() const {
    BigInt o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    return o;
  }

  /// Sifts `g` through levels [start, depth). Returns the residue and the level where sifting stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t start = 0) const {
    for (std::size_t l = start; l < levels_.size(); ++l) {
      const Level& lv = levels_[l];
      Point x = g[lv.base];
      std::int32_t idx = lv.pos[x];
      if (idx < 0) return {std::move(g), l};
      g *= lv.inverse_transversal[static_cast<std::size_t>(idx)];
    }
    return {std::move(g), levels_.size()};
  }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    auto [res, drop] = strip(g);
    return drop == levels_.size() && res.is_identity();
  }

  template <class Rng>
  Permutation random_element(Rng& rng) const {
    Permutation g(degree_);
    for (std::size_t l = levels_.size(); l-- > 0;) {
      const Level& lv = levels_[l];
      std::uniform_int_distribution<std::size_t> pick(0, lv.orbit.size() - 1);
      g *= lv.transversal[pick(rng)];
    }
    return g;
  }

  /// Every element, generated as products of transversal elements.
  std::vector<Permutation> elements() const {
    std::vector<Permutation> out{Permutation(degree_)};
    for (std::size_t l = levels_.size(); l-- > 0;) {
      const Level& lv = levels_[l];
      std::vector<Permutation> next;
      next.reserve(out.size() * lv.orbit.size());
      for (const auto& e : out)
        for (const auto& u : lv.transversal) next.push_back(e * u);
      out = std::move(next);
    }
    return out;
  }

 private:
  static Point first_moved(const Permutation& g) {
    for (Point x = 0; x < g.degree(); ++x)
      if (g[x] != x) return x;
    throw InternalError("identity has no moved point");
  }

  void add_level(Point base) {
    Level lv;
    lv.base = base;
    lv.pos.assign(degree_, -1);
    lv.orbit.push_back(base);
    lv.pos[base] = 0;
    lv.transversal.emplace_back(degree_);
    lv.inverse_transversal.emplace_back(degree_);
    lv.checked.push_back(0);
    levels_.push_back(std::move(lv));
  }

  // Extends the orbit after generators [first_new_gen, end) were appended.
  static void close_orbit(Level& lv, std::size_t first_new_gen) {
    std::size_t old_size = lv.orbit.size();
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
      std::size_t g0 = i < old_size ? first_new_gen : 0;
      for (std::size_t s = g0; s < lv.gens.size(); ++s) {
        Point y = lv.gens[s][lv.orbit[i]];
        if (lv.pos[y] >= 0) continue;
        lv.pos[y] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(y);
        Permutation u = lv.transversal[i] * lv.gens[s];
        lv.inverse_transversal.push_back(u.inverse());
        lv.transversal.push_back(std::move(u));
        lv.checked.push_back(0);
      }
    }
  }

  void add_generator(std::size_t l, const Permutation& g) {
    Level& lv = levels_[l];
    lv.gens.push_back(g);
    close_orbit(lv, lv.gens.size() - 1);
  }

  void build(const std::vector<Permutation>& gens) {
    if (gens.empty()) return;
    // Initial base: every generator moves some base point.
    for (const auto& g : gens) {
      bool moves = false;
      for (const auto& lv : levels_)
        if (g[lv.base] != lv.base) moves = true;
      if (!moves) add_level(first_moved(g));
    }
    for (const auto& g : gens) {
      for (std::size_t l = 0; l < levels_.size(); ++l) {
        add_generator(l, g);
        if (g[levels_[l].base] != levels_[l].base) break;
      }
    }

    std::size_t i = levels_.size() - 1;
    while (true) {
      bool restarted = false;
      for (std::size_t a = 0; a < levels_[i].orbit.size() && !restarted; ++a) {
        while (levels_[i].checked[a] < levels_[i].gens.size()) {
          std::size_t s = levels_[i].checked[a]++;
          const Level& lv = levels_[i];
          Point ys = lv.gens[s][lv.orbit[a]];
          Permutation h = lv.transversal[a] * lv.gens[s] *
                          lv.inverse_transversal[static_cast<std::size_t>(lv.pos[ys])];
          auto [res, drop] = strip(std::move(h), i + 1);
          if (res.is_identity()) continue;
          if (drop == levels_.size()) add_level(first_moved(res));
          for (std::size_t l = i + 1; l <= drop; ++l) add_generator(l, res);
          i = drop;
          restarted = true;
          break;
        }
      }
      if (restarted) continue;
      if (i == 0) break;
      --i;
    }
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// A finite group given by permutation generators on {0, ..., degree-1}.
///
/// Immutable; the BSGS is computed eagerly at construction and shared
/// between copies, so copying is cheap and concurrent reads are safe.
class PermGroup {
 public:
  PermGroup() : PermGroup(1, {}) {}

  PermGroup(std::size_t degree, std::vector<Permutation> generators, const Limits& limits = default_limits())
      : degree_(degree) {
    if (degree == 0) throw ConstructionError("permutation degree must be positive");
    if (degree > limits.max_points)
      throw ConstructionError("degree " + std::to_string(degree) + " exceeds max points " +
                              std::to_string(limits.max_points));
    for (auto& g : generators) {
      if (g.degree() != degree) throw ConstructionError("generator degree mismatch");
      if (!g.is_identity()) generators_.push_back(std::move(g));
    }
    bsgs_ = std::make_shared<const Bsgs>(degree, generators_);
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const Bsgs& bsgs() const noexcept { return *bsgs_; }
  Permutation identity() const { return Permutation(degree_); }

  BigInt order() const { return bsgs_->order(); }

  /// Order as a machine integer; throws if it does not fit.
  std::uint64_t order_u64() const {
    BigInt o = order();
    if (o > BigInt(std::numeric_limits<std::uint64_t>::max()))
      throw CapExceededError("group order does not fit in 64 bits");
    return static_cast<std::uint64_t>(o);
  }

  bool contains(const Permutation& g) const { return bsgs_->contains(g); }
  bool is_trivial() const noexcept { return generators_.empty(); }

  bool is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      for (std::size_t j = i + 1; j < generators_.size(); ++j)
        if (!generators_[i].commutes_with(generators_[j])) return false;
    return true;
  }

  /// H <= this, tested on generators of H.
  bool contains_subgroup(const PermGroup& h) const {
    for (const auto& g : h.generators())
      if (!contains(g)) return false;
    return true;
  }

  template <class Rng>
  Permutation random_element(Rng& rng) const {
    return bsgs_->random_element(rng);
  }

  std::vector<Permutation> elements(const Limits& limits = default_limits()) const {
    if (order() > limits.max_enumeration)
      throw CapExceededError("group too large for enumeration (order " + order().str() + ")");
    return bsgs_->elements();
  }

  /// Same elements (equal orders and mutual containment).
  friend bool same_group(const PermGroup& a, const PermGroup& b) {
    return a.order() == b.order() && a.contains_subgroup(b);
  }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const Bsgs> bsgs_;
};

}  // namespace acd
