#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "acd/acd_metrics.hpp"
#include "acd/char_degrees.hpp"
#include "acd/constructions/builders.hpp"
#include "acd/core/subgroups.hpp"

namespace acd {

enum class Verdict { confirmed, vacuous, violation };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::vacuous: return "vacuous";
    case Verdict::violation: return "VIOLATION";
  }
  return "?";
}

struct CheckOutcome {
  std::string group;
  std::string check;
  std::uint64_t p = 2;
  Rational acd = 1;
  Rational threshold = 1;
  bool hypothesis_met = false;
  bool conclusion_holds = false;
  Verdict verdict = Verdict::vacuous;
  /// acd equals the threshold exactly.
  bool boundary = false;
  std::string note;
  double millis = 0;
};

/// Verdict from hypothesis and conclusion: VIOLATION iff the hypothesis holds and the conclusion fails.
inline Verdict decide(bool hypothesis, bool conclusion) {
  if (!hypothesis) return Verdict::vacuous;
  return conclusion ? Verdict::confirmed : Verdict::violation;
}

/// Per-group cache of the spectrum and the p-local subgroups used by the checks.
class GroupAnalysis {
 public:
  GroupAnalysis(std::string id, PermGroup g, std::uint64_t seed = 0, std::optional<DegreeSpectrum> spectrum = std::nullopt)
      : id_(std::move(id)), g_(std::move(g)), seed_(seed), spectrum_(std::move(spectrum)) {}

  const std::string& id() const noexcept { return id_; }
  const PermGroup& group() const noexcept { return g_; }
  std::uint64_t seed() const noexcept { return seed_; }

  const DegreeSpectrum& spectrum() {
    if (!spectrum_) spectrum_ = degree_spectrum(g_, seed_);
    return *spectrum_;
  }

  const PermGroup& derived() {
    if (!derived_) derived_ = derived_subgroup(g_).group;
    return *derived_;
  }

  const PermGroup& sylow(std::uint64_t p) {
    auto it = sylow_.find(p);
    if (it == sylow_.end()) it = sylow_.emplace(p, acd::sylow(g_, p, seed_).group).first;
    return it->second;
  }

  const PermGroup& residual(std::uint64_t p) {
    auto it = residual_.find(p);
    if (it == residual_.end()) it = residual_.emplace(p, normal_closure(g_, sylow(p).generators())).first;
    return it->second;
  }

  Rational acd(std::uint64_t p) { return acd_p(spectrum(), p); }

 private:
  std::string id_;
  PermGroup g_;
  std::uint64_t seed_;
  std::optional<DegreeSpectrum> spectrum_;
  std::optional<PermGroup> derived_;
  std::map<std::uint64_t, PermGroup> sylow_;
  std::map<std::uint64_t, PermGroup> residual_;
};

namespace detail {

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// acd_p(G) < b_p implies a normal Sylow p-subgroup.
inline CheckOutcome check_theorem_A(GroupAnalysis& a, std::uint64_t p) {
  detail::Stopwatch sw;
  CheckOutcome o{a.id(), "theorem_A", p};
  o.acd = a.acd(p);
  o.threshold = b_p(p);
  o.hypothesis_met = o.acd < o.threshold;
  o.boundary = o.acd == o.threshold;
  o.conclusion_holds = is_normal(a.group(), a.sylow(p));
  o.verdict = decide(o.hypothesis_met, o.conclusion_holds);
  o.millis = sw.millis();
  return o;
}

/// acd_p(G) < a_p implies O^{p'}(G) solvable.
inline CheckOutcome check_theorem_B(GroupAnalysis& a, std::uint64_t p) {
  detail::Stopwatch sw;
  CheckOutcome o{a.id(), "theorem_B", p};
  o.acd = a.acd(p);
  o.threshold = a_p(p);
  o.hypothesis_met = o.acd < o.threshold;
  o.boundary = o.acd == o.threshold;
  o.conclusion_holds = is_solvable(a.residual(p));
  o.verdict = decide(o.hypothesis_met, o.conclusion_holds);
  o.millis = sw.millis();
  return o;
}

/// acd_p(G) = 1 if and only if a Sylow p-subgroup is abelian and normal.
inline CheckOutcome check_ito_michler(GroupAnalysis& a, std::uint64_t p) {
  detail::Stopwatch sw;
  CheckOutcome o{a.id(), "ito_michler", p};
  o.acd = a.acd(p);
  o.threshold = 1;
  o.hypothesis_met = true;
  const PermGroup& s = a.sylow(p);
  const bool lhs = o.acd == 1;
  const bool rhs = s.is_abelian() && is_normal(a.group(), s);
  o.conclusion_holds = lhs == rhs;
  o.boundary = false;
  o.note = std::string("acd=1: ") + (lhs ? "yes" : "no") + ", abelian normal Sylow: " + (rhs ? "yes" : "no");
  o.verdict = decide(true, o.conclusion_holds);
  o.millis = sw.millis();
  return o;
}

/// For N normal in G with N <= G': acd_p(G) <= p implies acd_p(G/N) <= acd_p(G).
/// Returns nullopt when N does not satisfy the preconditions.
inline std::optional<CheckOutcome> check_subset_lemma(GroupAnalysis& a, const PermGroup& n, std::uint64_t p,
                                                      const std::string& n_label = "N") {
  detail::Stopwatch sw;
  if (!a.derived().contains_subgroup(n) || !is_normal(a.group(), n)) return std::nullopt;
  CheckOutcome o{a.id(), "subset_lemma", p};
  o.acd = a.acd(p);
  o.threshold = p;
  o.hypothesis_met = o.acd <= o.threshold;
  o.boundary = o.acd == o.threshold;
  o.note = n_label + " of order " + n.order().str();
  if (o.hypothesis_met) {
    PermGroup quotient = quotient_group(a.group(), n);
    Rational qacd = acd_p(degree_spectrum(quotient, a.seed()), p);
    o.conclusion_holds = qacd <= o.acd;
    o.note += ", quotient acd " + to_string(qacd);
  }
  o.verdict = decide(o.hypothesis_met, o.conclusion_holds);
  o.millis = sw.millis();
  return o;
}

namespace detail {

inline Matrix mat_inverse_mod(const Matrix& a, std::uint32_t r) {
  const std::size_t m = a.size();
  std::vector<std::vector<std::uint64_t>> aug(m, std::vector<std::uint64_t>(2 * m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) aug[i][j] = a[i][j] % r;
    aug[i][m + i] = 1;
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && aug[piv][c] == 0) ++piv;
    if (piv == m) throw PreconditionError("complement matrix is singular");
    std::swap(aug[c], aug[piv]);
    const std::uint64_t inv = inv_mod(aug[c][c], r);
    for (auto& v : aug[c]) v = v * inv % r;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      const std::uint64_t f = aug[i][c];
      for (std::size_t j = 0; j < 2 * m; ++j) aug[i][j] = (aug[i][j] + (r - f) * aug[c][j]) % r;
    }
  }
  Matrix inv(m, std::vector<std::uint32_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) inv[i][j] = static_cast<std::uint32_t>(aug[i][m + j]);
  return inv;
}

}  // namespace detail

/// Sizes of the orbits of H on the nontrivial linear characters of N = F_r^m,
/// where H acts on characters through the inverse-transpose of its matrices.
inline std::vector<std::uint64_t> dual_orbit_sizes(const SplitExtensionData& data) {
  const std::uint32_t r = data.r, m = data.m;
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < m; ++i) size *= r;
  std::vector<Matrix> dual;
  for (const auto& a : data.complement_generators) {
    Matrix inv = detail::mat_inverse_mod(a, r);
    Matrix t(m, std::vector<std::uint32_t>(m));
    for (std::uint32_t i = 0; i < m; ++i)
      for (std::uint32_t j = 0; j < m; ++j) t[i][j] = inv[j][i];
    dual.push_back(std::move(t));
  }
  auto apply = [&](const Matrix& mat, std::uint64_t code) {
    std::vector<std::uint64_t> v(m);
    for (std::uint32_t i = 0; i < m; ++i, code /= r) v[i] = code % r;
    std::uint64_t out = 0;
    for (std::uint32_t i = m; i-- > 0;) {
      std::uint64_t s = 0;
      for (std::uint32_t j = 0; j < m; ++j) s += mat[i][j] * v[j];
      out = out * r + s % r;
    }
    return out;
  };
  std::vector<bool> seen(size, false);
  std::vector<std::uint64_t> sizes;
  for (std::uint64_t start = 1; start < size; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint64_t> orbit{start};
    seen[start] = true;
    for (std::size_t h = 0; h < orbit.size(); ++h)
      for (const auto& mat : dual) {
        auto y = apply(mat, orbit[h]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    sizes.push_back(orbit.size());
  }
  return sizes;
}

/// G = N x| H with N elementary abelian and acd_p(G) <= p: some H-orbit O on
/// Irr(N) minus the trivial character has |O| = 1 or p | |O|, and
/// |O|(f+1)/(|O|+f) <= acd_p(G), f counting such orbits. f = 0 is vacuous.
inline CheckOutcome check_orbit_lemma(const std::string& id, const SplitExtensionData& data, const Rational& acd,
                                      std::uint64_t p) {
  detail::Stopwatch sw;
  CheckOutcome o{id, "orbit_lemma", p};
  o.acd = acd;
  o.threshold = p;
  auto sizes = dual_orbit_sizes(data);
  std::vector<std::uint64_t> qualifying;
  for (auto s : sizes)
    if (s == 1 || s % p == 0) qualifying.push_back(s);
  const std::uint64_t f = qualifying.size();
  o.hypothesis_met = acd <= Rational(p) && f >= 1;
  o.note = "orbits " + std::to_string(sizes.size()) + ", f = " + std::to_string(f);
  if (f >= 1) {
    Rational best = -1;
    for (auto s : qualifying) {
      Rational bound(BigInt(s) * (f + 1), BigInt(s + f));
      if (best < 0 || bound < best) best = bound;
    }
    o.conclusion_holds = best <= acd;
    o.boundary = best == acd;
    o.note += ", least bound " + to_string(best);
  } else {
    o.note += ", no orbit of size 1 or divisible by p";
  }
  o.verdict = decide(o.hypothesis_met, o.conclusion_holds);
  o.millis = sw.millis();
  return o;
}

}  // namespace acd
