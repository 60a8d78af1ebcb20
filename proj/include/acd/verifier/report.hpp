#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "acd/constructions/catalog.hpp"
#include "acd/lie/families.hpp"
#include "acd/verifier/checks.hpp"

namespace acd {

inline constexpr const char* kToolVersion = "1.0.0";

struct VerifyConfig {
  std::uint64_t max_order = 200;
  std::uint64_t seed = 0;
  bool lie = false;
  bool normalizer_table = false;
  /// Per-check wall times in the JSON; off by default so reports are byte-stable.
  bool timings = false;
  unsigned threads = 0;
};

struct CheckError {
  std::string group;
  std::string check;
  std::uint64_t p = 0;
  std::string message;
};

struct NormalizerRow {
  std::string group;
  std::uint64_t p = 2;
  BigInt index;
  Rational acd;
};

struct LieEntry {
  std::string group;
  std::optional<CoverageResult> result;
  std::string error;
};

struct Summary {
  std::size_t confirmed = 0;
  std::size_t vacuous = 0;
  std::size_t violations = 0;
  std::size_t errors = 0;
  std::size_t boundary = 0;
  std::size_t groups = 0;
};

struct VerificationReport {
  VerifyConfig config;
  std::vector<CheckOutcome> checks;
  std::vector<CheckError> errors;
  std::vector<LieEntry> lie;
  std::vector<NormalizerRow> normalizer;
  Summary summary;

  bool clean() const noexcept { return summary.violations == 0 && summary.errors == 0; }

  /// 0 clean, 1 violations, 2 engine errors.
  int exit_code() const noexcept {
    if (summary.violations > 0) return 1;
    return summary.errors > 0 ? 2 : 0;
  }
};

namespace detail {

inline std::vector<std::uint64_t> primes_to_test(std::uint64_t order) {
  std::set<std::uint64_t> ps{2, 3, 5, 7};
  for (auto p : prime_divisors_small(order)) ps.insert(p);
  return {ps.begin(), ps.end()};
}

struct EntryResult {
  std::vector<CheckOutcome> checks;
  std::vector<CheckError> errors;
  std::vector<NormalizerRow> normalizer;
};

class SpectrumCache {
 public:
  DegreeSpectrum factor(const FactorRecipe& f, const PermGroup& g, std::uint64_t seed) {
    const std::string key = f.to_string();
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    DegreeSpectrum s = degree_spectrum(g, seed);
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(key, s);
    return s;
  }

 private:
  std::mutex mu_;
  std::map<std::string, DegreeSpectrum> cache_;
};

inline EntryResult verify_entry(const CatalogEntry& entry, const VerifyConfig& cfg, SpectrumCache& cache) {
  EntryResult out;
  const std::string id = entry.id();
  auto record_error = [&](const std::string& check, std::uint64_t p, const std::exception& e) {
    out.errors.push_back({id, check, p, e.what()});
  };
  std::optional<RecipeGroup> rg;
  try {
    rg = entry.materialize();
  } catch (const std::exception& e) {
    record_error("build", 0, e);
    return out;
  }
  std::optional<DegreeSpectrum> spec;
  try {
    if (rg->recipe.is_product()) {
      DegreeSpectrum s = cache.factor(rg->recipe.factors[0], rg->factors[0], cfg.seed);
      for (std::size_t k = 1; k < rg->factors.size(); ++k)
        s = product_spectrum(s, cache.factor(rg->recipe.factors[k], rg->factors[k], cfg.seed));
      spec = s;
    } else {
      spec = cache.factor(rg->recipe.factors[0], rg->group, cfg.seed);
    }
  } catch (const std::exception& e) {
    record_error("spectrum", 0, e);
    return out;
  }
  GroupAnalysis a(id, rg->group, cfg.seed, spec);

  std::vector<std::pair<std::string, PermGroup>> normals;
  try {
    if (!a.derived().is_trivial()) normals.emplace_back("derived subgroup", a.derived());
    for (const auto& n : rg->normal_subgroups) {
      if (n.is_trivial()) continue;
      bool dup = false;
      for (const auto& [label, m] : normals) dup = dup || same_group(m, n);
      if (!dup) normals.emplace_back("recipe subgroup", n);
    }
  } catch (const std::exception& e) {
    record_error("derived_subgroup", 0, e);
  }

  for (auto p : primes_to_test(entry.order)) {
    auto run = [&](const char* name, auto&& fn) {
      try {
        fn();
      } catch (const std::exception& e) {
        record_error(name, p, e);
      }
    };
    run("theorem_A", [&] { out.checks.push_back(check_theorem_A(a, p)); });
    run("theorem_B", [&] { out.checks.push_back(check_theorem_B(a, p)); });
    run("ito_michler", [&] { out.checks.push_back(check_ito_michler(a, p)); });
    for (const auto& [label, n] : normals)
      run("subset_lemma", [&] {
        if (auto o = check_subset_lemma(a, n, p, label)) out.checks.push_back(std::move(*o));
      });
    if (rg->split) run("orbit_lemma", [&] { out.checks.push_back(check_orbit_lemma(id, *rg->split, a.acd(p), p)); });
    if (cfg.normalizer_table && entry.order % p == 0 && !a.group().is_abelian())
      run("normalizer", [&] { out.normalizer.push_back({id, p, normalizer_index(a.group(), a.sylow(p)), a.acd(p)}); });
  }
  return out;
}

}  // namespace detail

inline void summarize(VerificationReport& rep) {
  Summary s;
  for (const auto& c : rep.checks) {
    if (c.verdict == Verdict::confirmed) ++s.confirmed;
    if (c.verdict == Verdict::vacuous) ++s.vacuous;
    if (c.verdict == Verdict::violation) ++s.violations;
    if (c.boundary) ++s.boundary;
  }
  s.errors = rep.errors.size();
  for (const auto& l : rep.lie)
    if (!l.result || !l.result->ok()) ++s.errors;
  s.groups = rep.summary.groups;
  rep.summary = s;
}

inline std::vector<LieEntry> run_lie_matrix() {
  std::vector<LieEntry> out;
  for (const auto& spec : default_lie_matrix()) {
    LieEntry e{spec.name(), std::nullopt, ""};
    try {
      e.result = prime_coverage_check(spec);
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

/// Runs every applicable check on every catalog group; output order is (order, recipe, p).
inline VerificationReport run_catalog(const VerifyConfig& cfg) {
  VerificationReport rep;
  rep.config = cfg;
  const auto entries = catalog(cfg.max_order);
  std::vector<detail::EntryResult> results(entries.size());
  detail::SpectrumCache cache;
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(entries.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) results[i] = detail::verify_entry(entries[i], cfg, cache);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (auto& r : results) {
    for (auto& c : r.checks) rep.checks.push_back(std::move(c));
    for (auto& e : r.errors) rep.errors.push_back(std::move(e));
    for (auto& n : r.normalizer) rep.normalizer.push_back(std::move(n));
  }
  if (cfg.lie) rep.lie = run_lie_matrix();
  rep.summary.groups = entries.size();
  summarize(rep);
  return rep;
}

// ---- serialization ----

using Json = nlohmann::ordered_json;

inline Json to_json(const CheckOutcome& c, bool timings) {
  Json j;
  j["group"] = c.group;
  j["check"] = c.check;
  j["p"] = c.p;
  j["acd"] = to_string(c.acd);
  j["threshold"] = to_string(c.threshold);
  j["hypothesis_met"] = c.hypothesis_met;
  j["conclusion_holds"] = c.conclusion_holds;
  j["verdict"] = verdict_name(c.verdict);
  j["boundary"] = c.boundary;
  if (!c.note.empty()) j["note"] = c.note;
  if (timings) j["millis"] = c.millis;
  return j;
}

inline Json to_json(const CoverageResult& r) {
  auto strs = [](const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
  };
  Json j;
  j["group"] = r.group;
  j["order"] = r.order.str();
  j["steinberg"] = r.witnesses.steinberg.str();
  Json w = Json::array();
  for (const auto& x : r.witnesses.witnesses) w.push_back({{"label", x.label}, {"formula", x.formula}, {"degree", x.degree.str()}});
  j["witnesses"] = w;
  j["primes_of_order"] = strs(r.primes_of_order);
  j["primes_covered"] = strs(r.primes_covered);
  j["missing"] = strs(r.missing);
  if (!r.witnesses.corrections.empty()) j["corrections"] = r.witnesses.corrections;
  return j;
}

inline Json to_json(const VerificationReport& rep) {
  Json j;
  j["version"] = kToolVersion;
  j["config"] = {{"max_order", rep.config.max_order},
                 {"seed", rep.config.seed},
                 {"lie", rep.config.lie},
                 {"normalizer_table", rep.config.normalizer_table}};
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back(to_json(c, rep.config.timings));
  j["checks"] = std::move(checks);
  Json errors = Json::array();
  for (const auto& e : rep.errors) errors.push_back({{"group", e.group}, {"check", e.check}, {"p", e.p}, {"message", e.message}});
  j["errors"] = std::move(errors);
  Json sharp = Json::array();
  for (const auto& c : rep.checks)
    if (c.boundary && (c.check == "theorem_A" || c.check == "theorem_B"))
      sharp.push_back({{"group", c.group}, {"check", c.check}, {"p", c.p}, {"acd", to_string(c.acd)}});
  j["boundary_cases"] = std::move(sharp);
  if (rep.config.lie) {
    Json lie = Json::array();
    for (const auto& l : rep.lie) {
      if (l.result) lie.push_back(to_json(*l.result));
      else lie.push_back({{"group", l.group}, {"error", l.error}});
    }
    j["lie"] = std::move(lie);
  }
  if (rep.config.normalizer_table) {
    Json t = Json::array();
    for (const auto& r : rep.normalizer)
      t.push_back({{"group", r.group}, {"p", r.p}, {"normalizer_index", r.index.str()}, {"acd", to_string(r.acd)}});
    j["normalizer_table"] = std::move(t);
  }
  j["summary"] = {{"groups", rep.summary.groups},
                  {"confirmed", rep.summary.confirmed},
                  {"vacuous", rep.summary.vacuous},
                  {"violations", rep.summary.violations},
                  {"errors", rep.summary.errors},
                  {"boundary", rep.summary.boundary}};
  return j;
}

inline void write_csv(std::ostream& os, const VerificationReport& rep) {
  os << "group,check,p,acd,threshold,hypothesis_met,conclusion_holds,verdict,boundary\n";
  for (const auto& c : rep.checks)
    os << c.group << ',' << c.check << ',' << c.p << ',' << to_string(c.acd) << ',' << to_string(c.threshold) << ','
       << c.hypothesis_met << ',' << c.conclusion_holds << ',' << verdict_name(c.verdict) << ',' << c.boundary << '\n';
}

}  // namespace acd
