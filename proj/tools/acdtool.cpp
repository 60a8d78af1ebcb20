#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "acd/acd_metrics.hpp"
#include "acd/constructions/recipe.hpp"
#include "acd/lie/families.hpp"
#include "acd/verifier/report.hpp"

namespace {

using acd::Json;

Json spectrum_json(const std::string& id, const acd::DegreeSpectrum& s) {
  std::map<std::uint64_t, std::size_t> mult;
  for (auto d : s.degrees) ++mult[d];
  Json m = Json::array();
  for (const auto& [d, n] : mult) m.push_back({{"degree", d}, {"count", n}});
  return {{"group", id}, {"order", s.group_order}, {"class_count", s.class_count}, {"degrees", s.degrees}, {"multiplicities", m}};
}

acd::DegreeSpectrum spectrum_of(const acd::RecipeGroup& rg, std::uint64_t seed) {
  if (!rg.recipe.is_product()) return acd::degree_spectrum(rg.group, seed);
  return acd::degree_spectrum(std::span<const acd::PermGroup>(rg.factors), seed);
}

void require_prime(std::uint64_t p) {
  if (!acd::is_prime_u64(p)) throw acd::PreconditionError("p = " + std::to_string(p) + " is not prime");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character degree averages over Irr_p and verification of their bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", acd::kToolVersion);

  std::string spec;
  std::uint64_t p = 2, seed = 0;

  auto* table = app.add_subcommand("table", "degree spectrum of a group");
  table->add_option("group", spec, "group spec, e.g. sym:4 or agl1:11xcyclic:2")->required();
  table->add_option("--seed", seed);

  auto* acd_cmd = app.add_subcommand("acd", "acd_p with thresholds");
  acd_cmd->add_option("group", spec)->required();
  acd_cmd->add_option("-p", p, "prime")->required();
  acd_cmd->add_option("--seed", seed);

  auto* ell_cmd = app.add_subcommand("ell", "least l with lp+1 a prime power, and b_p, a_p");
  ell_cmd->add_option("-p", p, "prime")->required();

  acd::VerifyConfig cfg;
  std::string json_path, csv_path;
  auto* verify = app.add_subcommand("verify", "sweep the group catalog");
  verify->add_option("--max-order", cfg.max_order, "largest group order")->check(CLI::Range(1, 100000));
  verify->add_flag("--lie", cfg.lie, "append the Lie-type prime coverage matrix");
  verify->add_option("--json", json_path, "write the JSON report here (default stdout)");
  verify->add_option("--csv", csv_path, "write a CSV of all checks");
  verify->add_option("--seed", cfg.seed);
  verify->add_flag("--normalizer-table", cfg.normalizer_table, "tabulate [G:N_G(P)] against acd_p");
  verify->add_flag("--timings", cfg.timings, "include per-check wall times");
  verify->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");

  std::string family;
  std::uint64_t q = 0;
  unsigned rank = 0;
  bool all = false;
  auto* lie = app.add_subcommand("lie", "prime coverage by unipotent degrees");
  auto* fam_opt = lie->add_option("--family", family, "PSL_n PSU_n PSp_2n Omega_odd POmega_plus POmega_minus Sp4_even G2 F4 E6 E7");
  auto* q_opt = lie->add_option("--q", q, "field order");
  lie->add_option("--n", rank, "rank parameter");
  auto* all_opt = lie->add_flag("--all", all, "sweep the default matrix");
  fam_opt->needs(q_opt)->excludes(all_opt);
  q_opt->needs(fam_opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*table) {
      auto rg = acd::build(spec);
      std::cout << spectrum_json(rg.recipe.to_string(), spectrum_of(rg, seed)).dump(2) << '\n';
      return 0;
    }
    if (*acd_cmd) {
      require_prime(p);
      auto rg = acd::build(spec);
      auto s = spectrum_of(rg, seed);
      auto r = acd::acd_report(s, p);
      Json j{{"group", rg.recipe.to_string()},
             {"p", p},
             {"irr_p_degrees", r.irr_p_degrees},
             {"acd", acd::to_string(r.acd)},
             {"b_p", acd::to_string(r.b_p)},
             {"a_p", acd::to_string(r.a_p)},
             {"below_b", r.below_b},
             {"below_a", r.below_a}};
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (*ell_cmd) {
      require_prime(p);
      Json j{{"p", p}, {"ell", acd::ell(p)}, {"b_p", acd::to_string(acd::b_p(p))}, {"a_p", acd::to_string(acd::a_p(p))}};
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (*verify) {
      auto rep = acd::run_catalog(cfg);
      const std::string text = acd::to_json(rep).dump(2) + "\n";
      if (json_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw acd::PreconditionError("cannot open " + json_path);
        out << text;
      }
      if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw acd::PreconditionError("cannot open " + csv_path);
        acd::write_csv(out, rep);
      }
      const auto& s = rep.summary;
      std::cerr << "groups " << s.groups << ", confirmed " << s.confirmed << ", vacuous " << s.vacuous << ", violations "
                << s.violations << ", errors " << s.errors << ", boundary " << s.boundary << '\n';
      for (const auto& c : rep.checks)
        if (c.verdict == acd::Verdict::violation) std::cerr << "VIOLATION " << c.group << ' ' << c.check << " p=" << c.p << '\n';
      for (const auto& e : rep.errors) std::cerr << "error " << e.group << ' ' << e.check << ": " << e.message << '\n';
      return rep.exit_code();
    }
    if (*lie) {
      if (all) {
        Json arr = Json::array();
        bool ok = true;
        for (const auto& e : acd::run_lie_matrix()) {
          if (e.result) {
            arr.push_back(acd::to_json(*e.result));
            ok = ok && e.result->ok();
          } else {
            arr.push_back({{"group", e.group}, {"error", e.error}});
            ok = false;
          }
        }
        std::cout << arr.dump(2) << '\n';
        return ok ? 0 : 2;
      }
      if (family.empty()) throw acd::PreconditionError("lie needs --family and --q, or --all");
      auto s = acd::LieFamilySpec::make(acd::parse_family(family), q, rank);
      auto r = acd::prime_coverage_check(s);
      std::cout << acd::to_json(r).dump(2) << '\n';
      return r.ok() ? 0 : 2;
    }
  } catch (const acd::LieExclusionError& e) {
    std::cerr << "excluded (" << e.category() << "): " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
