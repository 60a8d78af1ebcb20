#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "acd/arith/bigint.hpp"
#include "acd/arith/modular.hpp"
#include "acd/core/error.hpp"
#include "acd/lie/factorize.hpp"
#include "acd/lie/polynomial.hpp"

namespace acd {

enum class LieFamily { PSL, PSU, PSp, OmegaOdd, POmegaPlus, POmegaMinus, Sp4Even, G2, F4, E6, E7 };

inline const char* family_tag(LieFamily f) {
  switch (f) {
    case LieFamily::PSL: return "PSL_n";
    case LieFamily::PSU: return "PSU_n";
    case LieFamily::PSp: return "PSp_2n";
    case LieFamily::OmegaOdd: return "Omega_odd";
    case LieFamily::POmegaPlus: return "POmega_plus";
    case LieFamily::POmegaMinus: return "POmega_minus";
    case LieFamily::Sp4Even: return "Sp4_even";
    case LieFamily::G2: return "G2";
    case LieFamily::F4: return "F4";
    case LieFamily::E6: return "E6";
    case LieFamily::E7: return "E7";
  }
  return "?";
}

inline LieFamily parse_family(const std::string& tag) {
  for (auto f : {LieFamily::PSL, LieFamily::PSU, LieFamily::PSp, LieFamily::OmegaOdd, LieFamily::POmegaPlus,
                 LieFamily::POmegaMinus, LieFamily::Sp4Even, LieFamily::G2, LieFamily::F4, LieFamily::E6, LieFamily::E7})
    if (tag == family_tag(f)) return f;
  throw PreconditionError("unknown Lie family '" + tag + "'");
}

inline bool family_has_rank(LieFamily f) {
  return f == LieFamily::PSL || f == LieFamily::PSU || f == LieFamily::PSp || f == LieFamily::OmegaOdd ||
         f == LieFamily::POmegaPlus || f == LieFamily::POmegaMinus;
}

/// Raised for parameter sets that are rejected rather than checked.
class LieExclusionError : public PreconditionError {
 public:
  LieExclusionError(std::string category, const std::string& what)
      : PreconditionError(what), category_(std::move(category)) {}
  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

/// A simple group of Lie type: family, rank parameter n (classical families) and q = r^f.
struct LieFamilySpec {
  LieFamily family = LieFamily::PSL;
  unsigned n = 0;
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  unsigned f = 0;

  static LieFamilySpec make(LieFamily family, std::uint64_t q, unsigned n = 0) {
    if (q < 2 || q > (1ull << 32)) throw PreconditionError("q out of range");
    auto primes = prime_divisors_small(q);
    if (primes.size() != 1) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
    LieFamilySpec s{family, family_has_rank(family) ? n : 0, q, primes[0], 0};
    for (std::uint64_t t = q; t > 1; t /= s.r) ++s.f;
    if (family_has_rank(family) && n == 0) throw PreconditionError(std::string(family_tag(family)) + " needs a rank n");
    if (family_has_rank(family) && n > 12) throw PreconditionError("rank too large");
    return s;
  }

  std::string name() const {
    std::string qs = std::to_string(q);
    switch (family) {
      case LieFamily::PSL: return "PSL_" + std::to_string(n) + "(" + qs + ")";
      case LieFamily::PSU: return "PSU_" + std::to_string(n) + "(" + qs + ")";
      case LieFamily::PSp: return "PSp_" + std::to_string(2 * n) + "(" + qs + ")";
      case LieFamily::OmegaOdd: return "Omega_" + std::to_string(2 * n + 1) + "(" + qs + ")";
      case LieFamily::POmegaPlus: return "POmega+_" + std::to_string(2 * n) + "(" + qs + ")";
      case LieFamily::POmegaMinus: return "POmega-_" + std::to_string(2 * n) + "(" + qs + ")";
      case LieFamily::Sp4Even: return "Sp_4(" + qs + ")";
      case LieFamily::G2: return "G_2(" + qs + ")";
      case LieFamily::F4: return "F_4(" + qs + ")";
      case LieFamily::E6: return "E_6(" + qs + ")";
      case LieFamily::E7: return "E_7(" + qs + ")";
    }
    return "?";
  }
};

struct Witness {
  std::string label;
  std::string formula;
  BigInt degree;
};

struct WitnessSet {
  std::vector<Witness> witnesses;
  BigInt steinberg;
  /// Deliberate departures from the listed formulas, one line each.
  std::vector<std::string> corrections;
};

struct CoverageResult {
  std::string group;
  BigInt order;
  std::vector<BigInt> primes_of_order;
  std::vector<BigInt> primes_covered;
  std::vector<BigInt> missing;
  WitnessSet witnesses;

  bool ok() const noexcept { return missing.empty(); }
};

struct LieOrder {
  BigInt order;
  BigInt r_part;
};

namespace detail {

struct QEval {
  BigInt q;

  Rational pw(long k) const {
    if (k >= 0) return Rational(big_pow(q, static_cast<unsigned>(k)));
    return Rational(BigInt(1), big_pow(q, static_cast<unsigned>(-k)));
  }
  /// q^k - sign.
  Rational qm(unsigned k, int sign = 1) const { return Rational(big_pow(q, k) - sign); }
  Rational phi(unsigned k) const { return Rational(cyclotomic(k).evaluate(q)); }
  static Rational ipow(const Rational& x, long e) {
    Rational out = 1;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= x;
    return e < 0 ? Rational(1) / out : out;
  }
};

inline int alt_sign(unsigned i) { return i % 2 == 0 ? 1 : -1; }

inline BigInt gcd_u(std::uint64_t a, const BigInt& b) { return boost::multiprecision::gcd(BigInt(a), b); }

inline void add_witness(WitnessSet& ws, const LieFamilySpec& s, std::string label, std::string formula, const Rational& value) {
  if (denominator(value) != 1 || value <= 0)
    throw InternalError("witness formula " + label + " = " + formula + " is not a positive integer at q = " +
                        std::to_string(s.q) + " (value " + to_string(value) + "); suspected transcription issue");
  ws.witnesses.push_back({std::move(label), std::move(formula), numerator(value)});
}

}  // namespace detail

/// Rejects parameter sets that have no witness check. With `structural_only`,
/// only malformed parameters are rejected.
inline void validate(const LieFamilySpec& s, bool structural_only = false) {
  const bool odd = s.r != 2;
  auto reject = [&](const std::string& cat, const std::string& why) {
    if (structural_only && cat != "invalid") return;
    throw LieExclusionError(cat, s.name() + ": " + why);
  };
  switch (s.family) {
    case LieFamily::PSL:
      if (s.n < 2) reject("invalid", "PSL_n needs n >= 2");
      if (s.n == 2) {
        if (s.q <= 3) reject("not-simple", "PSL_2(q) is solvable for q <= 3");
        if (!odd) reject("cyclic-out", "outer automorphism group is cyclic; no witness set needed");
        if (s.q == 5 || s.q == 9) reject("alternating", "isomorphic to an alternating group (A_5 or A_6)");
      }
      if (s.n == 3 && !odd && s.q == 2) reject("alternating", "PSL_3(2) is isomorphic to PSL_2(7)");
      if (s.n == 3 && s.q == 8) reject("atlas", "deferred to the ATLAS");
      break;
    case LieFamily::PSU:
      if (s.n < 3) reject("invalid", "PSU_n needs n >= 3");
      if (s.n == 3 && s.q == 2) reject("not-simple", "PSU_3(2) is solvable");
      break;
    case LieFamily::PSp:
      if (s.n < 2) reject("invalid", "PSp_2n needs n >= 2");
      if (!odd && s.n == 2) reject("invalid", "use Sp4_even for Sp_4(2^f)");
      if (!odd) reject("cyclic-out", "outer automorphism group is cyclic; no witness set needed");
      break;
    case LieFamily::OmegaOdd:
      if (s.n < 2) reject("invalid", "Omega_{2n+1} needs n >= 2");
      if (!odd) reject("invalid", "Omega_{2n+1}(2^f) is isomorphic to Sp_2n(2^f)");
      break;
    case LieFamily::POmegaPlus:
      if (s.n < 4) reject("invalid", "POmega+_{2n} needs n >= 4");
      if (!odd && s.n == 4 && s.q == 2) reject("atlas", "deferred to the ATLAS");
      break;
    case LieFamily::POmegaMinus:
      if (s.n < 4) reject("invalid", "POmega-_{2n} needs n >= 4");
      if (!odd) reject("cyclic-out", "outer automorphism group is cyclic; no witness set needed");
      break;
    case LieFamily::Sp4Even:
      if (odd) reject("invalid", "Sp4_even needs q = 2^f");
      if (s.q == 2) reject("atlas", "Sp_4(2)' is isomorphic to A_6; deferred to the ATLAS");
      break;
    case LieFamily::G2:
      if (s.q == 2) reject("not-simple", "G_2(2) is not simple");
      break;
    case LieFamily::F4:
    case LieFamily::E6:
    case LieFamily::E7:
      break;
  }
}

/// |S| and |S|_r from the generic order formulas.
inline LieOrder group_order(const LieFamilySpec& s) {
  validate(s, true);
  const BigInt q = s.q;
  const unsigned n = s.n;
  BigInt prod = 1, rpart = 1, center = 1;
  auto qm = [&](unsigned k, int sign = 1) { return big_pow(q, k) - sign; };
  switch (s.family) {
    case LieFamily::PSL:
      rpart = big_pow(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) prod *= qm(i);
      center = detail::gcd_u(n, q - 1);
      break;
    case LieFamily::PSU:
      rpart = big_pow(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) prod *= qm(i, detail::alt_sign(i));
      center = detail::gcd_u(n, q + 1);
      break;
    case LieFamily::PSp:
    case LieFamily::OmegaOdd:
      rpart = big_pow(q, n * n);
      for (unsigned i = 1; i <= n; ++i) prod *= qm(2 * i);
      center = detail::gcd_u(2, q - 1);
      break;
    case LieFamily::POmegaPlus:
    case LieFamily::POmegaMinus: {
      const int sign = s.family == LieFamily::POmegaPlus ? 1 : -1;
      rpart = big_pow(q, n * (n - 1));
      prod = qm(n, sign);
      for (unsigned i = 1; i < n; ++i) prod *= qm(2 * i);
      center = detail::gcd_u(4, qm(n, sign));
      break;
    }
    case LieFamily::Sp4Even:
      rpart = big_pow(q, 4);
      prod = qm(2) * qm(4);
      break;
    case LieFamily::G2:
      rpart = big_pow(q, 6);
      prod = qm(6) * qm(2);
      break;
    case LieFamily::F4:
      rpart = big_pow(q, 24);
      prod = qm(12) * qm(8) * qm(6) * qm(2);
      break;
    case LieFamily::E6:
      rpart = big_pow(q, 36);
      prod = qm(12) * qm(9) * qm(8) * qm(6) * qm(5) * qm(2);
      center = detail::gcd_u(3, q - 1);
      break;
    case LieFamily::E7:
      rpart = big_pow(q, 63);
      prod = qm(18) * qm(14) * qm(12) * qm(10) * qm(8) * qm(6) * qm(2);
      center = detail::gcd_u(2, q - 1);
      break;
  }
  if (prod % center != 0) throw InternalError("center order does not divide |S|");
  return {rpart * prod / center, rpart};
}

/// The listed character degrees of S, each checked to be a positive integer, plus the Steinberg degree.
inline WitnessSet witness_degrees(const LieFamilySpec& s) {
  validate(s);
  LieOrder ord = group_order(s);
  WitnessSet ws;
  ws.steinberg = ord.r_part;
  const detail::QEval e{BigInt(s.q)};
  const unsigned n = s.n;
  const bool odd = s.r != 2;
  auto add = [&](std::string label, std::string formula, const Rational& v) {
    detail::add_witness(ws, s, std::move(label), std::move(formula), v);
  };
  auto prod_range = [&](unsigned lo, unsigned hi, const std::function<Rational(unsigned)>& term) {
    Rational p = 1;
    for (unsigned i = lo; i <= hi; ++i) p *= term(i);
    return p;
  };
  const Rational one = 1;
  switch (s.family) {
    case LieFamily::PSL: {
      if (n == 2) {
        if ((s.q - 3) / 2 < 2 || (s.q - 1) / 2 < 2) throw InternalError("no even labels i, j available");
        add("chi_2", "q+1", e.qm(1, -1));
        add("theta_2", "q-1", e.qm(1));
        break;
      }
      if (odd) {
        const unsigned m = n % 2 == 1 ? n : n - 1;
        Rational num = prod_range(2, n, [&](unsigned i) { return e.qm(i); });
        add("theta_1", "prod_{i=2}^n (q^i-1) / ((q^m-1)(q-1)^(n-m-1)), m = " + std::to_string(m),
            num / (e.qm(m) * detail::QEval::ipow(e.qm(1), static_cast<long>(n) - m - 1)));
        if (n == 3) {
          add("theta_2", "q^2+q+1", e.pw(2) + e.pw(1) + one);
        } else if (s.q % 4 == 1) {
          add("theta_2", "(q^n-1)(q^(n-1)-1)/(q-1)^2", e.qm(n) * e.qm(n - 1) / (e.qm(1) * e.qm(1)));
        } else {
          add("theta_2", "(q^n-1)(q^(n-1)-1)/(q^2-1)", e.qm(n) * e.qm(n - 1) / e.qm(2));
        }
        break;
      }
      if (n == 3) {
        add("chi_s", "q^3-1", e.qm(3));
        add("chi^(1,2)", "q(q+1)", e.pw(1) * e.qm(1, -1));
        break;
      }
      if (s.q == 2 && n == 6) {
        add("chi^(1,5)", "fixed", 62);
        add("chi^(2,4)", "fixed", 588);
        add("chi^(1,2,3)", "fixed", 6480);
        break;
      }
      if (s.q == 2 && n == 7) {
        add("chi^(1,6)", "fixed", 126);
        add("chi^(2,5)", "fixed", 2540);
        add("chi^(1,1,5)", "fixed", 5208);
        break;
      }
      const unsigned m = n % 2 == 0 ? n : n - 1;
      Rational num = prod_range(2, n, [&](unsigned i) { return e.qm(i); });
      add("chi_s", "prod_{i=2}^n (q^i-1) / ((q-1)^(n-m-1)(q^m-1)), m = " + std::to_string(m),
          num / (detail::QEval::ipow(e.qm(1), static_cast<long>(n) - m - 1) * e.qm(m)));
      add("chi^(1,n-1)", "q(q^(n-1)-1)/(q-1)", e.pw(1) * e.qm(n - 1) / e.qm(1));
      add("chi^(2,n-2)", "q^2(q^n-1)(q^(n-3)-1)/((q-1)(q^2-1))",
          e.pw(2) * e.qm(n) * e.qm(n - 3) / (e.qm(1) * e.qm(2)));
      break;
    }
    case LieFamily::PSU: {
      auto u = [&](unsigned i) { return e.qm(i, detail::alt_sign(i)); };
      Rational num = prod_range(2, n, u);
      if (odd) {
        const unsigned m = n % 2 == 1 ? n : n - 1;
        add("theta_1", "prod_{i=2}^n (q^i-(-1)^i) / ((q^m+1)(q+1)^(n-m-1)), m = " + std::to_string(m),
            num / (e.qm(m, -1) * detail::QEval::ipow(e.qm(1, -1), static_cast<long>(n) - m - 1)));
        if (n == 3) {
          add("theta_2", "q^2-q+1", e.pw(2) - e.pw(1) + one);
        } else {
          add("alpha", "q^2(q^n-(-1)^n)(q^(n-3)-(-1)^(n-3))/((q+1)(q^2-1))",
              e.pw(2) * u(n) * u(n - 3) / (e.qm(1, -1) * e.qm(2)));
          add("beta", "q^3(q^(n-1)-(-1)^(n-1))(q^(n-2)-(-1)^(n-2))/((q+1)(q^2-1))",
              e.pw(3) * u(n - 1) * u(n - 2) / (e.qm(1, -1) * e.qm(2)));
        }
        break;
      }
      if (n == 3) {
        add("chi_1", "q^3+1", e.qm(3, -1));
        add("chi_2", "q(q-1)", e.pw(1) * e.qm(1));
        break;
      }
      const unsigned m = n % 2 == 0 ? n : n - 1;
      add("chi_s", "prod_{i=2}^n (q^i-(-1)^i) / ((q+1)^(n-m-1)(q^m-1)), m = " + std::to_string(m),
          num / (detail::QEval::ipow(e.qm(1, -1), static_cast<long>(n) - m - 1) * e.qm(m)));
      add("chi^(1,n-1)", "q(q^(n-1)-(-1)^(n-1))/(q+1)", e.pw(1) * u(n - 1) / e.qm(1, -1));
      add("chi^(2,n-2)", "q^2(q^n-(-1)^n)(q^(n-3)-(-1)^(n-3))/((q+1)(q^2-1))",
          e.pw(2) * u(n) * u(n - 3) / (e.qm(1, -1) * e.qm(2)));
      break;
    }
    case LieFamily::PSp:
    case LieFamily::OmegaOdd:
      add("theta", "(q^n-1) prod_{i=1}^{n-1} (q^(2i)-1)", e.qm(n) * prod_range(1, n - 1, [&](unsigned i) { return e.qm(2 * i); }));
      add("chi", "q(q^n+1)(q^(n-1)-1)/(2(q-1))", e.pw(1) * e.qm(n, -1) * e.qm(n - 1) / (Rational(2) * e.qm(1)));
      break;
    case LieFamily::POmegaMinus: {
      Rational pi = prod_range(1, n - 1, [&](unsigned i) { return e.qm(2 * i); });
      add("theta", "prod_{i=1}^{n-1} (q^(2i)-1)", pi);
      add("chi", "q(q^n+1)(q^(n-2)-1)/(q^2-1)", e.pw(1) * e.qm(n, -1) * e.qm(n - 2) / e.qm(2));
      break;
    }
    case LieFamily::POmegaPlus: {
      Rational pi = prod_range(1, n - 1, [&](unsigned i) { return e.qm(2 * i); });
      if (!odd) {
        add("chi_s", "(q^n-1) prod_{i=1}^{n-1} (q^(2i)-1) / ((q+1)(q^(n-1)+1))",
            e.qm(n) * pi / (e.qm(1, -1) * e.qm(n - 1, -1)));
        add("unipotent", "(q^(2n)-q^2)/(q^2-1)", (e.pw(2 * n) - e.pw(2)) / e.qm(2));
      } else if (n == 4) {
        add("chi_1", "q(q^2+1)^2", e.pw(1) * e.qm(2, -1) * e.qm(2, -1));
        add("chi_2", "q^3(q-1)^4(q^2+q+1)/2",
            e.pw(3) * detail::QEval::ipow(e.qm(1), 4) * (e.pw(2) + e.pw(1) + one) / Rational(2));
        add("chi_3", "q^3(q+1)^4(q^2-q+1)/2",
            e.pw(3) * detail::QEval::ipow(e.qm(1, -1), 4) * (e.pw(2) - e.pw(1) + one) / Rational(2));
      } else if (n % 2 == 0) {
        add("theta_1", "(q^n-1) prod_{i=1}^{n-1} (q^(2i)-1) / ((q^2+1)(q^(n-2)+1))",
            e.qm(n) * pi / (e.qm(2, -1) * e.qm(n - 2, -1)));
        if (s.q == 3) {
          add("theta_2", "(q^n-1) prod_{i=1}^{n-1} (q^(2i)-1) / (26(3^(n-3)-1))",
              e.qm(n) * pi / (Rational(26) * e.qm(n - 3)));
        } else {
          const int eps = s.q % 4 == 1 ? 1 : -1;
          add("theta_2", "(q^n-1) prod_{i=1}^{n-1} (q^(2i)-1) / ((q+eps)(q^(n-1)+eps)), eps = " + std::to_string(eps),
              e.qm(n) * pi / (e.qm(1, -eps) * e.qm(n - 1, -eps)));
        }
      } else {
        add("theta", "prod_{i=1}^{n-1} (q^(2i)-1)", pi);
        add("chi", "q(q^n-1)(q^(n-2)+1)/(q^2-1)", e.pw(1) * e.qm(n) * e.qm(n - 2, -1) / e.qm(2));
      }
      break;
    }
    case LieFamily::Sp4Even:
      add("chi_1", "q(q-1)^2/2", e.pw(1) * e.qm(1) * e.qm(1) / Rational(2));
      add("chi_2", "q(q+1)^2/2", e.pw(1) * e.qm(1, -1) * e.qm(1, -1) / Rational(2));
      add("chi_3", "q(q^2+1)/2", e.pw(1) * e.qm(2, -1) / Rational(2));
      break;
    case LieFamily::G2:
      add("phi_{1,3'}", "q Phi3 Phi6 / 3", e.pw(1) * e.phi(3) * e.phi(6) / Rational(3));
      add("G2(theta)", "q Phi1^2 Phi2^2 / 3", e.pw(1) * e.phi(1) * e.phi(1) * e.phi(2) * e.phi(2) / Rational(3));
      ws.corrections.push_back("G2(theta): listed as Phi1^2 Phi2^2 / 3, evaluated with an extra factor q");
      add("phi_{1,6}", "q^6", e.pw(6));
      break;
    case LieFamily::F4:
      add("phi_{8,3'}", "q^3 Phi4^2 Phi8 Phi12", e.pw(3) * e.phi(4) * e.phi(4) * e.phi(8) * e.phi(12));
      add("F4[i]", "q^4 Phi1^4 Phi2^4 Phi3^2 Phi6^2 / 4",
          e.pw(4) * detail::QEval::ipow(e.phi(1), 4) * detail::QEval::ipow(e.phi(2), 4) * e.phi(3) * e.phi(3) *
              e.phi(6) * e.phi(6) / Rational(4));
      add("phi_{1,24}", "q^24", e.pw(24));
      break;
    case LieFamily::E6: {
      add("phi_{81,6}", "q^6 Phi3^3 Phi6^2 Phi9 Phi12",
          e.pw(6) * detail::QEval::ipow(e.phi(3), 3) * e.phi(6) * e.phi(6) * e.phi(9) * e.phi(12));
      add("phi_{1,36}", "q^36", e.pw(36));
      Rational t = e.pw(7) * detail::QEval::ipow(e.phi(1), 6) * detail::QEval::ipow(e.phi(2), 4) * e.phi(4) * e.phi(4) *
                   e.phi(5) * e.phi(8) / Rational(3);
      add("E6[theta]", "q^7 Phi1^6 Phi2^4 Phi4^2 Phi5 Phi8 / 3", t);
      add("E6[theta^2]", "q^7 Phi1^6 Phi2^4 Phi4^2 Phi5 Phi8 / 3", t);
      break;
    }
    case LieFamily::E7: {
      add("phi_{27,2}", "q^2 Phi3^2 Phi6^2 Phi9 Phi12 Phi18",
          e.pw(2) * e.phi(3) * e.phi(3) * e.phi(6) * e.phi(6) * e.phi(9) * e.phi(12) * e.phi(18));
      add("phi_{189,5}", "q^5 Phi3^2 Phi6^2 Phi7 Phi9 Phi12 Phi14 Phi18",
          e.pw(5) * e.phi(3) * e.phi(3) * e.phi(6) * e.phi(6) * e.phi(7) * e.phi(9) * e.phi(12) * e.phi(14) *
              e.phi(18));
      add("phi_{1,63}", "q^63", e.pw(63));
      Rational t = e.pw(7) * detail::QEval::ipow(e.phi(1), 6) * detail::QEval::ipow(e.phi(2), 6) * e.phi(4) * e.phi(4) *
                   e.phi(5) * e.phi(7) * e.phi(8) * e.phi(10) * e.phi(14) / Rational(3);
      add("E6[theta]", "q^7 Phi1^6 Phi2^6 Phi4^2 Phi5 Phi7 Phi8 Phi10 Phi14 / 3", t);
      add("E6[theta^2]", "q^7 Phi1^6 Phi2^6 Phi4^2 Phi5 Phi7 Phi8 Phi10 Phi14 / 3", t);
      break;
    }
  }
  for (const auto& w : ws.witnesses)
    if (ord.order % w.degree != 0)
      throw InternalError("witness " + w.label + " = " + w.degree.str() + " does not divide |" + s.name() + "|");
  return ws;
}

/// Prime divisors of |S|, gathered from r and the values Phi_k(q).
inline std::vector<BigInt> primes_of_order(const LieFamilySpec& s, const BigInt& order) {
  const unsigned kmax = family_has_rank(s.family) ? 2 * s.n + 2 : 36;
  std::set<BigInt> cand{BigInt(s.r)};
  for (unsigned k = 1; k <= kmax; ++k)
    for (const auto& p : distinct_primes(cyclotomic(k).evaluate(BigInt(s.q)))) cand.insert(p);
  BigInt rest = order;
  std::vector<BigInt> out;
  for (const auto& p : cand) {
    if (rest % p != 0) continue;
    out.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest != 1) throw InternalError("order of " + s.name() + " has an unexplained cofactor " + rest.str());
  return out;
}

/// Every prime divisor of |S| divides the Steinberg degree or a witness degree.
inline CoverageResult prime_coverage_check(const LieFamilySpec& s) {
  CoverageResult res;
  res.group = s.name();
  res.order = group_order(s).order;
  res.witnesses = witness_degrees(s);
  res.primes_of_order = primes_of_order(s, res.order);
  for (const auto& p : res.primes_of_order) {
    bool hit = res.witnesses.steinberg % p == 0;
    for (const auto& w : res.witnesses.witnesses) hit = hit || w.degree % p == 0;
    (hit ? res.primes_covered : res.missing).push_back(p);
  }
  return res;
}

/// The default parameter matrix swept by `lie --all` and `verify --lie`.
inline std::vector<LieFamilySpec> default_lie_matrix() {
  std::vector<LieFamilySpec> out;
  auto push = [&](LieFamily f, std::uint64_t q, unsigned n = 0) {
    auto s = LieFamilySpec::make(f, q, n);
    try {
      validate(s);
    } catch (const LieExclusionError&) {
      return;
    }
    out.push_back(s);
  };
  for (std::uint64_t q : {7, 11, 13, 17, 19, 23, 25, 27}) push(LieFamily::PSL, q, 2);
  for (unsigned n = 3; n <= 6; ++n)
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8}) {
      push(LieFamily::PSL, q, n);
      push(LieFamily::PSU, q, n);
    }
  push(LieFamily::PSL, 2, 7);
  for (unsigned n = 2; n <= 5; ++n)
    for (std::uint64_t q : {3, 5, 7}) {
      push(LieFamily::PSp, q, n);
      push(LieFamily::OmegaOdd, q, n);
    }
  for (unsigned n = 4; n <= 7; ++n)
    for (std::uint64_t q : {3, 5, 7}) {
      push(LieFamily::POmegaPlus, q, n);
      push(LieFamily::POmegaMinus, q, n);
    }
  for (unsigned n = 4; n <= 6; ++n)
    for (std::uint64_t q : {2, 4}) push(LieFamily::POmegaPlus, q, n);
  for (std::uint64_t q : {4, 8, 16}) push(LieFamily::Sp4Even, q);
  for (std::uint64_t q : {3, 9}) push(LieFamily::G2, q);
  for (std::uint64_t q : {2, 4}) push(LieFamily::F4, q);
  for (std::uint64_t q : {2, 3, 4, 5}) {
    push(LieFamily::E6, q);
    push(LieFamily::E7, q);
  }
  return out;
}

}  // namespace acd
