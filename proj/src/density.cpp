#include "lincop/density.hpp"

#include <stdexcept>

namespace lincop {

std::map<Int, unsigned> factorize(const Int& n) {
  if (n < 1) throw std::domain_error("factorize: argument must be positive");
  std::map<Int, unsigned> factors;
  Int rest = n;
  for (Int p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      ++factors[p];
      rest /= p;
    }
  }
  if (rest > 1) ++factors[rest];
  return factors;
}

DensityReport exact_density(const ReducedForm& rf) {
  DensityReport report;
  report.reduced = rf;
  if (rf.s == 0) {
    // Proportional case: |u*x + v| grows without bound, so the coprime
    // arguments are at most the two solutions of u*x + v = +-1.
    report.period = 1;
    report.coprime_residues = 0;
    report.density = 0;
    report.positive = false;
    return report;
  }

  report.period = rf.s;
  Int count = 0;
  for (Int r = 0; r < rf.s; ++r) {
    if (gcd(rf.u * r + rf.v, rf.s) == 1) ++count;
  }
  report.coprime_residues = count;
  report.density = Rational(count, rf.s);
  report.positive = count > 0;

  for (const auto& [p, exp] : factorize(rf.s)) {
    (void)exp;  // the factor depends on p only, not its multiplicity
    Rational factor;
    if (rf.u % p == 0) {
      factor = (rf.v % p == 0) ? Rational(0) : Rational(1);
    } else {
      factor = Rational(p - 1, p);
    }
    report.local_factors.emplace(p, factor);
  }
  return report;
}

Verdict decide(const Int& a, const Int& b, const Int& c, const Int& d) {
  if (a == 0 || c == 0) {
    throw std::domain_error("decide: leading coefficients must be nonzero");
  }
  Verdict verdict;
  verdict.common_divisor = gcd4(a, b, c, d);
  if (verdict.common_divisor > 1) {
    verdict.reason = Reason::kCommonFactor;
  } else if (a * d == b * c) {
    verdict.reason = Reason::kProportional;
  } else {
    verdict.reason = Reason::kPositive;
    verdict.positive_density = true;
  }
  return verdict;
}

WitnessResult witness(const ReducedForm& rf) {
  WitnessResult result;
  if (rf.s == 0) return result;
  if (auto inv = mod_inverse(rf.u, rf.s)) {
    Int x = ((*inv * (1 - rf.v)) % rf.s + rf.s) % rf.s;
    result.x = x;
    result.method = WitnessMethod::kModularInverse;
    return result;
  }
  // When some prime of s divides both u and v it divides every u*r + v,
  // so the scan below would walk the whole period and find nothing.
  // That happens exactly when gcd(u, v, s) > 1; bail out up front.
  if (gcd(Int(gcd(rf.u, rf.v)), rf.s) != 1) return result;
  for (Int r = 0; r < rf.s; ++r) {
    if (gcd(rf.u * r + rf.v, rf.s) == 1) {
      result.x = r;
      result.method = WitnessMethod::kPeriodScan;
      return result;
    }
  }
  return result;
}

bool is_everywhere_coprime(const Int& a, const Int& b, const Int& c,
                           const Int& d) {
  ReducedForm rf = reduce(LinearPoly{a, b}, LinearPoly{c, d}).reduced;
  if (rf.s == 0) return false;
  for (Int r = 0; r < rf.s; ++r) {
    if (gcd(rf.u * r + rf.v, rf.s) != 1) return false;
  }
  return true;
}

EmpiricalDensity empirical_density(const LinearPoly& f, const LinearPoly& g,
                                   std::int64_t n) {
  if (n < 1) throw std::invalid_argument("empirical_density: N must be >= 1");
  Int hits = 0;
  for (std::int64_t x = -n; x <= n; ++x) {
    if (eval_gcd(f, g, Int(x)) == 1) ++hits;
  }
  Int window = 2 * Int(n) + 1;
  return EmpiricalDensity{hits, window, Rational(hits, window)};
}

}  // namespace lincop
