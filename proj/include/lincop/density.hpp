#pragma once

#include "lincop/core.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace lincop {

using Rational = boost::multiprecision::cpp_rational;

/// Exact proportion of arguments x with gcd(f(x), g(x)) = 1, together with
/// the residue count over one period and the per-prime factor breakdown.
/// local_factors is an independent route to the same density: the counting
/// value must equal the product of the factors whenever s > 0.
struct DensityReport {
  ReducedForm reduced;
  Int period;            // s when s > 0; 1 for the degenerate s = 0 case
  Int coprime_residues;  // |{r in [0, s) : gcd(u*r + v, s) = 1}|
  Rational density;
  bool positive = false;
  std::map<Int, Rational> local_factors;  // prime p dividing s -> factor
};

enum class Reason { kPositive, kCommonFactor, kProportional };

/// Outcome of the positive-density decision on coefficients (a, b, c, d).
struct Verdict {
  bool positive_density = false;
  Reason reason = Reason::kPositive;
  Int common_divisor;  // gcd4(a, b, c, d), > 1 exactly for kCommonFactor
};

enum class WitnessMethod { kModularInverse, kPeriodScan, kNone };

/// A residue x in [0, s) with gcd(u*x + v, s) = 1, when one exists.
struct WitnessResult {
  std::optional<Int> x;
  WitnessMethod method = WitnessMethod::kNone;
};

/// Coprime-argument count over the symmetric window [-N, N].
struct EmpiricalDensity {
  Int hits;      // |{x in [-N, N] : gcd(f(x), g(x)) = 1}|
  Int window;    // 2N + 1, the unreduced denominator
  Rational value;
};

/// Exact density of coprime evaluations for a canonical reduced form.
/// s = 0 yields density 0 with period 1 and no local factors.
DensityReport exact_density(const ReducedForm& rf);

/// Positive density iff gcd4(a,b,c,d) = 1 and a*d != b*c. When both
/// conditions fail, the common factor is reported.
/// Throws std::domain_error if a = 0 or c = 0.
Verdict decide(const Int& a, const Int& b, const Int& c, const Int& d);

/// Finds a coprime residue in [0, s): by modular inverse when gcd(u, s) = 1,
/// otherwise by scanning one period. gcd(u, v, s) > 1 means no residue can
/// work, so NONE comes back without a scan. s = 0 always yields no witness,
/// even though isolated arguments with |u*x + v| = 1 may exist; a witness
/// certifies a positive-density residue class, not an isolated solution.
WitnessResult witness(const ReducedForm& rf);

/// True iff gcd(f(x), g(x)) = 1 for every integer x.
/// Throws std::domain_error if a = 0 or c = 0.
bool is_everywhere_coprime(const Int& a, const Int& b, const Int& c, const Int& d);

/// Counts coprime evaluations over [-N, N]; N >= 1.
EmpiricalDensity empirical_density(const LinearPoly& f, const LinearPoly& g,
                                   std::int64_t n);

/// Prime factorization by trial division; n >= 1. factorize(1) is empty.
std::map<Int, unsigned> factorize(const Int& n);

}  // namespace lincop
