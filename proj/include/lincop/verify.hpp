#pragma once

#include "lincop/density.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lincop {

/// A quadruple where a predicted value disagreed with direct evaluation.
struct SweepMismatch {
  std::int64_t a, b, c, d;
  std::string predicted;
  std::string observed;
};

/// A quadruple violating one of the exact identities checked by the sweep.
struct SweepIdentityFailure {
  std::int64_t a, b, c, d;
  std::string detail;
};

/// Result of one exhaustive coefficient sweep. A clean run has every
/// failure list empty; elapsed is wall time and is the one field that is
/// not bit-stable across runs.
struct SweepReport {
  std::int64_t bound = 0;
  std::uint64_t quadruples_checked = 0;
  std::vector<SweepMismatch> mismatches;
  std::vector<SweepIdentityFailure> lemma2_failures;
  std::vector<SweepIdentityFailure> determinant_failures;
  double elapsed = 0.0;  // seconds
};

/// One window size in an empirical-vs-exact comparison.
struct ConvergenceRow {
  std::int64_t n = 0;
  Int hits;            // coprime arguments in [-N, N]
  Int window;          // 2N + 1
  Rational empirical;  // hits / window, reduced
  Rational exact;
  Rational abs_error;  // |empirical - exact|
  Rational bound;      // s/(2N+1); 2/(2N+1) when s = 0 (two isolated unit values at most)
};

/// Sweeps every quadruple with |a|,|b|,|c|,|d| <= K and a, c != 0, in
/// lexicographic order, checking for each one:
///   - the decision rule agrees with the measured density sign,
///   - u = gcd(|a|, |c|) and gcd(|b|, |d|) = gcd(|v0|, |s0|) on raw terminals,
///   - u * s = |a*d - b*c|,
///   - gcd(f(x), g(x)) = gcd(|u*x + v|, s) for all x in [-2s-2, 2s+2].
/// Violations are recorded rather than thrown. The sweep is partitioned
/// across worker threads by leading coefficient; partial reports merge by
/// summing counts and concatenating failure lists, which are sorted
/// lexicographically by (a, b, c, d) at the end.
SweepReport exhaustive_check(std::int64_t bound_k);

/// One ConvergenceRow per window size; ns must be nonempty and ascending.
/// Throws std::domain_error if a = 0 or c = 0.
std::vector<ConvergenceRow> convergence_table(const Int& a, const Int& b,
                                              const Int& c, const Int& d,
                                              const std::vector<std::int64_t>& ns);

nlohmann::ordered_json sweep_report_json(const SweepReport& report);
nlohmann::ordered_json convergence_json(const std::vector<ConvergenceRow>& rows);

/// CSV with header "N,empirical,exact,abs_error,bound"; rationals are
/// rendered in lowest terms.
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

}  // namespace lincop
