#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace lincop {

using Int = boost::multiprecision::cpp_int;

/// A linear integer polynomial a*x + b with nonzero leading coefficient.
struct LinearPoly {
  Int a;  // leading coefficient, must be nonzero for reduce()
  Int b;  // constant term

  Int operator()(const Int& x) const { return a * x + b; }

  friend bool operator==(const LinearPoly&, const LinearPoly&) = default;
};

/// One division step: (a, b) = quotient * (next_a, next_b) + remainder pair,
/// where quotient is the largest integer with quotient * next_a <= a.
struct ReductionStep {
  Int a;
  Int b;
  Int next_a;
  Int next_b;
  Int quotient;

  Int remainder_a() const { return a - quotient * next_a; }
  Int remainder_b() const { return b - quotient * next_b; }

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

/// Terminal data of the reduction, canonicalized: for every integer x,
/// gcd(f(x), g(x)) = gcd(|u*x + v|, s). Invariants: u >= 1, s >= 0, and
/// 0 <= v < s whenever s > 0.
struct ReducedForm {
  Int u;
  Int v;
  Int s;

  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
  friend bool operator<(const ReducedForm& lhs, const ReducedForm& rhs) {
    if (lhs.u != rhs.u) return lhs.u < rhs.u;
    if (lhs.v != rhs.v) return lhs.v < rhs.v;
    return lhs.s < rhs.s;
  }
};

/// Full record of one reduction run. The step list replays exactly: each
/// step's (next_a, next_b) is the previous step's remainder pair, and the
/// a-components decrease strictly to the terminal zero.
struct ReductionTrace {
  LinearPoly normalized_f;  // inputs after sign/order normalization
  LinearPoly normalized_g;
  bool f_negated = false;
  bool g_negated = false;
  bool swapped = false;
  std::vector<ReductionStep> steps;
  Int raw_v;  // terminal constant pair before canonicalization
  Int raw_s;
  ReducedForm reduced;
  std::size_t step_count = 0;  // index m at which the a-sequence hits zero; steps.size() + 2
};

/// gcd(|f(x)|, |g(x)|), with gcd(n, 0) = |n| and gcd(0, 0) = 0.
Int eval_gcd(const LinearPoly& f, const LinearPoly& g, const Int& x);

/// Runs the division chain on (f, g) down to the terminal pair (u*x + v, s).
/// Throws std::domain_error if either leading coefficient is zero.
ReductionTrace reduce(const LinearPoly& f, const LinearPoly& g);

/// gcd of all four arguments; gcd4(0,0,0,0) = 0.
Int gcd4(const Int& a, const Int& b, const Int& c, const Int& d);

/// Inverse of a modulo m (m >= 1), in [0, m); nullopt when gcd(a, m) != 1.
std::optional<Int> mod_inverse(const Int& a, const Int& m);

}  // namespace lincop
