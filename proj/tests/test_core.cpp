#include "lincop/core.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace lincop;

namespace {

Int rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return Int(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng));
}

Int rand_nonzero(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  Int value;
  do {
    value = rand_int(rng, lo, hi);
  } while (value == 0);
  return value;
}

std::string quad_label(const Int& a, const Int& b, const Int& c, const Int& d) {
  std::ostringstream out;
  out << "(" << a << ", " << b << ", " << c << ", " << d << ")";
  return out.str();
}

// Checks that a trace is internally consistent: the first step starts at the
// normalized pair, every quotient is maximal, every remainder links to the
// following step, and the terminal pair is (0, raw_s).
void check_replay(const ReductionTrace& trace, std::string& first_failure) {
  auto fail = [&](const std::string& what) {
    if (first_failure.empty()) first_failure = what;
  };
  if (trace.steps.empty()) {
    fail("empty step list");
    return;
  }
  if (trace.steps.front().a != trace.normalized_f.a ||
      trace.steps.front().b != trace.normalized_f.b ||
      trace.steps.front().next_a != trace.normalized_g.a ||
      trace.steps.front().next_b != trace.normalized_g.b) {
    fail("first step does not start at the normalized pair");
  }
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ReductionStep& step = trace.steps[i];
    if (step.next_a <= 0 || step.next_a > step.a) {
      fail("divisor out of range at step " + std::to_string(i));
    }
    Int rem_a = step.remainder_a();
    if (rem_a < 0 || rem_a >= step.next_a) {
      fail("quotient not maximal at step " + std::to_string(i));
    }
    if (i + 1 < trace.steps.size()) {
      const ReductionStep& next = trace.steps[i + 1];
      if (next.a != step.next_a || next.b != step.next_b ||
          next.next_a != rem_a || next.next_b != step.remainder_b()) {
        fail("steps do not chain at step " + std::to_string(i));
      }
    }
  }
  const ReductionStep& last = trace.steps.back();
  if (last.remainder_a() != 0) fail("terminal a-component is not zero");
  if (trace.reduced.u != last.next_a || trace.raw_v != last.next_b ||
      trace.raw_s != last.remainder_b()) {
    fail("terminal pair does not match the recorded reduced form");
  }
  if (trace.step_count != trace.steps.size() + 2) {
    fail("step_count is not steps + 2");
  }
}

}  // namespace

TEST_CASE("eval_gcd matches direct integer gcd") {
  CHECK(eval_gcd({1, 0}, {1, 1}, 7) == 1);
  CHECK(eval_gcd({6, 4}, {4, 2}, 3) == 2);   // gcd(22, 14)
  CHECK(eval_gcd({3, 1}, {1, 1}, 1) == 2);   // gcd(4, 2)
  CHECK(eval_gcd({1, 0}, {1, 0}, 0) == 0);   // gcd(0, 0) convention
  CHECK(eval_gcd({1, 0}, {2, -6}, 3) == 3);  // gcd(3, 0) = 3
  CHECK(eval_gcd({-2, 1}, {2, -1}, 4) == 7); // signs are dropped
}

TEST_CASE("reduce: single division step") {
  ReductionTrace trace = reduce({2, 1}, {1, 0});
  CHECK(trace.reduced == ReducedForm{1, 0, 1});
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0] == ReductionStep{2, 1, 1, 0, 2});
  CHECK(trace.step_count == 3);
  CHECK_FALSE(trace.swapped);
}

TEST_CASE("reduce: raw terminal is kept alongside the canonical form") {
  ReductionTrace trace = reduce({6, 4}, {4, 2});
  CHECK(trace.raw_v == 2);
  CHECK(trace.raw_s == -2);
  CHECK(trace.reduced == ReducedForm{2, 0, 2});
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].quotient == 1);
  CHECK(trace.steps[1].quotient == 2);
  CHECK(trace.step_count == 4);
}

TEST_CASE("reduce: constant remainder after one step") {
  ReductionTrace trace = reduce({3, 1}, {1, 1});
  CHECK(trace.raw_v == 1);
  CHECK(trace.raw_s == -2);
  CHECK(trace.reduced == ReducedForm{1, 1, 2});
  CHECK(trace.step_count == 3);
}

TEST_CASE("reduce: equal leading coefficients take quotient 1") {
  ReductionTrace trace = reduce({2, 1}, {2, 3});
  REQUIRE(!trace.steps.empty());
  CHECK(trace.steps[0].quotient == 1);
  CHECK_FALSE(trace.swapped);
  CHECK(trace.reduced == ReducedForm{2, 1, 2});
}

TEST_CASE("reduce rejects a zero leading coefficient") {
  CHECK_THROWS_AS(reduce({0, 1}, {1, 1}), std::domain_error);
  CHECK_THROWS_AS(reduce({1, 1}, {0, 5}), std::domain_error);
}

TEST_CASE("reduce: sign and order normalization is recorded") {
  ReductionTrace negated = reduce({-3, -1}, {1, 1});
  CHECK(negated.f_negated);
  CHECK_FALSE(negated.g_negated);
  CHECK_FALSE(negated.swapped);
  CHECK(negated.normalized_f == LinearPoly{3, 1});
  CHECK(negated.reduced == reduce({3, 1}, {1, 1}).reduced);

  ReductionTrace swapped = reduce({1, 1}, {3, 1});
  CHECK(swapped.swapped);
  CHECK(swapped.normalized_f == LinearPoly{3, 1});
  CHECK(swapped.normalized_g == LinearPoly{1, 1});
  CHECK(swapped.reduced == ReducedForm{1, 1, 2});
}

TEST_CASE("gcd4: examples and both groupings") {
  CHECK(gcd4(6, 4, 4, 2) == 2);
  CHECK(gcd4(1, 0, 1, 1) == 1);
  CHECK(gcd4(0, 0, 0, 0) == 0);

  std::mt19937_64 rng(20240811);
  for (int i = 0; i < 2000; ++i) {
    Int a = rand_int(rng, -60, 60), b = rand_int(rng, -60, 60);
    Int c = rand_int(rng, -60, 60), d = rand_int(rng, -60, 60);
    Int g = gcd4(a, b, c, d);
    CHECK(g == gcd(gcd(a, b), gcd(c, d)));
    CHECK(g == gcd(gcd(a, c), gcd(b, d)));
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 7) == Int(5));
  CHECK(mod_inverse(1, 2) == Int(1));
  CHECK(mod_inverse(-1, 5) == Int(4));
  CHECK(mod_inverse(5, 1) == Int(0));
  CHECK_FALSE(mod_inverse(2, 4).has_value());
  CHECK_FALSE(mod_inverse(0, 5).has_value());
  CHECK_THROWS_AS(mod_inverse(3, 0), std::domain_error);

  std::mt19937_64 rng(77);
  for (int i = 0; i < 2000; ++i) {
    Int a = rand_int(rng, -1000, 1000);
    Int m = rand_int(rng, 1, 500);
    auto inv = mod_inverse(a, m);
    if (gcd(a, m) == 1) {
      REQUIRE(inv.has_value());
      CHECK(*inv >= 0);
      CHECK(*inv < m);
      CHECK((a * *inv % m + m) % m == 1 % m);
    } else {
      CHECK_FALSE(inv.has_value());
    }
  }
}

TEST_CASE("exhaustive bound-8 sweep: pointwise identity, gcd splitting, "
          "determinant, termination, replay") {
  std::string first_failure;
  long checked = 0;
  for (int a = -8; a <= 8; ++a) {
    if (a == 0) continue;
    for (int b = -8; b <= 8; ++b) {
      for (int c = -8; c <= 8; ++c) {
        if (c == 0) continue;
        for (int d = -8; d <= 8; ++d) {
          ++checked;
          LinearPoly f{a, b}, g{c, d};
          ReductionTrace trace = reduce(f, g);
          const ReducedForm& rf = trace.reduced;
          auto fail = [&](const char* what) {
            if (first_failure.empty()) {
              first_failure = std::string(what) + " at " +
                              quad_label(a, b, c, d);
            }
          };

          check_replay(trace, first_failure);

          // canonical shape
          if (rf.u < 1 || rf.s < 0) fail("canonical sign violated");
          if (rf.s > 0 && (rf.v < 0 || rf.v >= rf.s)) {
            fail("canonical residue violated");
          }

          // leading and constant gcds survive the reduction
          if (rf.u != gcd(Int(a), Int(c))) fail("u != gcd(|a|,|c|)");
          if (gcd(Int(b), Int(d)) != gcd(trace.raw_v, trace.raw_s)) {
            fail("gcd(|b|,|d|) != gcd(|v0|,|s0|)");
          }
          if (gcd(Int(b), Int(d)) != gcd(rf.v, rf.s)) {
            fail("constant gcd identity broken by canonicalization");
          }

          // the pair determinant survives up to sign
          if (rf.u * rf.s != abs(Int(a) * d - Int(b) * c)) {
            fail("u*s != |ad-bc|");
          }
          if ((rf.s == 0) != (std::int64_t(a) * d == std::int64_t(b) * c)) {
            fail("s = 0 iff ad = bc violated");
          }

          // division-count bound; tight at (8, 5)
          double lead = double(std::max(std::abs(a), std::abs(c)));
          if (double(trace.step_count) > 2.0 + std::log2(lead) + 1.0) {
            fail("termination bound exceeded");
          }

          for (int x = -25; x <= 25; ++x) {
            if (eval_gcd(f, g, x) != gcd(rf.u * x + rf.v, rf.s)) {
              fail("pointwise gcd identity violated");
              break;
            }
          }
        }
      }
    }
  }
  CHECK(checked == 73984);
  CHECK_MESSAGE(first_failure.empty(), first_failure);
}

TEST_CASE("reduction handles coefficients beyond 64 bits") {
  std::mt19937_64 rng(123456);
  std::string first_failure;
  for (int i = 0; i < 200; ++i) {
    // ~38-digit coefficients, well past any fixed width
    Int scale = Int("100000000000000000000");
    Int a = rand_nonzero(rng, -1000000000, 1000000000) * scale +
            rand_int(rng, 0, 999999999);
    Int b = rand_int(rng, -1000000000, 1000000000) * scale;
    Int c = rand_nonzero(rng, -1000000000, 1000000000) * scale +
            rand_int(rng, 0, 999999999);
    Int d = rand_int(rng, -1000000000, 1000000000) * scale;
    LinearPoly f{a, b}, g{c, d};
    ReductionTrace trace = reduce(f, g);
    const ReducedForm& rf = trace.reduced;
    check_replay(trace, first_failure);
    if (rf.u * rf.s != abs(a * d - b * c)) {
      first_failure = "determinant identity failed for big coefficients";
    }
    for (int k = 0; k < 10; ++k) {
      Int x = rand_int(rng, -1000000, 1000000);
      if (eval_gcd(f, g, x) != gcd(rf.u * x + rf.v, rf.s)) {
        first_failure = "pointwise identity failed for big coefficients";
      }
    }
    // Euclid halves the larger operand every two steps
    double lead = std::max(double(abs(a)), double(abs(c)));
    CHECK(double(trace.steps.size()) <= 2.0 * std::log2(lead) + 2.0);
  }
  CHECK_MESSAGE(first_failure.empty(), first_failure);
}
