#include "lincop/core.hpp"

#include <stdexcept>
#include <utility>

namespace lincop {

namespace {

void require_nonzero_lead(const LinearPoly& p, const char* which) {
  if (p.a == 0) {
    throw std::domain_error(std::string(which) +
                            ": leading coefficient must be nonzero");
  }
}

}  // namespace

Int eval_gcd(const LinearPoly& f, const LinearPoly& g, const Int& x) {
  return gcd(f(x), g(x));  // boost gcd is nonnegative and gcd(n, 0) = |n|
}

Int gcd4(const Int& a, const Int& b, const Int& c, const Int& d) {
  return gcd(gcd(a, b), gcd(c, d));
}

std::optional<Int> mod_inverse(const Int& a, const Int& m) {
  if (m < 1) throw std::domain_error("mod_inverse: modulus must be positive");
  Int r0 = ((a % m) + m) % m, r1 = m;
  Int x0 = 1, x1 = 0;
  while (r1 != 0) {
    Int q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  if (r0 != 1) return std::nullopt;
  return ((x0 % m) + m) % m;
}

ReductionTrace reduce(const LinearPoly& f, const LinearPoly& g) {
  require_nonzero_lead(f, "f");
  require_nonzero_lead(g, "g");

  ReductionTrace trace;
  LinearPoly p = f, q = g;
  if (p.a < 0) {
    p.a = -p.a;
    p.b = -p.b;
    trace.f_negated = true;
  }
  if (q.a < 0) {
    q.a = -q.a;
    q.b = -q.b;
    trace.g_negated = true;
  }
  if (p.a < q.a) {
    std::swap(p, q);
    trace.swapped = true;
  }
  trace.normalized_f = p;
  trace.normalized_g = q;

  // Division chain on the pair; the a-cursor runs a1 >= a2 > ... > 0, then 0.
  Int cur_a = p.a, cur_b = p.b;
  Int nxt_a = q.a, nxt_b = q.b;
  while (nxt_a != 0) {
    Int e = cur_a / nxt_a;  // both positive: floor = largest e with e*nxt_a <= cur_a
    Int rem_a = cur_a - e * nxt_a;
    Int rem_b = cur_b - e * nxt_b;
    trace.steps.push_back({cur_a, cur_b, nxt_a, nxt_b, e});
    cur_a = nxt_a;
    cur_b = nxt_b;
    nxt_a = rem_a;
    nxt_b = rem_b;
  }

  trace.raw_v = cur_b;
  trace.raw_s = nxt_b;
  trace.step_count = trace.steps.size() + 2;

  Int s = abs(nxt_b);
  Int v = s > 0 ? Int(((cur_b % s) + s) % s) : cur_b;
  trace.reduced = ReducedForm{cur_a, v, s};
  return trace;
}

}  // namespace lincop
