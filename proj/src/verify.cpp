#include "lincop/verify.hpp"

#include "lincop/format.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace lincop {

namespace {

std::string verdict_label(const Verdict& verdict) {
  switch (verdict.reason) {
    case Reason::kPositive:
      return "positive";
    case Reason::kCommonFactor:
      return "zero (common factor " + verdict.common_divisor.str() + ")";
    case Reason::kProportional:
      return "zero (proportional)";
  }
  return "?";
}

// Runs all per-quadruple checks for a range of leading coefficients a
// (zero skipped by the caller); b, c, d sweep their full ranges.
SweepReport sweep_slice(std::int64_t bound_k,
                        const std::vector<std::int64_t>& a_values) {
  SweepReport part;
  for (std::int64_t a : a_values) {
    for (std::int64_t b = -bound_k; b <= bound_k; ++b) {
      for (std::int64_t c = -bound_k; c <= bound_k; ++c) {
        if (c == 0) continue;
        for (std::int64_t d = -bound_k; d <= bound_k; ++d) {
          ++part.quadruples_checked;
          LinearPoly f{a, b}, g{c, d};
          ReductionTrace trace = reduce(f, g);
          const ReducedForm& rf = trace.reduced;

          Verdict verdict = decide(a, b, c, d);
          DensityReport dens = exact_density(rf);
          if (verdict.positive_density != dens.positive) {
            part.mismatches.push_back(
                {a, b, c, d, verdict_label(verdict),
                 "density " + fraction_string(dens.density)});
          }

          Int lead_gcd = gcd(Int(a), Int(c));
          Int tail_gcd = gcd(Int(b), Int(d));
          Int raw_gcd = gcd(trace.raw_v, trace.raw_s);
          if (rf.u != lead_gcd) {
            part.lemma2_failures.push_back(
                {a, b, c, d,
                 "u=" + rf.u.str() + " but gcd(|a|,|c|)=" + lead_gcd.str()});
          }
          if (tail_gcd != raw_gcd) {
            part.lemma2_failures.push_back(
                {a, b, c, d,
                 "gcd(|b|,|d|)=" + tail_gcd.str() +
                     " but gcd(|v0|,|s0|)=" + raw_gcd.str()});
          }

          Int det = abs(Int(a) * d - Int(b) * c);
          if (rf.u * rf.s != det) {
            part.determinant_failures.push_back(
                {a, b, c, d,
                 "u*s=" + Int(rf.u * rf.s).str() + " but |ad-bc|=" + det.str()});
          }

          Int span = 2 * rf.s + 2;
          for (Int x = -span; x <= span; ++x) {
            Int direct = eval_gcd(f, g, x);
            Int via_form = gcd(rf.u * x + rf.v, rf.s);
            if (direct != via_form) {
              part.mismatches.push_back(
                  {a, b, c, d,
                   "gcd(|u*x+v|,s)=" + via_form.str() + " at x=" + x.str(),
                   "gcd(f(x),g(x))=" + direct.str()});
            }
          }
        }
      }
    }
  }
  return part;
}

template <typename Failure>
void sort_failures(std::vector<Failure>& failures) {
  std::sort(failures.begin(), failures.end(),
            [](const Failure& lhs, const Failure& rhs) {
              return std::tie(lhs.a, lhs.b, lhs.c, lhs.d) <
                     std::tie(rhs.a, rhs.b, rhs.c, rhs.d);
            });
}

}  // namespace

SweepReport exhaustive_check(std::int64_t bound_k) {
  if (bound_k < 1) throw std::invalid_argument("exhaustive_check: bound must be >= 1");
  auto start = std::chrono::steady_clock::now();

  std::vector<std::int64_t> a_values;
  for (std::int64_t a = -bound_k; a <= bound_k; ++a) {
    if (a != 0) a_values.push_back(a);
  }

  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, a_values.size());
  std::vector<std::vector<std::int64_t>> slices(workers);
  for (std::size_t i = 0; i < a_values.size(); ++i) {
    slices[i * workers / a_values.size()].push_back(a_values[i]);
  }

  std::vector<std::future<SweepReport>> parts;
  parts.reserve(workers);
  for (auto& slice : slices) {
    parts.push_back(std::async(std::launch::async, sweep_slice, bound_k,
                               std::move(slice)));
  }

  SweepReport report;
  report.bound = bound_k;
  for (auto& fut : parts) {
    SweepReport part = fut.get();
    report.quadruples_checked += part.quadruples_checked;
    auto append = [](auto& into, auto& from) {
      into.insert(into.end(), std::make_move_iterator(from.begin()),
                  std::make_move_iterator(from.end()));
    };
    append(report.mismatches, part.mismatches);
    append(report.lemma2_failures, part.lemma2_failures);
    append(report.determinant_failures, part.determinant_failures);
  }
  sort_failures(report.mismatches);
  sort_failures(report.lemma2_failures);
  sort_failures(report.determinant_failures);

  report.elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::vector<ConvergenceRow> convergence_table(const Int& a, const Int& b,
                                              const Int& c, const Int& d,
                                              const std::vector<std::int64_t>& ns) {
  if (ns.empty()) {
    throw std::invalid_argument("convergence_table: window list is empty");
  }
  if (!std::is_sorted(ns.begin(), ns.end()) ||
      std::adjacent_find(ns.begin(), ns.end()) != ns.end() || ns.front() < 1) {
    throw std::invalid_argument(
        "convergence_table: window sizes must be ascending and positive");
  }

  LinearPoly f{a, b}, g{c, d};
  ReducedForm rf = reduce(f, g).reduced;
  Rational exact = exact_density(rf).density;
  // A zero modulus has no period bound; at most the two solutions of
  // u*x + v = +-1 land in any window.
  Int bound_numerator = rf.s > 0 ? rf.s : Int(2);

  std::vector<ConvergenceRow> rows;
  rows.reserve(ns.size());
  for (std::int64_t n : ns) {
    EmpiricalDensity emp = empirical_density(f, g, n);
    ConvergenceRow row;
    row.n = n;
    row.hits = emp.hits;
    row.window = emp.window;
    row.empirical = emp.value;
    row.exact = exact;
    row.abs_error = abs(emp.value - exact);
    row.bound = Rational(bound_numerator, emp.window);
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json sweep_report_json(const SweepReport& report) {
  nlohmann::ordered_json j;
  j["bound"] = report.bound;
  j["quadruples_checked"] = report.quadruples_checked;
  j["mismatches"] = nlohmann::ordered_json::array();
  for (const auto& m : report.mismatches) {
    j["mismatches"].push_back({{"a", m.a},
                               {"b", m.b},
                               {"c", m.c},
                               {"d", m.d},
                               {"predicted", m.predicted},
                               {"observed", m.observed}});
  }
  auto identity_list = [](const std::vector<SweepIdentityFailure>& failures) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& f : failures) {
      arr.push_back(
          {{"a", f.a}, {"b", f.b}, {"c", f.c}, {"d", f.d}, {"detail", f.detail}});
    }
    return arr;
  };
  j["lemma2_failures"] = identity_list(report.lemma2_failures);
  j["determinant_failures"] = identity_list(report.determinant_failures);
  j["elapsed"] = report.elapsed;
  return j;
}

nlohmann::ordered_json convergence_json(const std::vector<ConvergenceRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["N"] = row.n;
    j["hits"] = json_int(row.hits);
    j["window"] = json_int(row.window);
    j["empirical"] = fraction_string(row.empirical);
    j["exact"] = fraction_string(row.exact);
    j["abs_error"] = fraction_string(row.abs_error);
    j["bound"] = fraction_string(row.bound);
    arr.push_back(std::move(j));
  }
  return nlohmann::ordered_json{{"rows", std::move(arr)}};
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream out;
  out << "N,empirical,exact,abs_error,bound\n";
  for (const auto& row : rows) {
    out << row.n << ',' << fraction_string(row.empirical) << ','
        << fraction_string(row.exact) << ',' << fraction_string(row.abs_error)
        << ',' << fraction_string(row.bound) << '\n';
  }
  return out.str();
}

}  // namespace lincop
