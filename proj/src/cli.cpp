#include "lincop/cli.hpp"

#include "lincop/core.hpp"
#include "lincop/density.hpp"
#include "lincop/format.hpp"
#include "lincop/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lincop::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { kHuman, kJson, kCsv };

bool is_integer_token(const std::string& token) {
  std::size_t start = token.size() > 1 && token.front() == '-' ? 1 : 0;
  if (start >= token.size()) return false;
  return std::all_of(token.begin() + start, token.end(),
                     [](unsigned char ch) { return std::isdigit(ch); });
}

// Shared by every subcommand that takes the four coefficients a b c d.
struct CoefficientArgs {
  std::string a, b, c, d;

  void attach(CLI::App* cmd) {
    cmd->fallthrough();
    auto check = CLI::Validator(
        [](std::string& token) {
          return is_integer_token(token) ? std::string()
                                         : "'" + token + "' is not an integer";
        },
        "INT");
    cmd->add_option("a", a, "leading coefficient of f")->required()->check(check);
    cmd->add_option("b", b, "constant term of f")->required()->check(check);
    cmd->add_option("c", c, "leading coefficient of g")->required()->check(check);
    cmd->add_option("d", d, "constant term of g")->required()->check(check);
  }

  Int av() const { return Int(a); }
  Int bv() const { return Int(b); }
  Int cv() const { return Int(c); }
  Int dv() const { return Int(d); }
};

std::string poly_string(const Int& a, const Int& b) {
  std::ostringstream out;
  if (a != 0) {
    if (a == -1) {
      out << "-x";
    } else if (a == 1) {
      out << "x";
    } else {
      out << a.str() << "x";
    }
    if (b > 0) out << "+" << b.str();
    if (b < 0) out << b.str();
  } else {
    out << b.str();
  }
  return out.str();
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

const char* method_name(WitnessMethod method) {
  switch (method) {
    case WitnessMethod::kModularInverse:
      return "modular-inverse";
    case WitnessMethod::kPeriodScan:
      return "period-scan";
    case WitnessMethod::kNone:
      return "none";
  }
  return "none";
}

const char* reason_name(Reason reason) {
  switch (reason) {
    case Reason::kPositive:
      return "positive";
    case Reason::kCommonFactor:
      return "common-factor";
    case Reason::kProportional:
      return "proportional";
  }
  return "?";
}

ordered_json poly_json(const LinearPoly& p) {
  return ordered_json{{"a", json_int(p.a)}, {"b", json_int(p.b)}};
}

void emit_reduce(const CoefficientArgs& args, Format format,
                 std::ostream& out) {
  ReductionTrace trace =
      reduce(LinearPoly{args.av(), args.bv()}, LinearPoly{args.cv(), args.dv()});
  const ReducedForm& rf = trace.reduced;

  switch (format) {
    case Format::kHuman: {
      out << "f(x) = " << poly_string(args.av(), args.bv()) << "\n";
      out << "g(x) = " << poly_string(args.cv(), args.dv()) << "\n";
      out << "normalized: (" << poly_string(trace.normalized_f.a, trace.normalized_f.b)
          << ", " << poly_string(trace.normalized_g.a, trace.normalized_g.b)
          << ")  [f negated: " << yes_no(trace.f_negated)
          << "; g negated: " << yes_no(trace.g_negated)
          << "; swapped: " << yes_no(trace.swapped) << "]\n";
      for (const ReductionStep& step : trace.steps) {
        out << "  (" << poly_string(step.a, step.b) << ") = "
            << step.quotient.str() << "*(" << poly_string(step.next_a, step.next_b)
            << ") + (" << poly_string(step.remainder_a(), step.remainder_b())
            << ")\n";
      }
      out << "terminal index m: " << trace.step_count << "\n";
      out << "raw terminal: (u, v, s) = (" << rf.u.str() << ", "
          << trace.raw_v.str() << ", " << trace.raw_s.str() << ")\n";
      out << "canonical: (u, v, s) = (" << rf.u.str() << ", " << rf.v.str()
          << ", " << rf.s.str() << ")\n";
      break;
    }
    case Format::kJson: {
      ordered_json j;
      j["input"] = ordered_json{{"a", json_int(args.av())},
                                {"b", json_int(args.bv())},
                                {"c", json_int(args.cv())},
                                {"d", json_int(args.dv())}};
      j["normalized_f"] = poly_json(trace.normalized_f);
      j["normalized_g"] = poly_json(trace.normalized_g);
      j["f_negated"] = trace.f_negated;
      j["g_negated"] = trace.g_negated;
      j["swapped"] = trace.swapped;
      j["steps"] = ordered_json::array();
      for (const ReductionStep& step : trace.steps) {
        j["steps"].push_back(ordered_json{{"a", json_int(step.a)},
                                          {"b", json_int(step.b)},
                                          {"next_a", json_int(step.next_a)},
                                          {"next_b", json_int(step.next_b)},
                                          {"quotient", json_int(step.quotient)}});
      }
      j["raw"] = ordered_json{{"u", json_int(rf.u)},
                              {"v", json_int(trace.raw_v)},
                              {"s", json_int(trace.raw_s)}};
      j["u"] = json_int(rf.u);
      j["v"] = json_int(rf.v);
      j["s"] = json_int(rf.s);
      j["m"] = trace.step_count;
      out << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      out << "u,v,s\n"
          << rf.u.str() << ',' << rf.v.str() << ',' << rf.s.str() << "\n";
      break;
  }
}

void emit_density(const CoefficientArgs& args, Format format,
                  std::ostream& out) {
  ReducedForm rf =
      reduce(LinearPoly{args.av(), args.bv()}, LinearPoly{args.cv(), args.dv()})
          .reduced;
  DensityReport report = exact_density(rf);

  switch (format) {
    case Format::kHuman: {
      out << "reduced form: (u, v, s) = (" << rf.u.str() << ", " << rf.v.str()
          << ", " << rf.s.str() << ")\n";
      out << "period: " << report.period.str() << "\n";
      out << "coprime residues per period: " << report.coprime_residues.str()
          << " of " << report.period.str() << "\n";
      out << "density: " << fraction_string(report.density) << " = "
          << decimal_string(report.density) << "\n";
      out << "local factors:";
      if (report.local_factors.empty()) {
        out << " (none)";
      } else {
        bool first = true;
        for (const auto& [p, factor] : report.local_factors) {
          out << (first ? " " : "; ") << p.str() << " -> "
              << fraction_string(factor);
          first = false;
        }
      }
      out << "\n";
      out << "positive: " << yes_no(report.positive) << "\n";
      break;
    }
    case Format::kJson: {
      ordered_json j;
      j["u"] = json_int(rf.u);
      j["v"] = json_int(rf.v);
      j["s"] = json_int(rf.s);
      j["period"] = json_int(report.period);
      j["coprime_residues"] = json_int(report.coprime_residues);
      j["density"] = fraction_string(report.density);
      j["decimal"] = decimal_string(report.density);
      j["positive"] = report.positive;
      ordered_json factors = ordered_json::object();
      for (const auto& [p, factor] : report.local_factors) {
        factors[p.str()] = fraction_string(factor);
      }
      j["local_factors"] = std::move(factors);
      out << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      out << "u,v,s,period,coprime_residues,density,decimal,positive\n"
          << rf.u.str() << ',' << rf.v.str() << ',' << rf.s.str() << ','
          << report.period.str() << ',' << report.coprime_residues.str() << ','
          << fraction_string(report.density) << ','
          << decimal_string(report.density) << ','
          << (report.positive ? "true" : "false") << "\n";
      break;
  }
}

int emit_decide(const CoefficientArgs& args, Format format, std::ostream& out) {
  Verdict verdict = decide(args.av(), args.bv(), args.cv(), args.dv());

  switch (format) {
    case Format::kHuman:
      if (verdict.positive_density) {
        out << "POSITIVE\n";
      } else if (verdict.reason == Reason::kCommonFactor) {
        out << "ZERO common-factor " << verdict.common_divisor.str() << "\n";
      } else {
        out << "ZERO proportional\n";
      }
      break;
    case Format::kJson: {
      ordered_json j;
      j["positive"] = verdict.positive_density;
      j["reason"] = reason_name(verdict.reason);
      if (verdict.reason == Reason::kCommonFactor) {
        j["divisor"] = json_int(verdict.common_divisor);
      }
      out << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      out << "positive,reason,divisor\n"
          << (verdict.positive_density ? "true" : "false") << ','
          << reason_name(verdict.reason) << ','
          << (verdict.reason == Reason::kCommonFactor
                  ? verdict.common_divisor.str()
                  : "")
          << "\n";
      break;
  }
  return verdict.positive_density ? 0 : 1;
}

void emit_witness(const CoefficientArgs& args, Format format,
                  std::ostream& out) {
  ReducedForm rf =
      reduce(LinearPoly{args.av(), args.bv()}, LinearPoly{args.cv(), args.dv()})
          .reduced;
  WitnessResult result = witness(rf);

  switch (format) {
    case Format::kHuman:
      if (result.x) {
        out << "x = " << result.x->str() << " (" << method_name(result.method)
            << ")\n";
      } else {
        out << "NONE\n";
      }
      break;
    case Format::kJson: {
      ordered_json j;
      j["found"] = result.x.has_value();
      if (result.x) j["x"] = json_int(*result.x);
      j["method"] = method_name(result.method);
      out << j.dump() << "\n";
      break;
    }
    case Format::kCsv:
      out << "found,x,method\n"
          << (result.x ? "true" : "false") << ','
          << (result.x ? result.x->str() : "") << ','
          << method_name(result.method) << "\n";
      break;
  }
}

void emit_everywhere(const CoefficientArgs& args, Format format,
                     std::ostream& out) {
  bool everywhere =
      is_everywhere_coprime(args.av(), args.bv(), args.cv(), args.dv());
  switch (format) {
    case Format::kHuman:
      out << (everywhere ? "true" : "false") << "\n";
      break;
    case Format::kJson:
      out << ordered_json{{"everywhere", everywhere}}.dump() << "\n";
      break;
    case Format::kCsv:
      out << "everywhere\n" << (everywhere ? "true" : "false") << "\n";
      break;
  }
}

void emit_verify(const CoefficientArgs& args, std::int64_t n,
                 const std::vector<std::int64_t>& table, Format format,
                 std::ostream& out) {
  std::vector<std::int64_t> ns = table.empty() ? std::vector<std::int64_t>{n}
                                               : table;
  auto rows = convergence_table(args.av(), args.bv(), args.cv(), args.dv(), ns);

  switch (format) {
    case Format::kHuman: {
      out << std::left << std::setw(10) << "N" << std::setw(16) << "empirical"
          << std::setw(12) << "exact" << std::setw(14) << "abs_error"
          << "bound\n";
      for (const auto& row : rows) {
        out << std::left << std::setw(10) << row.n << std::setw(16)
            << fraction_string(row.empirical) << std::setw(12)
            << fraction_string(row.exact) << std::setw(14)
            << fraction_string(row.abs_error) << fraction_string(row.bound)
            << "\n";
      }
      break;
    }
    case Format::kJson:
      out << convergence_json(rows).dump() << "\n";
      break;
    case Format::kCsv:
      out << convergence_csv(rows);
      break;
  }
}

void emit_scan(std::int64_t bound, Format format, std::ostream& out) {
  SweepReport report = exhaustive_check(bound);
  switch (format) {
    case Format::kHuman:
      out << "bound: " << report.bound << "\n";
      out << "quadruples checked: " << report.quadruples_checked << "\n";
      out << "mismatches: " << report.mismatches.size() << "\n";
      for (const auto& m : report.mismatches) {
        out << "  (" << m.a << "," << m.b << "," << m.c << "," << m.d
            << "): predicted " << m.predicted << ", observed " << m.observed
            << "\n";
      }
      out << "lemma2 failures: " << report.lemma2_failures.size() << "\n";
      for (const auto& f : report.lemma2_failures) {
        out << "  (" << f.a << "," << f.b << "," << f.c << "," << f.d << "): "
            << f.detail << "\n";
      }
      out << "determinant failures: " << report.determinant_failures.size()
          << "\n";
      for (const auto& f : report.determinant_failures) {
        out << "  (" << f.a << "," << f.b << "," << f.c << "," << f.d << "): "
            << f.detail << "\n";
      }
      out << "elapsed: " << std::fixed << std::setprecision(3)
          << report.elapsed << "s\n";
      break;
    case Format::kJson:
      out << sweep_report_json(report).dump() << "\n";
      break;
    case Format::kCsv:
      out << "bound,quadruples_checked,mismatches,lemma2_failures,"
             "determinant_failures,elapsed\n"
          << report.bound << ',' << report.quadruples_checked << ','
          << report.mismatches.size() << ',' << report.lemma2_failures.size()
          << ',' << report.determinant_failures.size() << ',' << std::fixed
          << std::setprecision(3) << report.elapsed << "\n";
      break;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"coprimality of linear integer polynomials f(x)=ax+b, g(x)=cx+d "
               "at integer arguments"};
  app.name("lincop");
  app.require_subcommand(1);

  std::string format_name = "human";
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();

  CoefficientArgs reduce_args, density_args, decide_args, witness_args,
      everywhere_args, verify_args;

  auto* cmd_reduce = app.add_subcommand(
      "reduce", "run the division chain down to (u*x + v, s)");
  reduce_args.attach(cmd_reduce);

  auto* cmd_density = app.add_subcommand(
      "density", "exact proportion of arguments with gcd(f(x), g(x)) = 1");
  density_args.attach(cmd_density);

  auto* cmd_decide = app.add_subcommand(
      "decide",
      "is the coprime density positive? exit 0 = POSITIVE, 1 = ZERO");
  decide_args.attach(cmd_decide);

  auto* cmd_witness = app.add_subcommand(
      "witness",
      "residue x in [0, s) with gcd(u*x + v, s) = 1, when one exists; s = 0 "
      "reports NONE since no residue class certifies positive density");
  witness_args.attach(cmd_witness);

  auto* cmd_everywhere = app.add_subcommand(
      "everywhere", "is gcd(f(x), g(x)) = 1 at every integer x?");
  everywhere_args.attach(cmd_everywhere);

  auto* cmd_verify = app.add_subcommand(
      "verify", "empirical window counts against the exact density");
  verify_args.attach(cmd_verify);
  auto* cmd_scan = app.add_subcommand(
      "scan", "exhaustive sweep of all |a|,|b|,|c|,|d| <= K, a,c != 0");
  cmd_scan->fallthrough();

  std::int64_t verify_n = 0;
  std::vector<std::int64_t> verify_table;
  cmd_verify->add_option("--N", verify_n, "half-width of the window [-N, N]")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd_verify
      ->add_option("--table", verify_table,
                   "comma-separated ascending list of window half-widths")
      ->delimiter(',');

  std::int64_t scan_bound = 0;
  cmd_scan->add_option("--bound", scan_bound, "coefficient bound K")
      ->required()
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  Format format = format_name == "json"  ? Format::kJson
                  : format_name == "csv" ? Format::kCsv
                                         : Format::kHuman;

  try {
    if (cmd_reduce->parsed()) {
      emit_reduce(reduce_args, format, out);
    } else if (cmd_density->parsed()) {
      emit_density(density_args, format, out);
    } else if (cmd_decide->parsed()) {
      return emit_decide(decide_args, format, out);
    } else if (cmd_witness->parsed()) {
      emit_witness(witness_args, format, out);
    } else if (cmd_everywhere->parsed()) {
      emit_everywhere(everywhere_args, format, out);
    } else if (cmd_verify->parsed()) {
      emit_verify(verify_args, verify_n, verify_table, format, out);
    } else if (cmd_scan->parsed()) {
      emit_scan(scan_bound, format, out);
    }
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace lincop::cli
