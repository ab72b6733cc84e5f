// Copyright 2026 The cferrsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cferr/catalog.hpp"
#include "cferr/cf.hpp"
#include "cferr/error_series.hpp"
#include "cferr/identities.hpp"

namespace cferrsum {

namespace {

using cferr::Integer;
using cferr::Rational;
using nlohmann::ordered_json;

/// Bad flags or parameters; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long parse_long(std::string_view text) {
  long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [end, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || end != last) throw UsageError("not an integer: '" + std::string(text) + "'");
  return value;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  long lo = 0;
  long hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_long(text);
  } else {
    lo = parse_long(std::string_view(text).substr(0, dots));
    hi = parse_long(std::string_view(text).substr(dots + 2));
  }
  if (lo > hi) throw UsageError("range " + text + " has lo > hi");
  return {lo, hi};
}

Integer parse_integer(const std::string& text, const char* name) {
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    throw UsageError(std::string("--") + name + " must be an integer, got '" + text + "'");
  }
  return z;
}

// Output sink: a file when --output is given, else the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot open " + path + " for writing");
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct PatternFlags {
  std::string family;
  std::string s;
  std::string u;
  std::string v;
  bool symbolic = false;

  cferr::CfPattern build() const {
    if (family == "exp-inv-s") {
      if (symbolic) return cferr::CfPattern::exp_inv_s_symbolic();
      return cferr::CfPattern::exp_inv_s(parse_integer(s, "s"));
    }
    if (family == "exp-two-inv-s") {
      if (symbolic) return cferr::CfPattern::exp_two_inv_s_symbolic();
      return cferr::CfPattern::exp_two_inv_s(parse_integer(s, "s"));
    }
    if (family == "tanh-uv") {
      if (symbolic) return cferr::CfPattern::tanh_uv(1, 1);  // u, v unused for series
      return cferr::CfPattern::tanh_uv(parse_integer(u, "u"), parse_integer(v, "v"));
    }
    throw UsageError("unknown family '" + family + "' (exp-inv-s, exp-two-inv-s, tanh-uv)");
  }
};

void add_pattern_flags(CLI::App* cmd, PatternFlags& f) {
  cmd->add_option("--family", f.family, "exp-inv-s, exp-two-inv-s or tanh-uv")->required();
  cmd->add_option("--s", f.s, "integer s for the exponential families");
  cmd->add_option("--u", f.u, "u for tanh-uv");
  cmd->add_option("--v", f.v, "v for tanh-uv");
}

std::string pass_word(bool pass) { return pass ? "PASS" : "FAIL"; }

// ---------------------------------------------------------------- verify

struct VerifyFlags {
  std::vector<std::string> ids;
  std::string range;
  std::string format = "json";
  std::string output;
};

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  if (f.format != "json" && f.format != "csv" && f.format != "pretty") {
    throw UsageError("unknown format '" + f.format + "' (json, csv, pretty)");
  }
  std::vector<const cferr::CatalogEntry*> entries;
  for (const auto& id : f.ids) {
    const cferr::CatalogEntry* e = cferr::find_identity(id);
    if (e == nullptr) throw UsageError("unknown identity id '" + id + "'");
    entries.push_back(e);
  }
  std::optional<std::pair<long, long>> range;
  if (!f.range.empty()) range = parse_range(f.range);

  // Run everything before writing so a usage error leaves no partial output.
  std::vector<cferr::IdentityReport> reports;
  for (const auto* e : entries) {
    const auto [lo, hi] = range.value_or(std::pair{e->default_lo, e->default_hi});
    try {
      for (auto& r : cferr::run_identity(*e, lo, hi)) reports.push_back(std::move(r));
    } catch (const cferr::CatalogError& ex) {
      throw UsageError(ex.what());
    }
  }

  Sink sink(f.output, out);
  std::ostream& os = *sink;
  if (f.format == "csv") os << cferr::kCsvHeader << '\n';
  std::size_t failures = 0;
  for (const auto& r : reports) {
    if (!r.pass) ++failures;
    if (f.format == "json") {
      os << cferr::to_json(r).dump() << '\n';
    } else if (f.format == "csv") {
      os << cferr::to_csv_row(r) << '\n';
    } else {
      os << pass_word(r.pass) << "  " << r.id << "  " << r.instance << "  lhs=" << cferr::to_string(r.lhs)
         << "  rhs=" << cferr::to_string(r.rhs) << "  terms=" << r.terms << '\n';
    }
  }
  if (f.format == "pretty") {
    os << reports.size() - failures << '/' << reports.size() << " passed\n";
  }
  return failures == 0 ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- expand

int cmd_expand(const std::string& quantity, int order, std::ostream& out) {
  if (order < 0) throw UsageError("--order must be >= 0");
  cferr::LaurentSeries s;
  if (quantity == "alpha-exp") {
    s = cferr::alpha_series(cferr::CfPattern::exp_inv_s_symbolic(), order);
  } else if (quantity == "alpha-e2s") {
    s = cferr::alpha_series(cferr::CfPattern::exp_two_inv_s_symbolic(), order);
  } else if (quantity == "linear-sum-exp") {
    s = cferr::assemble_linear_sum_exp(order).assembled;
  } else if (quantity == "linear-sum-e2s") {
    s = cferr::assemble_linear_sum_e2s(order).assembled;
  } else if (quantity == "phi-sum") {
    s = cferr::assemble_phi_sum(order).assembled;
  } else if (quantity == "quad-target") {
    s = cferr::assemble_phi_sum(order).target;
  } else {
    throw UsageError("unknown quantity '" + quantity +
                     "' (alpha-exp, alpha-e2s, linear-sum-exp, linear-sum-e2s, phi-sum, quad-target)");
  }
  out << s.to_json().dump() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- errors

struct ErrorsFlags {
  PatternFlags pattern;
  long n = 5;
  int order = 10;
  std::string eps = "1e-30";
};

int cmd_errors(const ErrorsFlags& f, std::ostream& out) {
  if (f.n < 0) throw UsageError("--n must be >= 0");
  const cferr::CfPattern pattern = f.pattern.build();
  if (f.pattern.symbolic) {
    if (pattern.family() == cferr::CfFamily::TanhUV) {
      // No recurrence over (u, s); print the closed-form series instead.
      for (long n = 0; n <= f.n; ++n) {
        const auto g = cferr::flat_abs_error(pattern.family(), n, f.order);
        ordered_json row;
        row["n"] = n;
        row["abs"] = g.to_json();
        out << row.dump() << '\n';
      }
      return kExitOk;
    }
    const auto terms = cferr::error_terms(pattern, f.n, cferr::SymbolicMode{f.order});
    for (const auto& e : terms) {
      if (e.n < 0) continue;
      ordered_json row;
      row["n"] = e.n;
      row["sign"] = e.sign;
      row["abs"] = e.series().abs().to_json();
      out << row.dump() << '\n';
    }
    return kExitOk;
  }
  const Rational eps = cferr::parse_rational(f.eps);
  if (eps <= 0) throw UsageError("--eps must be positive");
  const auto terms = cferr::error_terms(pattern, f.n, cferr::NumericMode{eps});
  for (const auto& e : terms) {
    const auto& x = e.interval();
    ordered_json row;
    row["n"] = e.n;
    row["sign"] = e.sign;
    row["lo"] = cferr::to_string(x.lo());
    row["hi"] = cferr::to_string(x.hi());
    row["approx"] = cferr::to_scientific(x.midpoint(), 20);
    out << row.dump() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- partial-sums

struct PartialFlags {
  PatternFlags pattern;
  long N = 20;
  int power = 1;
  std::string eps = "1e-200";
  std::string format = "json";
};

int cmd_partial_sums(const PartialFlags& f, std::ostream& out) {
  if (f.power != 1 && f.power != 2) throw UsageError("--power must be 1 or 2");
  if (f.N < 0) throw UsageError("--N must be >= 0");
  if (f.format != "json" && f.format != "pretty") throw UsageError("--format must be json or pretty");
  const Rational eps = cferr::parse_rational(f.eps);
  if (eps <= 0) throw UsageError("--eps must be positive");
  const cferr::CfPattern pattern = f.pattern.build();
  if (!pattern.has_numeric_alpha()) throw UsageError("partial sums need u*v to be a perfect square");
  const auto run = cferr::numeric_partial_sums(pattern, f.N, f.power, eps);
  for (const auto& step : run.steps) {
    if (f.format == "pretty") {
      out << std::setw(4) << step.n << "  residual <= " << cferr::to_scientific(step.residual.hi(), 6)
          << (step.width_dominated ? "  (width dominated)" : "") << '\n';
      continue;
    }
    ordered_json row;
    row["n"] = step.n;
    row["residual_hi"] = cferr::to_scientific(step.residual.hi(), 12);
    row["residual_lo"] = cferr::to_scientific(step.residual.lo(), 12);
    row["width_dominated"] = step.width_dominated;
    out << row.dump() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- report

int cmd_report(const std::string& output, std::ostream& out) {
  ordered_json summary;
  ordered_json identities = ordered_json::array();
  ordered_json failed = ordered_json::array();
  ordered_json timings;
  std::size_t total = 0;
  std::size_t failures = 0;
  for (const auto& e : cferr::identity_catalog()) {
    const auto start = std::chrono::steady_clock::now();
    const auto reports = cferr::run_identity(e, e.default_lo, e.default_hi);
    const auto stop = std::chrono::steady_clock::now();
    std::size_t bad = 0;
    for (const auto& r : reports) {
      if (r.pass) continue;
      ++bad;
      failed.push_back(cferr::to_json(r));
    }
    ordered_json row;
    row["id"] = e.id;
    row["statement"] = e.statement;
    row["range"] = {e.default_lo, e.default_hi};
    row["reports"] = reports.size();
    row["failures"] = bad;
    identities.push_back(std::move(row));
    timings[std::string(e.id)] =
        std::chrono::duration<double, std::milli>(stop - start).count();
    total += reports.size();
    failures += bad;
  }
  summary["identities"] = std::move(identities);
  summary["total_reports"] = total;
  summary["total_failures"] = failures;
  summary["failed"] = std::move(failed);
  summary["timings_ms"] = std::move(timings);
  Sink sink(output, out);
  *sink << summary.dump(2) << '\n';
  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of continued-fraction error-sum identities", "cferrsum"};
  app.require_subcommand(1);

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "check identities over a range of instances");
  verify_cmd->add_option("ids", verify.ids, "identity ids")->required();
  verify_cmd->add_option("--range", verify.range, "lo..hi (default: the identity's full range)");
  verify_cmd->add_option("--format", verify.format, "json, csv or pretty");
  verify_cmd->add_option("--output", verify.output, "write to a file instead of stdout");

  std::string quantity;
  int expand_order = 10;
  auto* expand_cmd = app.add_subcommand("expand", "print a series as JSON");
  expand_cmd->add_option("quantity", quantity, "alpha-exp, alpha-e2s, linear-sum-exp, linear-sum-e2s, phi-sum, quad-target")
      ->required();
  expand_cmd->add_option("--order", expand_order, "truncation order T");

  ErrorsFlags errors;
  auto* errors_cmd = app.add_subcommand("errors", "tabulate |E_n| as series or enclosures");
  add_pattern_flags(errors_cmd, errors.pattern);
  errors_cmd->add_flag("--symbolic", errors.pattern.symbolic, "series in t = 1/s");
  errors_cmd->add_option("--n", errors.n, "last index");
  errors_cmd->add_option("--order", errors.order, "truncation order (symbolic)");
  errors_cmd->add_option("--eps", errors.eps, "alpha enclosure width (numeric)");

  PartialFlags partial;
  auto* partial_cmd = app.add_subcommand("partial-sums", "residuals of the weighted error sums");
  add_pattern_flags(partial_cmd, partial.pattern);
  partial_cmd->add_option("--N", partial.N, "last index");
  partial_cmd->add_option("--power", partial.power, "1 or 2");
  partial_cmd->add_option("--eps", partial.eps, "target residual enclosure width");
  partial_cmd->add_option("--format", partial.format, "json or pretty");

  std::string report_output;
  auto* report_cmd = app.add_subcommand("report", "run the whole catalog and summarize");
  report_cmd->add_option("--output", report_output, "write the summary to a file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*expand_cmd) return cmd_expand(quantity, expand_order, out);
    if (*errors_cmd) return cmd_errors(errors, out);
    if (*partial_cmd) return cmd_partial_sums(partial, out);
    if (*report_cmd) return cmd_report(report_output, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    // Pattern and parameter validation in the library.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cferrsum
