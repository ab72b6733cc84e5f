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

// Acceptance gate. Prints one PASS/FAIL line per criterion; `--only N` runs a
// single criterion. Exit status is 0 iff every criterion that ran passed.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cferr/cf.hpp"
#include "cferr/error_series.hpp"
#include "cferr/hypergeom.hpp"
#include "cferr/identities.hpp"
#include "cferr/parallel.hpp"

namespace {

using namespace cferr;

// Pinned tolerances. Identity criteria are exact (tolerance 0).
const Rational kResidualBound("1/1000000000000000");  // 1e-15
const Rational kMaxEnclosureWidth = [] {
  Rational w = 1;
  for (int i = 0; i < 200; ++i) w /= 10;
  return w;
}();  // 1e-200, well under the required 1e-30
const Rational kRequiredWidth("1/1000000000000000000000000000000");  // 1e-30
constexpr long kPartialSumN = 20;
constexpr int kDualRouteOrder = 20;
constexpr long kDeterminantN = 30;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts failing reports and remembers the first one.
struct Tally {
  std::size_t total = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void add(const IdentityReport& r) {
    ++total;
    if (r.pass) return;
    if (failed++ == 0) {
      first_failure = r.id + " k=" + std::to_string(r.instance) + " lhs=" + to_string(r.lhs) +
                      " rhs=" + to_string(r.rhs);
    }
  }
  void add(const std::vector<IdentityReport>& rs) {
    for (const auto& r : rs) add(r);
  }
  template <class Fn>
  void add_range(long lo, long hi, Fn fn) {
    for (const auto& r : parallel_map(lo, hi, fn)) add(r);
  }
  Outcome outcome(const std::string& what) const {
    std::ostringstream os;
    os << what << ": " << total - failed << "/" << total << " exact";
    if (failed != 0) os << "; first failure " << first_failure;
    return {failed == 0, os.str()};
  }
};

Outcome criterion_1() {
  Tally t;
  t.add_range(0, 200, cor1);
  t.add_range(0, 200, cor1_binomial);
  return t.outcome("S_k = 1/k! and binomial form, k = 0..200");
}

Outcome criterion_2() {
  Tally t;
  t.add_range(0, 40, quadratic_coeff_exp);
  const WeightedSumAssembly a = assemble_quadratic_sum_exp(40);
  for (long r = 0; r <= 40; ++r) {
    const Rational via_series = a.assembled.coeff(static_cast<int>(r));
    t.add(make_report("thm1.assembly", r, via_series, make_rational(1, factorial(r)), a.terms));
    t.add(make_report("thm1.routes", r, quadratic_coeff_exp_value(r), via_series, a.terms));
  }
  return t.outcome("quadratic coefficient, four-sum formula and squared-series assembly, r = 0..40");
}

Outcome criterion_3() {
  Tally t;
  t.add_range(0, 200, verify_thm3);
  return t.outcome("3F2(z=-1) = k+1 and S_k = 3F2/(k+1)! = 1/k!, k = 0..200");
}

Outcome criterion_4() {
  Tally t;
  t.add_range(1, 200, verify_lemma_vanish);
  return t.outcome("3F2(z=1) = 0, k = 1..200");
}

Outcome criterion_5() {
  Tally t;
  t.add_range(0, 150, goal_z_coeff);
  t.add_range(1, 150, thm4);
  return t.outcome("(e^{2/s}+1)/2 coefficients k = 0..150; factorial and binomial forms k = 1..150");
}

Outcome criterion_6() {
  Tally t;
  t.add_range(1, 150, thm5);
  return t.outcome("factorial, binomial and both conversion identities, k = 1..150");
}

Outcome criterion_7() {
  Tally t;
  t.add_range(0, 25, quad_tanh);
  t.add(coefficient_reports("quad-series", assemble_phi_sum(20), 0, 20));
  return t.outcome("triple sums k = 0..25; Phi_0 + Phi_1 series through t^20");
}

Outcome criterion_8() {
  Tally t;
  t.add_range(1, 60, e2s_theorem);
  t.add(coefficient_reports("assemble-e2s", assemble_linear_sum_e2s(20), 0, 20));
  return t.outcome("seven-sum identity l = 1..60; weighted e^{2/s} series through t^20");
}

Outcome criterion_9() {
  std::size_t checked = 0;
  std::vector<std::string> bad;
  const auto compare = [&](const CfPattern& pattern, long last) {
    const auto terms = error_terms(pattern, last, SymbolicMode{kDualRouteOrder});
    for (const auto& e : terms) {
      if (e.n < 0) continue;
      ++checked;
      const LaurentSeries series = flat_abs_error(pattern.family(), e.n, kDualRouteOrder).series;
      if (!(e.series().abs() == series)) bad.push_back(pattern.describe() + " n=" + std::to_string(e.n));
    }
  };
  compare(CfPattern::exp_inv_s_symbolic(), 8);
  compare(CfPattern::exp_two_inv_s_symbolic(), 9);
  std::ostringstream os;
  os << "convergent route = factorial series through t^" << kDualRouteOrder << ": " << checked - bad.size()
     << "/" << checked;
  if (!bad.empty()) os << "; first mismatch " << bad.front();
  return {bad.empty(), os.str()};
}

// Smallest N (searching up to `limit`) whose residual upper bound is below
// the pinned bound.
long first_n_below_bound(const CfPattern& p, int power, long limit) {
  const auto run = numeric_partial_sums(p, limit, power, kMaxEnclosureWidth);
  for (const auto& step : run.steps) {
    if (step.residual.hi() < kResidualBound) return step.n;
  }
  return -2;
}

Outcome criterion_10() {
  struct Case {
    const char* name;
    CfPattern pattern;
    int power;
  };
  const std::vector<Case> cases{{"e^{1/2} power 1", CfPattern::exp_inv_s(2), 1},
                                {"e^{1/2} power 2", CfPattern::exp_inv_s(2), 2},
                                {"tanh(1,4) power 1", CfPattern::tanh_uv(1, 4), 1},
                                {"tanh(1,4) power 2", CfPattern::tanh_uv(1, 4), 2}};
  bool all = true;
  std::ostringstream os;
  os << "N = " << kPartialSumN << ", bound 1e-15, enclosure width <= 1e-200";
  for (const auto& c : cases) {
    const PartialSumRun run = numeric_partial_sums(c.pattern, kPartialSumN, c.power, kMaxEnclosureWidth);
    const auto& last = run.steps.back();
    bool monotone = true;
    bool narrow = true;
    for (std::size_t i = 0; i < run.steps.size(); ++i) {
      narrow = narrow && run.steps[i].residual.width() <= kRequiredWidth && !run.steps[i].width_dominated;
      if (run.steps[i].n > 2 && run.steps[i].residual.hi() > run.steps[i - 1].residual.hi()) monotone = false;
    }
    const bool small = last.residual.hi() < kResidualBound;
    const bool ok = small && monotone && narrow;
    all = all && ok;
    os << "\n    " << (ok ? "ok  " : "FAIL") << " " << c.name << ": residual <= " << to_scientific(last.residual.hi(), 4)
       << (monotone ? ", non-increasing from n=2" : ", NOT monotone") << (narrow ? "" : ", enclosure too wide");
    if (!small) {
      // The tail after N is at least its first term a_{N+2} |E_{N+1}|.
      const auto next = error_terms(c.pattern, kPartialSumN + 1, NumericMode{kMaxEnclosureWidth});
      RationalInterval first_tail = next.back().interval().abs();
      if (c.power == 2) first_tail = first_tail.square();
      first_tail *= RationalInterval(Rational(partial_quotient(c.pattern, kPartialSumN + 2)));
      os << "; residual >= a_" << kPartialSumN + 2 << "|E_" << kPartialSumN + 1 << "|"
         << (c.power == 2 ? "^2" : "") << " >= " << to_scientific(first_tail.lo(), 4)
         << ", so the bound is out of reach at N = " << kPartialSumN << "; first N below 1e-15 is "
         << first_n_below_bound(c.pattern, c.power, 60);
    }
  }
  return {all, os.str()};
}

Outcome criterion_11() {
  std::size_t checked = 0;
  std::vector<std::string> bad;
  const std::vector<CfPattern> patterns{
      CfPattern::exp_inv_s(2),     CfPattern::exp_inv_s(3),     CfPattern::exp_inv_s(17),
      CfPattern::exp_two_inv_s(3), CfPattern::exp_two_inv_s(5), CfPattern::exp_two_inv_s(11),
      CfPattern::tanh_uv(1, 4),    CfPattern::tanh_uv(2, 3),    CfPattern::tanh_uv(5, 5)};
  for (const auto& p : patterns) {
    const auto c = convergents(p, kDeterminantN);
    for (std::size_t i = 1; i < c.size(); ++i) {
      ++checked;
      const Integer det = c[i].p * c[i - 1].q - c[i - 1].p * c[i].q;
      const long n = c[i].n;
      const Integer want = (n % 2 == 0) ? -1 : 1;  // (-1)^{n-1}, n >= 0 here
      if (det != want) {
        bad.push_back(p.describe() + " n=" + std::to_string(c[i].n));
      }
    }
  }
  std::ostringstream os;
  os << "p_n q_{n-1} - p_{n-1} q_n = (-1)^{n-1}, n <= " << kDeterminantN << ", " << patterns.size()
     << " patterns: " << checked - bad.size() << "/" << checked;
  if (!bad.empty()) os << "; first failure " << bad.front();
  return {bad.empty(), os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{criterion_1, criterion_2, criterion_3, criterion_4,
                                                       criterion_5, criterion_6, criterion_7, criterion_8,
                                                       criterion_9, criterion_10, criterion_11};
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--only") only = std::atoi(argv[2]);
  if (argc != 1 && (only < 1 || only > static_cast<int>(criteria.size()))) {
    std::cerr << "usage: acceptance [--only N]\n";
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (only != 0 && id != only) continue;
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
