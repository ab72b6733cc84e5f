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

#include "cferr/identities.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "cferr/hypergeom.hpp"

namespace cferr {

namespace {

Rational ratio(const Integer& num, const Integer& den) { return make_rational(num, den); }

Rational inv_factorial(long n) { return ratio(1, factorial(n)); }

Rational pow2(long e) { return Rational(power(Integer(2), static_cast<unsigned long>(e))); }

void require_at_least(long k, long min, const char* what) {
  if (k < min) {
    throw std::invalid_argument(std::string(what) + " needs an instance >= " + std::to_string(min) +
                                ", got " + std::to_string(k));
  }
}

}  // namespace

Rational s_k(long k) {
  require_at_least(k, 0, "S_k");
  Rational sum = 0;
  const Integer kf = factorial(k);
  for (long n = 0; n <= k; ++n) {
    sum += ratio((2 * n + 1) * kf, factorial(k - n) * factorial(n + k + 1));
  }
  return sum;
}

IdentityReport cor1(long k) {
  return make_report("cor1", k, s_k(k), inv_factorial(k), static_cast<std::size_t>(k + 1));
}

IdentityReport cor1_binomial(long k) {
  require_at_least(k, 0, "cor1.binomial");
  Integer sum = 0;
  for (long n = 0; n <= k; ++n) sum += (2 * n + 1) * binomial(2 * k + 1, k - n);
  return make_report("cor1.binomial", k, Rational(sum), Rational((2 * k + 1) * binomial(2 * k, k)),
                     static_cast<std::size_t>(k + 1));
}

IdentityReport coeff_linear_exp(long k) {
  require_at_least(k, 0, "linear-exp");
  Rational total = s_k(k);
  std::size_t terms = static_cast<std::size_t>(k + 1);
  for (long n = 0; n <= k - 1; ++n) {
    const Integer head = factorial(k - 1 - n);
    total -= ratio(factorial(k - 1), head * factorial(n + k));
    total += ratio(factorial(k), head * factorial(n + k + 1));
    total += ratio((n + 1) * factorial(k - 1), head * factorial(n + k + 1));
    terms += 3;
  }
  return make_report("linear-exp", k, total, inv_factorial(k), terms);
}

Rational quadratic_coeff_exp_value(long r, std::size_t* terms) {
  require_at_least(r, 0, "thm1");
  // f: (n+i)!/(i!(2n+i+1)!), g: (n+1+i)!/(i!(2n+i+2)!), h: (n+1)(n+i)!/(i!(2n+i+2)!)
  const auto f = [](long n, long i) { return ratio(factorial(n + i), factorial(i) * factorial(2 * n + i + 1)); };
  const auto g = [](long n, long i) {
    return ratio(factorial(n + 1 + i), factorial(i) * factorial(2 * n + i + 2));
  };
  const auto h = [](long n, long i) {
    return ratio((n + 1) * factorial(n + i), factorial(i) * factorial(2 * n + i + 2));
  };
  Rational total = r == 0 ? 1 : 0;
  std::size_t count = 0;
  for (long n = 0; 2 * n + 1 <= r; ++n) {
    for (long i = 0, j = r - 2 * n - 1; j >= 0; ++i, --j) {
      total += (2 * n + 1) * f(n, i) * f(n, j);
      ++count;
    }
    for (long i = 0, j = r - 2 * n - 2; j >= 0; ++i, --j) {
      total -= f(n, i) * f(n, j);
      total += g(n, i) * g(n, j) + h(n, i) * h(n, j);
      count += 3;
    }
  }
  if (terms != nullptr) *terms = count;
  return total;
}

IdentityReport quadratic_coeff_exp(long r) {
  std::size_t terms = 0;
  Rational lhs = quadratic_coeff_exp_value(r, &terms);
  return make_report("thm1.formula", r, std::move(lhs), inv_factorial(r), terms);
}

IdentityReport goal_z_coeff(long k) {
  require_at_least(k, 0, "goal-z");
  Rational sum = 0;
  for (long n = 0; n <= k / 2; ++n) {
    sum += ratio((4 * n + 1) * power(Integer(2), k) * factorial(k),
                 factorial(k - 2 * n) * factorial(2 * n + k + 1));
  }
  Rational closed = k == 0 ? Rational(1) : pow2(k - 1) / Rational(factorial(k));
  return make_report("goal-z", k, std::move(closed), std::move(sum),
                     static_cast<std::size_t>(k / 2 + 1));
}

IdentityReport second_tanh_coeff(long k) {
  require_at_least(k, 1, "second-tanh");
  Rational sum = 0;
  const long top = floor_div(k - 1, 2);
  for (long n = 0; n <= top; ++n) {
    const long m = k - 2 * n - 1;
    Integer num = (4 * n + 3) * power(Integer(4), n + 1) * power(Integer(2), m) *
                  factorial(2 * n + 1 + m);
    Integer den = 2 * factorial(m) * factorial(4 * n + 3 + m);
    sum += ratio(num, den);
  }
  return make_report("second-tanh", k, pow2(k - 1) / Rational(factorial(k)), std::move(sum),
                     static_cast<std::size_t>(top + 1));
}

Rational thm4_sum(long k) {
  Rational sum = 0;
  for (long n = 0; n <= k / 2; ++n) {
    sum += ratio((4 * n + 1) * 2 * factorial(k), factorial(k - 2 * n) * factorial(2 * n + k + 1));
  }
  return sum;
}

Rational thm5_sum(long k) {
  Rational sum = 0;
  for (long n = 0; n <= floor_div(k - 1, 2); ++n) {
    sum += ratio((4 * n + 3) * 2 * factorial(k), factorial(k - 2 * n - 1) * factorial(k + 2 * n + 2));
  }
  return sum;
}

std::vector<IdentityReport> thm4(long k) {
  require_at_least(k, 1, "thm4");
  const auto terms = static_cast<std::size_t>(k / 2 + 1);
  Integer bsum = 0;
  for (long n = 0; n <= k / 2; ++n) bsum += (4 * n + 1) * binomial(2 * k + 1, k - 2 * n);
  std::vector<IdentityReport> out;
  out.push_back(make_report("thm4.factorial", k, thm4_sum(k), inv_factorial(k), terms));
  out.push_back(make_report("thm4.binomial", k, Rational(2 * bsum),
                            Rational((2 * k + 1) * binomial(2 * k, k)), terms));
  return out;
}

std::vector<IdentityReport> thm5(long k) {
  require_at_least(k, 1, "thm5");
  const long top = floor_div(k - 1, 2);
  const auto terms = static_cast<std::size_t>(top + 1);
  std::vector<IdentityReport> out;
  out.push_back(make_report("thm5.factorial", k, thm5_sum(k), inv_factorial(k), terms));

  Integer bsum = 0;
  for (long n = 0; n <= top; ++n) bsum += (4 * n + 3) * (k + 2 * n + 3) * binomial(2 * k + 2, k - 2 * n - 1);
  const Integer k1 = k + 1;
  out.push_back(make_report("thm5.binomial", k, Rational(2 * bsum),
                            Rational(k1 * k1 * binomial(2 * k + 2, k + 1)), terms));

  const Integer kf = factorial(k);
  out.push_back(make_report("thm5.conversion1", k, ratio(factorial(2 * k + 2), kf * kf),
                            Rational(k1 * k1 * binomial(2 * k + 2, k + 1)), 1));

  // Checked term by term; the report carries the first mismatch, or the
  // totals of both sides when every term agrees.
  Rational lhs_total = 0;
  Rational rhs_total = 0;
  for (long n = 0; n <= top; ++n) {
    Rational lhs = ratio(factorial(2 * k + 2), factorial(k - 2 * n - 1) * factorial(k + 2 * n + 2));
    Rational rhs = Rational((k + 2 * n + 3) * binomial(2 * k + 2, k - 2 * n - 1));
    if (lhs != rhs) {
      out.push_back(make_report("thm5.conversion2", k, std::move(lhs), std::move(rhs),
                                static_cast<std::size_t>(n + 1)));
      return out;
    }
    lhs_total += lhs;
    rhs_total += rhs;
  }
  out.push_back(make_report("thm5.conversion2", k, std::move(lhs_total), std::move(rhs_total), terms));
  return out;
}

std::vector<IdentityReport> parity_split(long k) {
  require_at_least(k, 1, "parity-split");
  const Rational s = s_k(k);
  const Rational a = s_k_hypergeometric(k, Rational(1)) / Rational(factorial(k + 1));
  const auto terms = static_cast<std::size_t>(2 * (k + 1));
  std::vector<IdentityReport> out;
  out.push_back(make_report("parity-split.even", k, thm4_sum(k), s + a, terms));
  out.push_back(make_report("parity-split.odd", k, thm5_sum(k), s - a, terms));
  return out;
}

IdentityReport quad_tanh(long k) {
  require_at_least(k, 0, "thm-quad-tanh");
  Rational total = 0;
  std::size_t terms = 0;
  // 4n + m1 + m2 = k
  for (long n = 0; 4 * n <= k; ++n) {
    const Integer c = (4 * n + 1) * power(Integer(4), 2 * n);
    for (long m1 = 0, m2 = k - 4 * n; m2 >= 0; ++m1, --m2) {
      Integer num = c * power(Integer(2), m1 + m2) * factorial(2 * n + m1) * factorial(2 * n + m2);
      Integer den = factorial(m1) * factorial(m2) * factorial(4 * n + m1 + 1) * factorial(4 * n + m2 + 1);
      total += ratio(num, den);
      ++terms;
    }
  }
  // 4n + m1 + m2 = k + 2, n >= 1
  for (long n = 1; 4 * n <= k + 2; ++n) {
    const Integer c = (4 * n - 1) * power(Integer(4), 2 * n - 1);
    for (long m1 = 0, m2 = k + 2 - 4 * n; m2 >= 0; ++m1, --m2) {
      Integer num = c * power(Integer(2), m1 + m2) * factorial(2 * n - 1 + m1) *
                    factorial(2 * n - 1 + m2);
      Integer den = factorial(m1) * factorial(m2) * factorial(4 * n + m1 - 1) * factorial(4 * n + m2 - 1);
      total += ratio(num, den);
      ++terms;
    }
  }
  return make_report("thm-quad-tanh", k, std::move(total),
                     ratio(power(Integer(4), k), factorial(k + 1)), terms);
}

IdentityReport e2s_theorem(long l) {
  require_at_least(l, 1, "thm-e2s");
  const Integer two_l = power(Integer(2), l);
  const Integer two_l1 = power(Integer(2), l - 1);
  const Integer lf = factorial(l);
  const Integer lf1 = factorial(l - 1);
  const auto F = [](long n) { return factorial(n); };
  Rational total = 0;
  std::size_t terms = 0;
  for (long n = 0; n <= floor_div(l, 3); ++n, ++terms) {
    total += ratio((6 * n + 1) * two_l * lf, F(l - 3 * n) * F(l + 3 * n + 1));
  }
  for (long n = 0; n <= floor_div(l - 1, 3); ++n, terms += 2) {
    total -= ratio(two_l1 * lf1, F(l - 3 * n - 1) * F(l + 3 * n));
    total += ratio((12 * n + 6) * two_l * lf, F(l - 3 * n - 1) * F(l + 3 * n + 2));
  }
  for (long n = 0; n <= floor_div(l - 2, 3); ++n, ++terms) {
    total += ratio((6 * n + 5) * two_l * lf, F(l - 3 * n - 2) * F(l + 3 * n + 3));
  }
  for (long n = 0; n <= floor_div(l - 3, 3); ++n, terms += 3) {
    total -= ratio(two_l1 * lf1, F(l - 3 * n - 3) * F(l + 3 * n + 2));
    total += ratio(two_l * lf, F(l - 3 * n - 3) * F(l + 3 * n + 3));
    total += ratio(3 * (n + 1) * two_l * lf1, F(l - 3 * n - 3) * F(l + 3 * n + 3));
  }
  return make_report("thm-e2s", l, std::move(total), ratio(two_l, lf), terms);
}

namespace {

struct WeightedTerm {
  Polynomial weight;
  FactorialSeries shape;
};

// Adds weight * series^power for every term of every group whose lowest
// exponent is at most `order`. The lowest exponent of a group must grow with
// the group index, so the first group entirely above `order` ends the loop.
void add_groups(WeightedSumAssembly& a, int power, long first_group,
                const std::function<std::vector<WeightedTerm>(long)>& group) {
  const int order = a.order;
  for (long g = first_group;; ++g) {
    bool any = false;
    for (const WeightedTerm& term : group(g)) {
      const int deg = term.weight.degree();
      const int low = power * term.shape.lowest - deg;
      if (low > order) continue;
      any = true;
      const int series_order = std::max(term.shape.lowest, order + deg - (power - 1) * term.shape.lowest);
      LaurentSeries s = term.shape.to_series(series_order);
      if (power == 2) s = s * s;
      a.assembled += (term.weight.to_laurent() * s).truncated(order);
      ++a.terms;
    }
    if (!any) break;
    a.max_group_index = g;
  }
}

WeightedSumAssembly start(CfFamily family, int order, const Rational& constant) {
  if (order < 0) throw std::invalid_argument("assembly order must be >= 0");
  WeightedSumAssembly a{family, order, LaurentSeries::constant(constant, order), LaurentSeries(), -1, 0};
  if (constant == 0) a.assembled = LaurentSeries(order);
  return a;
}

}  // namespace

WeightedSumAssembly assemble_linear_sum_exp(int order) {
  // a_0 |E_{-1}| = 1
  WeightedSumAssembly a = start(CfFamily::ExpInvS, order, 1);
  const CfPattern p = CfPattern::exp_inv_s_symbolic();
  add_groups(a, 1, 0, [&](long n) {
    std::vector<WeightedTerm> terms;
    for (int c = 0; c < 3; ++c) terms.push_back({partial_quotient_symbolic(p, 3 * n + c + 1), e_abs_shape(n, c)});
    return terms;
  });
  a.target = LaurentSeries::constant(1, order) + series_exp(1, order);
  return a;
}

WeightedSumAssembly assemble_linear_sum_e2s(int order) {
  WeightedSumAssembly a = start(CfFamily::ExpTwoInvS, order, 1);
  const CfPattern p = CfPattern::exp_two_inv_s_symbolic();
  add_groups(a, 1, 0, [&](long n) {
    std::vector<WeightedTerm> terms;
    for (int c = 0; c < 5; ++c) terms.push_back({partial_quotient_symbolic(p, 5 * n + c + 1), e2s_abs_shape(n, c)});
    return terms;
  });
  a.target = LaurentSeries::constant(1, order) + series_exp(2, order);
  return a;
}

WeightedSumAssembly assemble_quadratic_sum_exp(int order) {
  WeightedSumAssembly a = start(CfFamily::ExpInvS, order, 1);
  const CfPattern p = CfPattern::exp_inv_s_symbolic();
  add_groups(a, 2, 0, [&](long n) {
    std::vector<WeightedTerm> terms;
    for (int c = 0; c < 3; ++c) terms.push_back({partial_quotient_symbolic(p, 3 * n + c + 1), e_abs_shape(n, c)});
    return terms;
  });
  a.target = series_exp(1, order);
  return a;
}

namespace {

LaurentSeries four_pow_over_next_factorial(int order) {
  LaurentSeries::Terms terms;
  for (int k = 0; k <= order; ++k) terms.emplace(k, ratio(power(Integer(4), k), factorial(k + 1)));
  return LaurentSeries(std::move(terms), order);
}

}  // namespace

WeightedSumAssembly assemble_phi_sum(int order) {
  WeightedSumAssembly a = start(CfFamily::TanhUV, order, 0);
  // Phi_0: (4n+1) |D_{2n}|^2 series parts, n >= 0.
  // Phi_1: (4n-1) s^2 / 4 |D_{2n-1}|^2 series parts, n >= 1; the 1/4 is the
  // square of the 1/2 in the odd prefactor.
  add_groups(a, 2, 0, [](long n) {
    std::vector<WeightedTerm> terms{{Polynomial{Rational(4 * n + 1)}, d_abs_shape(n, Parity::Even)}};
    if (n >= 1) terms.push_back({Polynomial{0, 0, make_rational(4 * n - 1, 4)}, d_abs_shape(n, Parity::Odd)});
    return terms;
  });
  a.target = four_pow_over_next_factorial(order);
  return a;
}

WeightedSumAssembly assemble_tanh_c0(int order) {
  WeightedSumAssembly a = start(CfFamily::TanhUV, order, 0);
  add_groups(a, 1, 0, [](long n) {
    return std::vector<WeightedTerm>{{Polynomial{Rational(4 * n + 1)}, d_abs_shape(n, Parity::Even)}};
  });
  a.target = series_scale(LaurentSeries::constant(1, order) + series_exp(2, order), Rational(1, 2));
  return a;
}

WeightedSumAssembly assemble_tanh_c1(int order) {
  WeightedSumAssembly a = start(CfFamily::TanhUV, order, 0);
  add_groups(a, 1, 1, [](long n) {
    return std::vector<WeightedTerm>{{Polynomial{0, make_rational(4 * n - 1, 2)}, d_abs_shape(n, Parity::Odd)}};
  });
  a.target = series_scale(series_exp(2, order) - LaurentSeries::constant(1, order), Rational(1, 2));
  return a;
}

std::vector<IdentityReport> coefficient_reports(const char* id, const WeightedSumAssembly& a,
                                                long lo, long hi) {
  if (lo < 0 || hi > a.order || lo > hi) throw std::invalid_argument("coefficient range outside the assembly");
  std::vector<IdentityReport> out;
  for (long k = lo; k <= hi; ++k) {
    const int e = static_cast<int>(k);
    out.push_back(make_report(id, k, a.assembled.coeff(e), a.target.coeff(e), a.terms));
  }
  return out;
}

namespace {

PartialSumRun partial_sums_once(const CfPattern& pattern, long N, int power,
                                const RationalInterval& alpha, const Rational& alpha_width) {
  const auto conv = convergents(pattern, N);
  const RationalInterval target = power == 1 ? alpha + RationalInterval(1) : alpha;
  PartialSumRun run{power, alpha_width, {}};
  RationalInterval partial(0);
  for (const auto& c : conv) {
    const RationalInterval e = RationalInterval(Rational(c.p)) - alpha * RationalInterval(Rational(c.q));
    const RationalInterval mag = power == 1 ? e.abs() : e.square();
    partial += RationalInterval(Rational(partial_quotient(pattern, c.n + 1))) * mag;
    RationalInterval residual = (partial - target).abs();
    const bool dominated = 2 * residual.width() > residual.hi();
    run.steps.push_back({c.n, partial, std::move(residual), dominated});
  }
  return run;
}

}  // namespace

PartialSumRun numeric_partial_sums(const CfPattern& pattern, long N, int power, const Rational& eps) {
  if (power != 1 && power != 2) throw std::invalid_argument("power must be 1 or 2");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (pattern.is_symbolic() || !pattern.has_numeric_alpha()) {
    throw PatternError("partial sums need a pattern with a numeric alpha");
  }
  Rational alpha_eps = eps;
  for (int attempt = 0; attempt < 16; ++attempt) {
    const RationalInterval alpha = enclose_alpha(pattern, alpha_eps);
    PartialSumRun run = partial_sums_once(pattern, N, power, alpha, alpha.width());
    Rational widest = 0;
    for (const auto& step : run.steps) widest = std::max(widest, step.residual.width());
    if (widest <= eps) return run;
    // Residual widths scale linearly with the alpha width.
    alpha_eps = alpha_eps * eps / (2 * widest);
  }
  throw std::runtime_error("could not bring residual enclosures below eps");
}

}  // namespace cferr
