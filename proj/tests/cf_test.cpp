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

#include <gtest/gtest.h>

#include "cferr/cf.hpp"
#include "cferr/error_series.hpp"

namespace cferr {
namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

std::vector<CfPattern> numeric_patterns() {
  return {CfPattern::exp_inv_s(2),       CfPattern::exp_inv_s(3),      CfPattern::exp_inv_s(10),
          CfPattern::exp_two_inv_s(3),   CfPattern::exp_two_inv_s(7),  CfPattern::tanh_uv(1, 4),
          CfPattern::tanh_uv(2, 3),      CfPattern::tanh_uv(3, 12)};
}

TEST(CfPattern, Validation) {
  EXPECT_THROW(CfPattern::exp_inv_s(1), PatternError);
  EXPECT_THROW(CfPattern::exp_two_inv_s(4), PatternError);
  EXPECT_THROW(CfPattern::exp_two_inv_s(1), PatternError);
  EXPECT_THROW(CfPattern::tanh_uv(0, 4), PatternError);
  EXPECT_TRUE(CfPattern::tanh_uv(1, 4).has_numeric_alpha());
  EXPECT_EQ(CfPattern::tanh_uv(1, 4).s(), 2);
  EXPECT_FALSE(CfPattern::tanh_uv(2, 3).has_numeric_alpha());
  EXPECT_THROW(CfPattern::tanh_uv(2, 3).s(), PatternError);
}

TEST(PartialQuotient, Examples) {
  EXPECT_EQ(partial_quotient(CfPattern::exp_inv_s(2), 0), 1);
  EXPECT_EQ(partial_quotient(CfPattern::exp_inv_s(2), 1), 1);
  EXPECT_EQ(partial_quotient(CfPattern::exp_inv_s(2), 4), 5);  // 3s - 1
  EXPECT_EQ(partial_quotient(CfPattern::tanh_uv(1, 4), 0), 0);
  EXPECT_EQ(partial_quotient(CfPattern::tanh_uv(1, 4), 1), 1);
  EXPECT_EQ(partial_quotient(CfPattern::tanh_uv(1, 4), 2), 12);
  EXPECT_EQ(partial_quotient(CfPattern::exp_two_inv_s(3), 1), 1);
  EXPECT_EQ(partial_quotient(CfPattern::exp_two_inv_s(3), 2), 18);
  EXPECT_EQ(partial_quotient(CfPattern::exp_two_inv_s(3), 3), 7);
  EXPECT_EQ(partial_quotient(CfPattern::exp_two_inv_s(3), 4), 1);
  EXPECT_EQ(partial_quotient(CfPattern::exp_two_inv_s(3), 6), 10);  // (7s-1)/2
}

TEST(PartialQuotient, SymbolicMatchesNumeric) {
  for (long n = 0; n < 40; ++n) {
    EXPECT_EQ(partial_quotient_symbolic(CfPattern::exp_inv_s_symbolic(), n).evaluate(5),
              Rational(partial_quotient(CfPattern::exp_inv_s(5), n)));
    EXPECT_EQ(partial_quotient_symbolic(CfPattern::exp_two_inv_s_symbolic(), n).evaluate(5),
              Rational(partial_quotient(CfPattern::exp_two_inv_s(5), n)));
  }
}

TEST(Convergents, Seeds) {
  const auto c = convergents(CfPattern::exp_inv_s(2), 1);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0].n, -1);
  EXPECT_EQ(c[0].p, 1);
  EXPECT_EQ(c[0].q, 0);
  EXPECT_EQ(c[1].p, 1);
  EXPECT_EQ(c[1].q, 1);
  EXPECT_EQ(c[2].p, 2);
  EXPECT_EQ(c[2].q, 1);

  const auto s = symbolic_convergents(CfPattern::exp_inv_s_symbolic(), 0);
  EXPECT_EQ(s[1].p, Polynomial{1});
  EXPECT_EQ(s[1].q, Polynomial{1});
}

TEST(Convergents, DeterminantIdentity) {
  for (const auto& pattern : numeric_patterns()) {
    const auto c = convergents(pattern, 30);
    for (std::size_t i = 1; i < c.size(); ++i) {
      const long n = c[i].n;
      const Integer det = c[i].p * c[i - 1].q - c[i - 1].p * c[i].q;
      EXPECT_EQ(det, n % 2 == 0 ? -1 : 1) << pattern.describe() << " n=" << n;
    }
  }
}

TEST(Convergents, SymbolicEvaluatesToNumeric) {
  const auto sym = symbolic_convergents(CfPattern::exp_two_inv_s_symbolic(), 12);
  const auto num = convergents(CfPattern::exp_two_inv_s(9), 12);
  for (std::size_t i = 0; i < sym.size(); ++i) {
    EXPECT_EQ(sym[i].p.evaluate(9), Rational(num[i].p));
    EXPECT_EQ(sym[i].q.evaluate(9), Rational(num[i].q));
  }
}

TEST(AlphaSeries, Examples) {
  EXPECT_EQ(alpha_series(CfPattern::exp_inv_s_symbolic(), 3),
            LaurentSeries({{0, 1}, {1, 1}, {2, q(1, 2)}, {3, q(1, 6)}}, 3));
  EXPECT_EQ(alpha_series(CfPattern::exp_two_inv_s_symbolic(), 2), LaurentSeries({{0, 1}, {1, 2}, {2, 2}}, 2));
  EXPECT_EQ(alpha_series(CfPattern::exp_inv_s_symbolic(), 0), LaurentSeries::constant(1, 0));
  EXPECT_THROW(alpha_series(CfPattern::tanh_uv(1, 4), 3), PatternError);
}

TEST(ErrorTerm, MinusOneIsExactlyOne) {
  const ErrorTerm s = error_term(CfPattern::exp_inv_s_symbolic(), -1, SymbolicMode{5});
  EXPECT_EQ(s.series().coeff(0), 1);
  EXPECT_EQ(s.series().coeff(3), 0);
  const ErrorTerm n = error_term(CfPattern::tanh_uv(1, 4), -1, NumericMode{q(1, 1000)});
  EXPECT_EQ(n.interval(), RationalInterval(1));
  EXPECT_EQ(n.sign, 1);
}

TEST(ErrorTerm, ZeroIsOneMinusAlpha) {
  const ErrorTerm e = error_term(CfPattern::exp_inv_s_symbolic(), 0, SymbolicMode{4});
  EXPECT_EQ(e.series(), LaurentSeries({{1, -1}, {2, q(-1, 2)}, {3, q(-1, 6)}, {4, q(-1, 24)}}, 4));
  EXPECT_EQ(e.series().abs(), e_abs_error_series(0, 0, 4).series);
  EXPECT_EQ(e.sign, -1);
}

TEST(ErrorTerm, SymbolicRejectsTanh) {
  EXPECT_THROW(error_term(CfPattern::tanh_uv(1, 4), 2, SymbolicMode{5}), PatternError);
}

// Central oracle: convergent route against the closed-form series.
TEST(ErrorTerm, DualRouteExp) {
  const int order = 20;
  const auto terms = error_terms(CfPattern::exp_inv_s_symbolic(), 26, SymbolicMode{order});
  for (const auto& e : terms) {
    if (e.n < 0) continue;
    const GradedErrorSeries g = flat_abs_error(CfFamily::ExpInvS, e.n, order);
    EXPECT_EQ(e.series().abs(), g.series) << "n=" << e.n;
    EXPECT_EQ(e.series().valuation(), e.n / 3 + 1) << "n=" << e.n;
    EXPECT_EQ(e.series().leading_sign(), expected_error_sign(e.n)) << "n=" << e.n;
    EXPECT_EQ(e.sign, expected_error_sign(e.n));
  }
}

TEST(ErrorTerm, DualRouteExpTwo) {
  const int order = 20;
  const auto terms = error_terms(CfPattern::exp_two_inv_s_symbolic(), 29, SymbolicMode{order});
  const int lowest[5] = {1, 2, 3, 3, 3};
  for (const auto& e : terms) {
    if (e.n < 0) continue;
    const long group = e.n / 5;
    const int c = static_cast<int>(e.n % 5);
    const GradedErrorSeries g = e2s_abs_error_series(group, c, order);
    EXPECT_EQ(e.series().abs(), g.series) << "n=" << e.n;
    EXPECT_EQ(e.series().valuation(), 3 * group + lowest[c]) << "n=" << e.n;
    EXPECT_EQ(e.series().leading_sign(), expected_error_sign(e.n)) << "n=" << e.n;
  }
}

TEST(ErrorTerm, NumericMonotone) {
  for (const auto& pattern : numeric_patterns()) {
    if (!pattern.has_numeric_alpha()) continue;
    // |E_20| is near 1e-80 for the fastest patterns here.
    const Rational eps = make_rational(1, power(Integer(10), 400UL));
    const auto terms = error_terms(pattern, 20, NumericMode{eps});
    const auto conv = convergents(pattern, 20);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto& x = terms[i].interval();
      EXPECT_LE(x.width(), eps * (1 + abs_value(Rational(conv[i].q)))) << pattern.describe();
      EXPECT_FALSE(x.contains_zero());
      EXPECT_EQ(x.lo() > 0 ? 1 : -1, expected_error_sign(terms[i].n)) << pattern.describe();
    }
    for (std::size_t i = 3; i < terms.size(); ++i) {  // from n = 1
      EXPECT_LT(terms[i].interval().abs().hi(), terms[i - 1].interval().abs().lo())
          << pattern.describe() << " n=" << terms[i].n;
      EXPECT_GT(conv[i].q, conv[i - 1].q);
    }
  }
}

TEST(ErrorTerm, TanhEvenZeroIsMinusAlpha) {
  const CfPattern p = CfPattern::tanh_uv(1, 4);
  const Rational eps = Rational("1/1000000000000000000000000000000");
  const ErrorTerm d0 = error_term(p, 0, NumericMode{eps});
  const RationalInterval alpha = enclose_alpha(p, eps);
  EXPECT_TRUE(d0.interval().intersects(-alpha));
  // The even-parity series at n = 0 reproduces |D_0| = alpha.
  const RationalInterval series = enclose_prefactor(Prefactor::OneMinusTanhOverU, p, eps * eps) *
                                  enclose_series_value(d_abs_shape(0, Parity::Even), q(1, 2), 40);
  EXPECT_TRUE(series.intersects(d0.interval().abs()));
  EXPECT_LT(series.width(), eps);
}

TEST(ErrorTerm, TanhSeriesInsideConvergentEnclosure) {
  const CfPattern p = CfPattern::tanh_uv(1, 4);
  const Rational eps = Rational("1/1000000000000000000000000000000");
  const Rational tight = eps * eps * eps;
  const auto terms = error_terms(p, 6, NumericMode{eps});
  for (long flat = 0; flat <= 6; ++flat) {
    const GradedErrorSeries g = flat_abs_error(CfFamily::TanhUV, flat, 60);
    const RationalInterval series = enclose_prefactor(g.prefactor, p, tight) *
                                    enclose_series_value(flat_abs_shape(CfFamily::TanhUV, flat), q(1, 2), 60);
    EXPECT_TRUE(terms[static_cast<std::size_t>(flat + 1)].interval().abs().contains(series)) << "flat=" << flat;
  }
}

}  // namespace
}  // namespace cferr
