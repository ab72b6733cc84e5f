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

#include "cferr/error_series.hpp"

namespace cferr {
namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

// Direct substitution into (m+a)!/(m!(m+b)!) with the 2-power written out.
Rational direct(long m, long a, long b, long two_power) {
  return make_rational(factorial(m + a) * power(Integer(2), static_cast<unsigned long>(two_power)),
                       factorial(m) * factorial(m + b));
}

TEST(ExpSeries, Examples) {
  EXPECT_EQ(e_abs_error_series(0, 0, 4).series,
            LaurentSeries({{1, 1}, {2, q(1, 2)}, {3, q(1, 6)}, {4, q(1, 24)}}, 4));
  EXPECT_EQ(e_abs_error_series(1, 0, 2).series.coeff(2), q(1, 6));
  EXPECT_EQ(e_abs_error_series(0, 2, 2).series.coeff(1), q(1, 2));
  EXPECT_THROW(e_abs_error_series(3, 0, 3), std::invalid_argument);
  EXPECT_THROW(e_abs_error_series(0, 3, 3), std::invalid_argument);
  const auto g = e_abs_error_series(2, 1, 8);
  EXPECT_EQ(g.u_exponent, 0);
  EXPECT_EQ(g.prefactor, Prefactor::None);
}

TEST(ExpTwoSeries, Examples) {
  EXPECT_EQ(e2s_abs_error_series(0, 0, 2).series, LaurentSeries({{1, 2}, {2, 2}}, 2));
  EXPECT_EQ(e2s_abs_error_series(0, 1, 2).series.coeff(2), q(1, 3));
  // The convergent route gives 1/15 here; the 1/(3n+3) factor of the
  // printed formula does not belong to this series.
  EXPECT_EQ(e2s_abs_error_series(0, 3, 3).series.coeff(3), q(1, 15));
  EXPECT_THROW(e2s_abs_error_series(1, 2, 5), std::invalid_argument);
}

TEST(ExpTwoSeries, DirectSubstitution) {
  for (long n = 0; n <= 3; ++n) {
    const int order = static_cast<int>(3 * n + 12);
    for (long m = 0; m <= 8; ++m) {
      const int e0 = static_cast<int>(m + 3 * n + 1);
      EXPECT_EQ(e2s_abs_error_series(n, 0, order).series.coeff(e0), direct(m, 3 * n, 6 * n + 1, m + 3 * n + 1));
      EXPECT_EQ(e2s_abs_error_series(n, 1, order).series.coeff(e0 + 1),
                direct(m, 3 * n + 1, 6 * n + 3, m + 3 * n + 1));
      EXPECT_EQ(e2s_abs_error_series(n, 2, order).series.coeff(e0 + 2),
                direct(m, 3 * n + 2, 6 * n + 5, m + 3 * n + 3));
      EXPECT_EQ(e2s_abs_error_series(n, 3, order).series.coeff(e0 + 2),
                direct(m, 3 * n + 3, 6 * n + 6, m + 3 * n + 3));
      EXPECT_EQ(e2s_abs_error_series(n, 4, order).series.coeff(e0 + 2),
                (3 * n + 3) * direct(m, 3 * n + 2, 6 * n + 6, m + 3 * n + 3));
    }
  }
}

TEST(TanhSeries, Examples) {
  const auto odd = d_abs_error_series(1, Parity::Odd, 2);
  EXPECT_EQ(odd.series.coeff(2), q(2, 3));
  EXPECT_EQ(odd.prefactor, Prefactor::HalfOneMinusTanh);
  EXPECT_EQ(odd.u_exponent, 0);
  const auto even = d_abs_error_series(1, Parity::Even, 2);
  EXPECT_EQ(even.series.coeff(2), q(1, 15));
  EXPECT_EQ(even.prefactor, Prefactor::OneMinusTanhOverU);
  EXPECT_EQ(even.u_exponent, -1);
  EXPECT_THROW(d_abs_error_series(0, Parity::Odd, 2), std::invalid_argument);
  // n = 0, even: |D_0| = alpha = (s/u) tanh(1/s), whose series part is
  // s tanh(1/s) / (1 - tanh(1/s)) = 1 + t + 2t^2/3 + ...
  const auto d0 = d_abs_error_series(0, Parity::Even, 2);
  EXPECT_EQ(d0.series, LaurentSeries({{0, 1}, {1, 1}, {2, q(2, 3)}}, 2));
}

TEST(AllSeries, PositiveCoefficientsAndLowestExponent) {
  for (long n = 0; n <= 4; ++n) {
    for (int c = 0; c < 3; ++c) {
      const auto s = e_abs_error_series(n, c, 15).series;
      EXPECT_EQ(s.valuation(), n + 1);
      for (const auto& [e, v] : s.terms()) EXPECT_GT(v, 0);
    }
    for (int c = 0; c < 5; ++c) {
      const auto s = e2s_abs_error_series(n, c, 20).series;
      for (const auto& [e, v] : s.terms()) EXPECT_GT(v, 0);
    }
    for (Parity p : {Parity::Odd, Parity::Even}) {
      if (p == Parity::Odd && n == 0) continue;
      const auto s = d_abs_error_series(n, p, 15).series;
      EXPECT_EQ(s.valuation(), 2 * n);
      for (const auto& [e, v] : s.terms()) EXPECT_GT(v, 0);
    }
  }
}

TEST(FlatIndex, Dispatch) {
  EXPECT_EQ(flat_abs_error(CfFamily::ExpInvS, 7, 10).series, e_abs_error_series(2, 1, 10).series);
  EXPECT_EQ(flat_abs_error(CfFamily::ExpTwoInvS, 13, 12).series, e2s_abs_error_series(2, 3, 12).series);
  EXPECT_EQ(flat_abs_error(CfFamily::TanhUV, 5, 10).series, d_abs_error_series(3, Parity::Odd, 10).series);
  EXPECT_EQ(flat_abs_error(CfFamily::TanhUV, 4, 10).series, d_abs_error_series(2, Parity::Even, 10).series);
}

TEST(SeriesValue, TailBoundIsCheckedAndValid) {
  // 2t + 2t^2 + ...: ratio 2/3 at t = 1 when cutting after t^1.
  EXPECT_THROW(enclose_series_value(e2s_abs_shape(0, 0), 1, 1), std::domain_error);
  EXPECT_NO_THROW(enclose_series_value(e2s_abs_shape(0, 0), 1, 4));
  const FactorialSeries shape = e_abs_shape(0, 0);  // e^{t} - 1
  const RationalInterval x = enclose_series_value(shape, q(1, 2), 30);
  // e^{1/2} - 1 lies inside; compare against a longer partial sum.
  const RationalInterval longer = enclose_series_value(shape, q(1, 2), 60);
  EXPECT_TRUE(x.contains(longer));
  EXPECT_GT(x.width(), 0);
}

TEST(GradedJson, CarriesGrading) {
  const auto j = d_abs_error_series(1, Parity::Even, 3).to_json();
  EXPECT_EQ(j["u_exp"], -1);
  EXPECT_EQ(j["prefactor"], "(1-tanh(1/s))/u");
  EXPECT_EQ(j["trunc"], 3);
  EXPECT_EQ(j["coeffs"]["2"], "1/15");
}

}  // namespace
}  // namespace cferr
