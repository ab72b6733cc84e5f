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

#ifndef CFERR_ERROR_SERIES_HPP
#define CFERR_ERROR_SERIES_HPP

#include <nlohmann/json.hpp>

#include "cferr/cf.hpp"
#include "cferr/exact.hpp"
#include "cferr/interval.hpp"
#include "cferr/laurent_series.hpp"

namespace cferr {

// Closed-form factorial series for the absolute error terms |E_n| and |D_n|.
//
// Every series here has the shape
//
//   sum_{m >= 0} scale * base^m * (m + a)! / (m! (m + b)!) * t^(lowest + m)
//
// with b >= a >= 0 and base in {1, 2}, where t = 1/s and any powers of 2
// attached to s are folded into the coefficients.

/// Symbolic factor that multiplies a series but is kept out of it.
enum class Prefactor {
  None,
  HalfOneMinusTanh,   ///< (1 - tanh(1/s)) / 2, used by |D_{2n-1}|
  OneMinusTanhOverU,  ///< (1 - tanh(1/s)) / u, used by |D_{2n}|
};

/// One factorial series, described by its shape parameters.
struct FactorialSeries {
  Rational scale;
  int base;
  long a;
  long b;
  int lowest;

  /// Coefficient of t^(lowest + m).
  Rational coefficient(long m) const;
  LaurentSeries to_series(int order) const;
};

struct GradedErrorSeries {
  LaurentSeries series;
  int u_exponent = 0;
  Prefactor prefactor = Prefactor::None;

  nlohmann::ordered_json to_json() const;
};

enum class Parity { Odd, Even };

/// |E_{3n+c}| for e^{1/s}, c in {0, 1, 2}; lowest exponent n + 1.
FactorialSeries e_abs_shape(long n, int c);
/// |E_{5n+c}| for e^{2/s}, c in {0..4}; lowest exponents 3n+1, 3n+2, 3n+3,
/// 3n+3, 3n+3.
FactorialSeries e2s_abs_shape(long n, int c);
/// Series part of |D_{2n-1}| (Odd, n >= 1) or |D_{2n}| (Even, n >= 0) for
/// (s/u) tanh(1/s); lowest exponent 2n.
FactorialSeries d_abs_shape(long n, Parity parity);

/// Throws std::invalid_argument when order is below the lowest exponent.
GradedErrorSeries e_abs_error_series(long n, int c, int order);
GradedErrorSeries e2s_abs_error_series(long n, int c, int order);
/// Even parity at n = 0 is |D_0| = alpha = (s/u) tanh(1/s), which the same
/// formula reproduces; Odd parity needs n >= 1.
GradedErrorSeries d_abs_error_series(long n, Parity parity, int order);

/// Dispatches a flat convergent index: 3n+c for ExpInvS, 5n+c for
/// ExpTwoInvS, 2n-1 / 2n for TanhUV.
GradedErrorSeries flat_abs_error(CfFamily family, long flat_n, int order);
FactorialSeries flat_abs_shape(CfFamily family, long flat_n);

/// Enclosure of the full series sum at t (0 < t <= 1): the exact partial sum
/// through t^order plus a tail bound of twice the first omitted term. The
/// bound is checked, not assumed: the term ratio at the cutoff must be at
/// most 1/2 (ratios decrease in m because b >= a). Throws std::domain_error
/// when the cutoff is too early for the bound to hold.
RationalInterval enclose_series_value(const FactorialSeries& shape, const Rational& t, int order);

/// Enclosure of the prefactor for (u, v) with integral s = sqrt(uv).
RationalInterval enclose_prefactor(Prefactor prefactor, const CfPattern& pattern,
                                   const Rational& eps);

}  // namespace cferr

#endif  // CFERR_ERROR_SERIES_HPP
