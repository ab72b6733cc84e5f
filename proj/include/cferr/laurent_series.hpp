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

#ifndef CFERR_LAURENT_SERIES_HPP
#define CFERR_LAURENT_SERIES_HPP

#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "cferr/exact.hpp"

namespace cferr {

/// Raised when a coefficient beyond the truncation order is read.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Truncated Laurent series in t = 1/s.
///
/// Only finitely many negative exponents are allowed (a polynomial part in s).
/// Coefficients with exponent above truncation() are unknown, and reading one
/// throws TruncationError. A series whose truncation() is kExact is a Laurent
/// polynomial known to all orders. Zero coefficients are never stored, so the
/// zero series is the empty map.
class LaurentSeries {
 public:
  static constexpr int kExact = std::numeric_limits<int>::max();
  using Terms = std::map<int, Rational>;

  /// Exact zero.
  LaurentSeries() = default;

  /// Zero known through `truncation`, i.e. O(t^(truncation+1)).
  explicit LaurentSeries(int truncation) : truncation_(truncation) {}

  /// Drops zero coefficients; throws std::invalid_argument if a nonzero
  /// coefficient sits above the truncation order.
  LaurentSeries(Terms terms, int truncation);

  static LaurentSeries constant(const Rational& c, int truncation = kExact);
  static LaurentSeries monomial(const Rational& c, int exponent, int truncation = kExact);

  int truncation() const { return truncation_; }
  bool is_exact() const { return truncation_ == kExact; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Lowest exponent whose coefficient may be nonzero: the lowest stored
  /// exponent, or truncation() + 1 for a zero series (kExact if exact).
  int valuation() const;

  /// Coefficient of t^e. Throws TruncationError when e > truncation().
  Rational coeff(int e) const;

  /// Same series with its truncation lowered to min(truncation(), order).
  LaurentSeries truncated(int order) const;

  /// Multiplies by the sign of the lowest coefficient. Throws
  /// std::domain_error for a zero series (the sign is not determined).
  LaurentSeries abs() const;

  /// Sign of the lowest coefficient; 0 for a zero series.
  int leading_sign() const;

  LaurentSeries& operator+=(const LaurentSeries& rhs);
  LaurentSeries& operator-=(const LaurentSeries& rhs);
  LaurentSeries& operator*=(const LaurentSeries& rhs);
  LaurentSeries& operator*=(const Rational& c);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(LaurentSeries a, const Rational& c) { return a *= c; }
  friend LaurentSeries operator*(const Rational& c, LaurentSeries a) { return a *= c; }
  LaurentSeries operator-() const;

  /// Same truncation order and same coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

  nlohmann::ordered_json to_json() const;
  static LaurentSeries from_json(const nlohmann::json& j);

 private:
  Terms terms_;
  int truncation_ = kExact;
};

/// True when a and b have identical coefficients for every exponent <= order.
/// Throws TruncationError if either series is not known through `order`.
bool agree_through(const LaurentSeries& a, const LaurentSeries& b, int order);

/// e^{c t} = sum_k c^k t^k / k!, known through t^order.
LaurentSeries series_exp(const Rational& c, int order);

enum class SeriesOp { Add, Sub, Mul };

/// Dispatching form of the arithmetic operators.
LaurentSeries series_arith(const LaurentSeries& a, const LaurentSeries& b, SeriesOp op);

/// Scalar multiple of a.
LaurentSeries series_scale(const LaurentSeries& a, const Rational& c);

std::string to_string(const LaurentSeries& s);

}  // namespace cferr

#endif  // CFERR_LAURENT_SERIES_HPP
