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

#ifndef CFERR_POLYNOMIAL_HPP
#define CFERR_POLYNOMIAL_HPP

#include <initializer_list>
#include <vector>

#include <nlohmann/json.hpp>

#include "cferr/exact.hpp"
#include "cferr/laurent_series.hpp"

namespace cferr {

/// Dense polynomial in s with rational coefficients, lowest degree first.
/// Trailing zeros are stripped; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational c);  // NOLINT: constants convert implicitly
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(int d) const;

  Rational evaluate(const Rational& s) const;

  /// The same polynomial as an exact Laurent series in t = 1/s: the
  /// coefficient of s^d lands at exponent -d.
  LaurentSeries to_laurent() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// {"deg_coeffs":["c0","c1",...]}
  nlohmann::ordered_json to_json() const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

}  // namespace cferr

#endif  // CFERR_POLYNOMIAL_HPP
