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

#include "cferr/error_series.hpp"

#include <stdexcept>
#include <string>

namespace cferr {

Rational FactorialSeries::coefficient(long m) const {
  if (m < 0) return 0;
  Integer num = factorial(m + a) * power(Integer(base), static_cast<unsigned long>(m));
  Integer den = factorial(m) * factorial(m + b);
  return scale * make_rational(num, den);
}

LaurentSeries FactorialSeries::to_series(int order) const {
  if (order < lowest) {
    throw std::invalid_argument("order " + std::to_string(order) +
                                " is below the lowest exponent " + std::to_string(lowest));
  }
  LaurentSeries::Terms terms;
  // Successive coefficients differ by base (m + a + 1) / ((m + 1)(m + b + 1)).
  Rational c = coefficient(0);
  for (long m = 0; lowest + m <= order; ++m) {
    if (m > 0) c = c * base * (m + a) / (m * (m + b));
    terms.emplace(static_cast<int>(lowest + m), c);
  }
  return LaurentSeries(std::move(terms), order);
}

nlohmann::ordered_json GradedErrorSeries::to_json() const {
  nlohmann::ordered_json j = series.to_json();
  j["u_exp"] = u_exponent;
  switch (prefactor) {
    case Prefactor::None:
      j["prefactor"] = "none";
      break;
    case Prefactor::HalfOneMinusTanh:
      j["prefactor"] = "(1-tanh(1/s))/2";
      break;
    case Prefactor::OneMinusTanhOverU:
      j["prefactor"] = "(1-tanh(1/s))/u";
      break;
  }
  return j;
}

FactorialSeries e_abs_shape(long n, int c) {
  if (n < 0) throw std::invalid_argument("group index must be >= 0");
  const int lowest = static_cast<int>(n + 1);
  switch (c) {
    case 0:  // (n+m)! / (m! (2n+m+1)!)
      return {Rational(1), 1, n, 2 * n + 1, lowest};
    case 1:  // (n+1+m)! / (m! (2n+m+2)!)
      return {Rational(1), 1, n + 1, 2 * n + 2, lowest};
    case 2:  // (n+1) (n+m)! / (m! (2n+m+2)!)
      return {Rational(n + 1), 1, n, 2 * n + 2, lowest};
    default:
      throw std::invalid_argument("e^{1/s} case must be 0, 1 or 2");
  }
}

FactorialSeries e2s_abs_shape(long n, int c) {
  if (n < 0) throw std::invalid_argument("group index must be >= 0");
  const auto pow2 = [](long k) { return Rational(power(Integer(2), static_cast<unsigned long>(k))); };
  const int base_exp = static_cast<int>(3 * n);
  switch (c) {
    case 0:  // (m+3n)! / (m! (m+6n+1)!) (2/s)^{m+3n+1}
      return {pow2(3 * n + 1), 2, 3 * n, 6 * n + 1, base_exp + 1};
    case 1:  // (m+3n+1)! / (m! (m+6n+3)!) 2^{m+3n+1} / s^{m+3n+2}
      return {pow2(3 * n + 1), 2, 3 * n + 1, 6 * n + 3, base_exp + 2};
    case 2:  // (m+3n+2)! / (m! (m+6n+5)!) (2/s)^{m+3n+3}
      return {pow2(3 * n + 3), 2, 3 * n + 2, 6 * n + 5, base_exp + 3};
    case 3:  // (m+3n+3)! / (m! (m+6n+6)!) (2/s)^{m+3n+3}
      return {pow2(3 * n + 3), 2, 3 * n + 3, 6 * n + 6, base_exp + 3};
    case 4:  // (3n+3) (m+3n+2)! / (m! (m+6n+6)!) (2/s)^{m+3n+3}
      return {pow2(3 * n + 3) * (3 * n + 3), 2, 3 * n + 2, 6 * n + 6, base_exp + 3};
    default:
      throw std::invalid_argument("e^{2/s} case must be in 0..4");
  }
}

FactorialSeries d_abs_shape(long n, Parity parity) {
  const Rational four_n = Rational(power(Integer(4), static_cast<unsigned long>(n < 0 ? 0 : n)));
  if (parity == Parity::Odd) {
    if (n < 1) throw std::invalid_argument("|D_{2n-1}| needs n >= 1");
    // 4^n 2^m (2n-1+m)! / (m! (4n+m-1)!) t^{2n+m}
    return {four_n, 2, 2 * n - 1, 4 * n - 1, static_cast<int>(2 * n)};
  }
  if (n < 0) throw std::invalid_argument("|D_{2n}| needs n >= 0");
  // 4^n 2^m (2n+m)! / (m! (4n+m+1)!) t^{2n+m}
  return {four_n, 2, 2 * n, 4 * n + 1, static_cast<int>(2 * n)};
}

GradedErrorSeries e_abs_error_series(long n, int c, int order) {
  return {e_abs_shape(n, c).to_series(order), 0, Prefactor::None};
}

GradedErrorSeries e2s_abs_error_series(long n, int c, int order) {
  return {e2s_abs_shape(n, c).to_series(order), 0, Prefactor::None};
}

GradedErrorSeries d_abs_error_series(long n, Parity parity, int order) {
  FactorialSeries shape = d_abs_shape(n, parity);
  if (parity == Parity::Odd) return {shape.to_series(order), 0, Prefactor::HalfOneMinusTanh};
  return {shape.to_series(order), -1, Prefactor::OneMinusTanhOverU};
}

FactorialSeries flat_abs_shape(CfFamily family, long flat_n) {
  if (flat_n < 0) throw std::invalid_argument("flat index must be >= 0");
  switch (family) {
    case CfFamily::ExpInvS:
      return e_abs_shape(flat_n / 3, static_cast<int>(flat_n % 3));
    case CfFamily::ExpTwoInvS:
      return e2s_abs_shape(flat_n / 5, static_cast<int>(flat_n % 5));
    case CfFamily::TanhUV:
      if (flat_n % 2 == 1) return d_abs_shape((flat_n + 1) / 2, Parity::Odd);
      return d_abs_shape(flat_n / 2, Parity::Even);
  }
  throw std::invalid_argument("unknown family");
}

GradedErrorSeries flat_abs_error(CfFamily family, long flat_n, int order) {
  if (family == CfFamily::TanhUV) {
    if (flat_n % 2 == 1) return d_abs_error_series((flat_n + 1) / 2, Parity::Odd, order);
    return d_abs_error_series(flat_n / 2, Parity::Even, order);
  }
  return {flat_abs_shape(family, flat_n).to_series(order), 0, Prefactor::None};
}

RationalInterval enclose_series_value(const FactorialSeries& shape, const Rational& t, int order) {
  if (t <= 0 || t > 1) throw std::invalid_argument("series evaluation needs 0 < t <= 1");
  if (order < shape.lowest) throw std::invalid_argument("order below the lowest exponent");
  const long cutoff = order - shape.lowest + 1;  // first omitted m
  // Ratio of consecutive terms at the cutoff; it only shrinks for larger m.
  Rational ratio = t * shape.base * (cutoff + shape.a + 1) / ((cutoff + 1) * (cutoff + shape.b + 1));
  if (ratio > Rational(1, 2)) {
    throw std::domain_error("tail bound invalid: term ratio " + to_string(ratio) +
                            " exceeds 1/2 at the cutoff");
  }
  Rational sum = 0;
  Rational t_pow = power(t, static_cast<unsigned long>(shape.lowest));
  LaurentSeries s = shape.to_series(order);
  for (long m = 0; m < cutoff; ++m) {
    sum += s.coeff(static_cast<int>(shape.lowest + m)) * t_pow;
    t_pow *= t;
  }
  Rational first_omitted = shape.coefficient(cutoff) * t_pow;
  return {sum, sum + 2 * first_omitted};
}

RationalInterval enclose_prefactor(Prefactor prefactor, const CfPattern& pattern,
                                   const Rational& eps) {
  if (prefactor == Prefactor::None) return RationalInterval(1);
  if (pattern.family() != CfFamily::TanhUV) {
    throw PatternError("tanh prefactors belong to the tanh-uv family");
  }
  RationalInterval one_minus = RationalInterval(1) - enclose_tanh_inv_s(pattern.s(), eps);
  if (prefactor == Prefactor::HalfOneMinusTanh) return one_minus * RationalInterval(Rational(1, 2));
  return one_minus * RationalInterval(make_rational(1, pattern.u()));
}

}  // namespace cferr
