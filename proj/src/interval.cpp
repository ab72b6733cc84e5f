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

#include "cferr/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace cferr {

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
}

Rational RationalInterval::magnitude() const {
  Rational a = abs_value(lo_);
  Rational b = abs_value(hi_);
  return a > b ? a : b;
}

RationalInterval RationalInterval::abs() const {
  if (lo_ >= 0) return *this;
  if (hi_ <= 0) return -*this;
  return {Rational(0), magnitude()};
}

RationalInterval RationalInterval::square() const {
  RationalInterval a = abs();
  return {a.lo_ * a.lo_, a.hi_ * a.hi_};
}

RationalInterval RationalInterval::rounded_outward(const Integer& den) const {
  if (den <= 0) throw std::invalid_argument("grid denominator must be positive");
  const Rational lo_scaled = lo_ * den;
  const Rational hi_scaled = hi_ * den;
  Integer lo_num;
  Integer hi_num;
  mpz_fdiv_q(lo_num.get_mpz_t(), lo_scaled.get_num_mpz_t(), lo_scaled.get_den_mpz_t());
  mpz_cdiv_q(hi_num.get_mpz_t(), hi_scaled.get_num_mpz_t(), hi_scaled.get_den_mpz_t());
  return {make_rational(lo_num, den), make_rational(hi_num, den)};
}

RationalInterval& RationalInterval::operator+=(const RationalInterval& rhs) {
  lo_ += rhs.lo_;
  hi_ += rhs.hi_;
  return *this;
}

RationalInterval& RationalInterval::operator-=(const RationalInterval& rhs) {
  lo_ -= rhs.hi_;
  hi_ -= rhs.lo_;
  return *this;
}

RationalInterval& RationalInterval::operator*=(const RationalInterval& rhs) {
  Rational a = lo_ * rhs.lo_;
  Rational b = lo_ * rhs.hi_;
  Rational c = hi_ * rhs.lo_;
  Rational d = hi_ * rhs.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

RationalInterval& RationalInterval::operator/=(const RationalInterval& rhs) {
  if (rhs.contains_zero()) throw std::domain_error("interval division by an interval containing 0");
  RationalInterval inv(1 / rhs.hi_, 1 / rhs.lo_);
  return *this *= inv;
}

std::string to_string(const RationalInterval& x) {
  return "[" + to_string(x.lo()) + ", " + to_string(x.hi()) + "]";
}

RationalInterval enclose_exp(const Rational& x, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("enclose_exp needs eps > 0");
  if (x == 0) return {Rational(1), Rational(1)};

  const Rational ax = abs_value(x);
  // Grid 2^-g with 2^-g <= eps/4; outward rounding then adds at most eps/2.
  unsigned long g = 2;
  while (Rational(1) / Rational(power(Integer(2), g)) > eps / 4) ++g;
  const Integer grid = power(Integer(2), g);

  Rational sum = 1;
  Rational term = 1;  // x^m / m!
  for (long m = 0;; ++m) {
    if (m > 0) {
      term = term * x / m;
      sum += term;
    }
    // Tail after terms 0..m: first omitted term x^{m+1}/(m+1)!, later ratios
    // bounded by |x|/(m+2).
    if (Rational(m + 2) <= 2 * ax) continue;
    Rational first_omitted = abs_value(term) * ax / (m + 1);
    Rational tail = first_omitted / (1 - ax / (m + 2));
    RationalInterval enclosure = x > 0 ? RationalInterval(sum, sum + tail)
                                       : RationalInterval(sum - tail, sum + tail);
    if (enclosure.width() <= eps / 2) return enclosure.rounded_outward(grid);
  }
}

RationalInterval enclose_tanh_inv_s(const Integer& s, const Rational& eps) {
  if (s < 1) throw std::invalid_argument("enclose_tanh_inv_s needs s >= 1");
  if (eps <= 0) throw std::invalid_argument("enclose_tanh_inv_s needs eps > 0");
  const Rational x = make_rational(2, s);
  Rational inner = eps;
  for (;;) {
    RationalInterval e = enclose_exp(x, inner);
    RationalInterval t = RationalInterval(1) - RationalInterval(2) / (e + RationalInterval(1));
    if (t.width() <= eps) return t;
    inner /= 2;
  }
}

}  // namespace cferr
