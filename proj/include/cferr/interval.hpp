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

#ifndef CFERR_INTERVAL_HPP
#define CFERR_INTERVAL_HPP

#include <string>

#include "cferr/exact.hpp"

namespace cferr {

/// Closed interval [lo, hi] with rational endpoints. Every operation returns
/// an interval containing all results of the operation applied to members of
/// the operands; endpoints are exact, so nothing is ever rounded inward.
class RationalInterval {
 public:
  RationalInterval() = default;
  RationalInterval(Rational point) : lo_(point), hi_(std::move(point)) {}  // NOLINT
  /// Throws std::invalid_argument when lo > hi.
  RationalInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  /// max(|lo|, |hi|).
  Rational magnitude() const;

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RationalInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool contains_zero() const { return contains(Rational(0)); }
  bool intersects(const RationalInterval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }

  /// {|x| : x in this}.
  RationalInterval abs() const;
  /// {x^2 : x in this}.
  RationalInterval square() const;

  /// Widens both endpoints outward onto the grid (1/den) Z.
  RationalInterval rounded_outward(const Integer& den) const;

  RationalInterval& operator+=(const RationalInterval& rhs);
  RationalInterval& operator-=(const RationalInterval& rhs);
  RationalInterval& operator*=(const RationalInterval& rhs);
  /// Throws std::domain_error when rhs contains zero.
  RationalInterval& operator/=(const RationalInterval& rhs);

  friend RationalInterval operator+(RationalInterval a, const RationalInterval& b) { return a += b; }
  friend RationalInterval operator-(RationalInterval a, const RationalInterval& b) { return a -= b; }
  friend RationalInterval operator*(RationalInterval a, const RationalInterval& b) { return a *= b; }
  friend RationalInterval operator/(RationalInterval a, const RationalInterval& b) { return a /= b; }
  RationalInterval operator-() const { return {-hi_, -lo_}; }

  friend bool operator==(const RationalInterval& a, const RationalInterval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_;
  Rational hi_;
};

std::string to_string(const RationalInterval& x);

/// Enclosure of e^x of width at most eps.
///
/// Sums the Taylor terms x^k/k! for k = 0..m and bounds the rest by the first
/// omitted term times 1/(1 - |x|/(m+2)), stopping at the smallest m with
/// m + 2 > 2|x| whose tail bound meets eps. Endpoints are then moved outward
/// onto a dyadic grid finer than eps/4 to keep their size bounded. Intended
/// for moderate |x| (the callers use |x| <= 2). Throws std::invalid_argument
/// when eps <= 0.
RationalInterval enclose_exp(const Rational& x, const Rational& eps);

/// Enclosure of tanh(1/s) of width at most eps, computed as 1 - 2/(E + 1)
/// with E an enclosure of e^{2/s}. Requires s >= 1 and eps > 0.
RationalInterval enclose_tanh_inv_s(const Integer& s, const Rational& eps);

}  // namespace cferr

#endif  // CFERR_INTERVAL_HPP
