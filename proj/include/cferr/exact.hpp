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

#ifndef CFERR_EXACT_HPP
#define CFERR_EXACT_HPP

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cferr {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator. GMP keeps
/// mpq_class canonical after every arithmetic operation; values built from a
/// raw numerator/denominator pair must go through make_rational().
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// "p/q" or "p", with a leading '-' for negative values.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p/q", "p", an optional leading '-' (ASCII or U+2212), and
/// decimal forms such as "1.25" or "1e-30". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Scientific rendering with `digits` significant digits, truncated toward
/// zero. Display only; the conversion uses integer arithmetic.
std::string to_scientific(const Rational& q, int digits = 6);

/// n! for n >= 0.
Integer factorial(long n);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// Rising factorial a (a+1) ... (a+n-1); 1 when n == 0.
Rational pochhammer(const Rational& a, long n);

/// base^exp for exp >= 0.
Integer power(const Integer& base, unsigned long exp);
Rational power(const Rational& base, unsigned long exp);

/// Floor division for possibly negative numerators; den > 0.
constexpr long floor_div(long num, long den) {
  long q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

}  // namespace cferr

#endif  // CFERR_EXACT_HPP
