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

#include "cferr/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace cferr {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_digits(std::string_view s) {
  return Integer(std::string(s), 10);
}

// [digits][.digits][e[+-]digits], sign already stripped.
Rational parse_decimal(std::string_view s) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string_view exp_text = s.substr(e + 1);
    bool neg = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      neg = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) {
      throw std::invalid_argument("bad exponent in '" + std::string(s) + "'");
    }
    exponent = std::stol(std::string(exp_text));
    if (neg) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view whole = mantissa.substr(0, dot);
    std::string_view frac = mantissa.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw std::invalid_argument("bad decimal '" + std::string(s) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(mantissa)) throw std::invalid_argument("bad number '" + std::string(s) + "'");
    digits = std::string(mantissa);
  }
  Rational q(parse_digits(digits));
  Integer scale = power(Integer(10), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent < 0) {
    q /= scale;
  } else {
    q *= scale;
  }
  return q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  } else if (s.starts_with("−")) {
    negative = true;
    s.remove_prefix(std::string_view("−").size());
  }
  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    }
    Integer d = parse_digits(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q = make_rational(parse_digits(num), d);
  } else {
    q = parse_decimal(s);
  }
  return negative ? Rational(-q) : q;
}

std::string to_scientific(const Rational& q, int digits) {
  if (digits < 1) digits = 1;
  if (q == 0) return "0";
  Rational a = abs_value(q);
  // Find e with 10^e <= a < 10^(e+1).
  Integer num = a.get_num();
  Integer den = a.get_den();
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  auto ge_pow10 = [&](long k) {
    // a >= 10^k
    if (k >= 0) return num >= den * power(Integer(10), static_cast<unsigned long>(k));
    return num * power(Integer(10), static_cast<unsigned long>(-k)) >= den;
  };
  while (!ge_pow10(e)) --e;
  while (ge_pow10(e + 1)) ++e;
  long shift = digits - 1 - e;
  Integer scaled;
  if (shift >= 0) {
    scaled = (num * power(Integer(10), static_cast<unsigned long>(shift))) / den;
  } else {
    scaled = num / (den * power(Integer(10), static_cast<unsigned long>(-shift)));
  }
  std::string d = scaled.get_str(10);
  std::string out = q < 0 ? "-" : "";
  out += d.substr(0, 1);
  if (d.size() > 1) out += "." + d.substr(1);
  out += "e" + std::string(e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
  return out;
}

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial with negative n");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational pochhammer(const Rational& a, long n) {
  if (n < 0) throw std::domain_error("pochhammer with negative length");
  Rational r = 1;
  for (long i = 0; i < n; ++i) {
    r *= a + i;
    if (r == 0) break;
  }
  return r;
}

Integer power(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rational power(const Rational& base, unsigned long exp) {
  return make_rational(power(Integer(base.get_num()), exp), power(Integer(base.get_den()), exp));
}

}  // namespace cferr
