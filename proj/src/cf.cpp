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

#include "cferr/cf.hpp"

#include <algorithm>

namespace cferr {

CfPattern CfPattern::exp_inv_s(const Integer& s) {
  if (s < 2) throw PatternError("exp-inv-s needs s >= 2, got " + to_string(s));
  CfPattern p(CfFamily::ExpInvS, false);
  p.s_ = s;
  return p;
}

CfPattern CfPattern::exp_inv_s_symbolic() { return CfPattern(CfFamily::ExpInvS, true); }

CfPattern CfPattern::exp_two_inv_s(const Integer& s) {
  if (s < 3 || mpz_even_p(s.get_mpz_t())) {
    throw PatternError("exp-two-inv-s needs an odd s >= 3, got " + to_string(s));
  }
  CfPattern p(CfFamily::ExpTwoInvS, false);
  p.s_ = s;
  return p;
}

CfPattern CfPattern::exp_two_inv_s_symbolic() { return CfPattern(CfFamily::ExpTwoInvS, true); }

CfPattern CfPattern::tanh_uv(const Integer& u, const Integer& v) {
  if (u < 1 || v < 1) {
    throw PatternError("tanh-uv needs u, v >= 1, got u=" + to_string(u) + " v=" + to_string(v));
  }
  CfPattern p(CfFamily::TanhUV, false);
  p.u_ = u;
  p.v_ = v;
  Integer uv = u * v;
  if (mpz_perfect_square_p(uv.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), uv.get_mpz_t());
    p.s_ = root;
  }
  return p;
}

const Integer& CfPattern::s() const {
  if (!s_) {
    throw PatternError(symbolic_ ? "pattern is symbolic in s"
                                 : "s = sqrt(uv) is not an integer for this pattern");
  }
  return *s_;
}

std::string CfPattern::describe() const {
  switch (family_) {
    case CfFamily::ExpInvS:
      return symbolic_ ? "exp-inv-s(symbolic)" : "exp-inv-s(s=" + to_string(*s_) + ")";
    case CfFamily::ExpTwoInvS:
      return symbolic_ ? "exp-two-inv-s(symbolic)" : "exp-two-inv-s(s=" + to_string(*s_) + ")";
    case CfFamily::TanhUV:
      return "tanh-uv(u=" + to_string(u_) + ",v=" + to_string(v_) + ")";
  }
  return "?";
}

namespace {

void check_index(long n) {
  if (n < 0) throw std::invalid_argument("partial quotient index must be >= 0");
}

// Rule in s for the exponential families.
Polynomial exp_rule(CfFamily family, long n) {
  if (n == 0) return Polynomial(Rational(1));
  if (family == CfFamily::ExpInvS) {
    const long k = (n - 1) / 3;  // a_{3k+1} = (2k+1)s - 1, a_{3k+2} = a_{3k+3} = 1
    if ((n - 1) % 3 == 0) return Polynomial{Rational(-1), Rational(2 * k + 1)};
    return Polynomial(Rational(1));
  }
  const long k = (n - 1) / 5;
  switch ((n - 1) % 5) {
    case 0:  // ((6k+1)s - 1)/2
      return Polynomial{Rational(-1, 2), make_rational(6 * k + 1, 2)};
    case 1:  // (12k+6)s
      return Polynomial{Rational(0), Rational(12 * k + 6)};
    case 2:  // ((6k+5)s - 1)/2
      return Polynomial{Rational(-1, 2), make_rational(6 * k + 5, 2)};
    default:
      return Polynomial(Rational(1));
  }
}

template <class Ring, class QuotientFn>
std::vector<Convergent<Ring>> run_recurrence(long N, QuotientFn&& a) {
  if (N < 0) throw std::invalid_argument("convergent count must be >= 0");
  std::vector<Convergent<Ring>> out;
  out.reserve(static_cast<std::size_t>(N) + 2);
  out.push_back({-1, Ring(1), Ring(0)});
  Ring a0 = a(0);
  out.push_back({0, a0, Ring(1)});
  for (long n = 1; n <= N; ++n) {
    const auto& prev = out[out.size() - 1];
    const auto& prev2 = out[out.size() - 2];
    Ring an = a(n);
    Ring p = an * prev.p + prev2.p;
    Ring q = an * prev.q + prev2.q;
    out.push_back({n, std::move(p), std::move(q)});
  }
  return out;
}

}  // namespace

Integer partial_quotient(const CfPattern& pattern, long n) {
  check_index(n);
  if (pattern.family() == CfFamily::TanhUV) {
    if (n == 0) return 0;
    // a_{2k-1} = (4k-3)u = (2n-1)u, a_{2k} = (4k-1)v = (2n-1)v
    return Integer(2 * n - 1) * (n % 2 == 1 ? pattern.u() : pattern.v());
  }
  Rational value = exp_rule(pattern.family(), n).evaluate(Rational(pattern.s()));
  if (value.get_den() != 1) throw PatternError("non-integral partial quotient");
  return value.get_num();
}

Polynomial partial_quotient_symbolic(const CfPattern& pattern, long n) {
  check_index(n);
  if (pattern.family() == CfFamily::TanhUV) {
    throw PatternError("tanh-uv partial quotients are not polynomials in s alone");
  }
  return exp_rule(pattern.family(), n);
}

std::vector<Convergent<Integer>> convergents(const CfPattern& pattern, long N) {
  if (pattern.is_symbolic()) throw PatternError("numeric convergents need a numeric pattern");
  return run_recurrence<Integer>(N, [&](long n) { return partial_quotient(pattern, n); });
}

std::vector<Convergent<Polynomial>> symbolic_convergents(const CfPattern& pattern, long N) {
  if (pattern.family() == CfFamily::TanhUV) {
    throw PatternError("symbolic convergents are only available for exponential families");
  }
  return run_recurrence<Polynomial>(N, [&](long n) { return partial_quotient_symbolic(pattern, n); });
}

LaurentSeries alpha_series(const CfPattern& pattern, int order) {
  switch (pattern.family()) {
    case CfFamily::ExpInvS:
      return series_exp(Rational(1), order);
    case CfFamily::ExpTwoInvS:
      return series_exp(Rational(2), order);
    case CfFamily::TanhUV:
      break;
  }
  throw PatternError("no series in 1/s alone for (s/u) tanh(1/s)");
}

RationalInterval enclose_alpha(const CfPattern& pattern, const Rational& eps) {
  const Integer& s = pattern.s();
  switch (pattern.family()) {
    case CfFamily::ExpInvS:
      return enclose_exp(make_rational(1, s), eps);
    case CfFamily::ExpTwoInvS:
      return enclose_exp(make_rational(2, s), eps);
    case CfFamily::TanhUV: {
      const Rational scale = make_rational(s, pattern.u());
      return RationalInterval(scale) * enclose_tanh_inv_s(s, eps / scale);
    }
  }
  throw PatternError("unknown family");
}

namespace {

ErrorTerm make_symbolic(const Convergent<Polynomial>& c, const LaurentSeries& alpha) {
  if (c.n == -1) return {-1, LaurentSeries::constant(1), 1};
  LaurentSeries e = c.p.to_laurent() - alpha * c.q.to_laurent();
  int sign = e.leading_sign();
  if (sign == 0) sign = expected_error_sign(c.n);
  return {c.n, std::move(e), sign};
}

ErrorTerm make_numeric(const Convergent<Integer>& c, const RationalInterval& alpha) {
  if (c.n == -1) return {-1, RationalInterval(1), 1};
  RationalInterval e = RationalInterval(Rational(c.p)) - alpha * RationalInterval(Rational(c.q));
  int sign = expected_error_sign(c.n);
  if (e.lo() > 0) sign = 1;
  if (e.hi() < 0) sign = -1;
  return {c.n, std::move(e), sign};
}

}  // namespace

std::vector<ErrorTerm> error_terms(const CfPattern& pattern, long N, const ErrorMode& mode) {
  std::vector<ErrorTerm> out;
  if (const auto* sym = std::get_if<SymbolicMode>(&mode)) {
    if (pattern.family() == CfFamily::TanhUV) {
      throw PatternError("symbolic error terms are only available for exponential families");
    }
    auto conv = symbolic_convergents(pattern, N);
    int max_degree = 0;
    for (const auto& c : conv) max_degree = std::max(max_degree, c.q.degree());
    // alpha * q_n loses deg(q_n) orders; pad so every E_n is valid to `order`.
    const LaurentSeries alpha = alpha_series(pattern, sym->order + max_degree);
    for (const auto& c : conv) out.push_back(make_symbolic(c, alpha));
    for (auto& e : out) e.value = std::get<LaurentSeries>(e.value).truncated(sym->order);
    return out;
  }
  const auto& num = std::get<NumericMode>(mode);
  if (num.eps <= 0) throw std::invalid_argument("numeric error terms need eps > 0");
  if (pattern.is_symbolic()) throw PatternError("numeric error terms need a numeric pattern");
  const RationalInterval alpha = enclose_alpha(pattern, num.eps);
  for (const auto& c : convergents(pattern, N)) out.push_back(make_numeric(c, alpha));
  return out;
}

ErrorTerm error_term(const CfPattern& pattern, long n, const ErrorMode& mode) {
  if (n < -1) throw std::invalid_argument("error term index must be >= -1");
  auto all = error_terms(pattern, std::max(n, 0L), mode);
  return all[static_cast<std::size_t>(n + 1)];
}

}  // namespace cferr
