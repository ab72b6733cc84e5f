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

#ifndef CFERR_CF_HPP
#define CFERR_CF_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cferr/exact.hpp"
#include "cferr/interval.hpp"
#include "cferr/laurent_series.hpp"
#include "cferr/polynomial.hpp"

namespace cferr {

/// Hurwitzian families with known partial-quotient rules.
///
///   ExpInvS     e^{1/s}          = [1; (2k-1)s-1, 1, 1]_{k>=1}
///   ExpTwoInvS  e^{2/s}          = [1; ((6k-5)s-1)/2, (12k-6)s, ((6k-1)s-1)/2, 1, 1]_{k>=1}
///   TanhUV      (s/u) tanh(1/s)  = [0; (4k-3)u, (4k-1)v]_{k>=1},  s = sqrt(uv)
enum class CfFamily { ExpInvS, ExpTwoInvS, TanhUV };

/// Invalid pattern parameters or an unsupported family/mode combination.
class PatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CfPattern {
 public:
  /// Numeric e^{1/s}; s >= 2 (s = 1 would give a_1 = 0).
  static CfPattern exp_inv_s(const Integer& s);
  static CfPattern exp_inv_s_symbolic();
  /// Numeric e^{2/s}; s odd and >= 3.
  static CfPattern exp_two_inv_s(const Integer& s);
  static CfPattern exp_two_inv_s_symbolic();
  /// (s/u) tanh(1/s) with s = sqrt(uv); u, v >= 1. Convergents exist for any
  /// u, v; numeric values of alpha additionally need uv to be a square.
  static CfPattern tanh_uv(const Integer& u, const Integer& v);

  CfFamily family() const { return family_; }
  bool is_symbolic() const { return symbolic_; }
  /// True when s is a known integer, so alpha can be enclosed numerically.
  bool has_numeric_alpha() const { return s_.has_value(); }
  /// Throws PatternError when s is symbolic or not an integer.
  const Integer& s() const;
  const Integer& u() const { return u_; }
  const Integer& v() const { return v_; }

  std::string describe() const;

 private:
  CfPattern(CfFamily family, bool symbolic) : family_(family), symbolic_(symbolic) {}

  CfFamily family_;
  bool symbolic_;
  std::optional<Integer> s_;
  Integer u_ = 0;
  Integer v_ = 0;
};

/// Partial quotient a_n (n >= 0) of a pattern with numeric parameters.
Integer partial_quotient(const CfPattern& pattern, long n);

/// Partial quotient a_n as a polynomial in s; exponential families only.
Polynomial partial_quotient_symbolic(const CfPattern& pattern, long n);

template <class Ring>
struct Convergent {
  long n;
  Ring p;
  Ring q;
};

/// Convergents for n = -1 .. N with p_{-1} = 1, q_{-1} = 0 and
/// p_n = a_n p_{n-1} + p_{n-2}, q_n = a_n q_{n-1} + q_{n-2}.
std::vector<Convergent<Integer>> convergents(const CfPattern& pattern, long N);

/// Same recurrence over polynomials in s; exponential families only.
std::vector<Convergent<Polynomial>> symbolic_convergents(const CfPattern& pattern, long N);

/// alpha as a series in t = 1/s through t^order: e^{t} or e^{2t}. TanhUV is
/// rejected with PatternError (no single-variable series exists for it).
LaurentSeries alpha_series(const CfPattern& pattern, int order);

/// Enclosure of alpha of width <= eps; needs has_numeric_alpha().
RationalInterval enclose_alpha(const CfPattern& pattern, const Rational& eps);

struct SymbolicMode {
  int order;
};
struct NumericMode {
  Rational eps;
};
using ErrorMode = std::variant<SymbolicMode, NumericMode>;

/// E_n = p_n - alpha q_n, either as a series in t (valid through the
/// requested order) or as an interval of width <= eps (1 + |q_n|).
struct ErrorTerm {
  long n;
  std::variant<LaurentSeries, RationalInterval> value;
  int sign;

  const LaurentSeries& series() const { return std::get<LaurentSeries>(value); }
  const RationalInterval& interval() const { return std::get<RationalInterval>(value); }
};

ErrorTerm error_term(const CfPattern& pattern, long n, const ErrorMode& mode);

/// error_term for n = -1 .. N, sharing one convergent run and one alpha.
std::vector<ErrorTerm> error_terms(const CfPattern& pattern, long N, const ErrorMode& mode);

/// The sign every E_n of a simple continued fraction carries: (-1)^{n+1}.
constexpr int expected_error_sign(long n) { return (n % 2 == 0) ? -1 : 1; }

}  // namespace cferr

#endif  // CFERR_CF_HPP
