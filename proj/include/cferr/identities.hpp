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

#ifndef CFERR_IDENTITIES_HPP
#define CFERR_IDENTITIES_HPP

#include <vector>

#include "cferr/cf.hpp"
#include "cferr/error_series.hpp"
#include "cferr/exact.hpp"
#include "cferr/interval.hpp"
#include "cferr/laurent_series.hpp"
#include "cferr/polynomial.hpp"
#include "cferr/report.hpp"

namespace cferr {

// Finite identities. Each returns one report per instance with pass set by
// exact comparison. Unless noted, lhs is the finite sum and rhs the closed
// form.

/// S_k = sum_{n=0}^{k} (2n+1) k! / ((k-n)! (n+k+1)!).
Rational s_k(long k);
/// "cor1": S_k against 1/k!, k >= 0.
IdentityReport cor1(long k);
/// "cor1.binomial": sum_{n=0}^{k} (2n+1) C(2k+1, k-n) against (2k+1) C(2k, k).
IdentityReport cor1_binomial(long k);
/// "linear-exp": the coefficient of t^k in the linear error sum for e^{1/s},
/// written out as the main sum plus the bracketed second sum whose terms
/// cancel one by one. rhs = 1/k!.
IdentityReport coeff_linear_exp(long k);

/// Coefficient of t^r in the quadratic error sum for e^{1/s}, evaluated as
/// the indicator of r = 0 plus the four constrained sums over (n, i, j).
Rational quadratic_coeff_exp_value(long r, std::size_t* terms = nullptr);
/// "thm1.formula": quadratic_coeff_exp_value(r) against 1/r!.
IdentityReport quadratic_coeff_exp(long r);

/// "goal-z": lhs 1 (k = 0) or 2^{k-1}/k!, rhs
/// sum_{n<=k/2} (4n+1) 2^k k! / ((k-2n)! (2n+k+1)!).
IdentityReport goal_z_coeff(long k);
/// "second-tanh", k >= 1: lhs 2^{k-1}/k!, rhs
/// sum_{n<=(k-1)/2} (4n+3) 4^{n+1} 2^{k-2n-1} / (2 (k-2n-1)!) * k! / (k+2n+2)!.
IdentityReport second_tanh_coeff(long k);

/// sum_{n<=k/2} (4n+1) 2 k! / ((k-2n)! (2n+k+1)!)
Rational thm4_sum(long k);
/// sum_{n<=(k-1)/2} (4n+3) 2 k! / ((k-2n-1)! (k+2n+2)!)
Rational thm5_sum(long k);
/// "thm4.factorial" and "thm4.binomial", k >= 1.
std::vector<IdentityReport> thm4(long k);
/// "thm5.factorial", "thm5.binomial", "thm5.conversion1", "thm5.conversion2",
/// k >= 1.
std::vector<IdentityReport> thm5(long k);
/// "parity-split.even" and "parity-split.odd", k >= 1: the two sums above
/// against S_k + A_k and S_k - A_k, where A_k = 3F2(-k,3/2,1;1/2,k+2;1)/(k+1)!
/// is the alternating version of S_k.
std::vector<IdentityReport> parity_split(long k);

/// "thm-quad-tanh": the two triple sums over 4n+m1+m2 = k and
/// 4n+m1+m2 = k+2 (n >= 1) against 4^k/(k+1)!.
IdentityReport quad_tanh(long k);

/// "thm-e2s", l >= 1: the seven floor-bounded sums against 2^l/l!. Sums 1
/// and 6 use the forms that follow from the weighted series (see README).
IdentityReport e2s_theorem(long l);

/// Weighted error sum assembled as a truncated series, next to its target.
struct WeightedSumAssembly {
  CfFamily family;
  int order;
  LaurentSeries assembled;
  LaurentSeries target;
  long max_group_index;   ///< last group that contributed; -1 if none
  std::size_t terms = 0;  ///< weighted series that entered the sum

  bool matches() const { return agree_through(assembled, target, order); }
};

/// 1 + sum a_{n+1} |E_n| for e^{1/s} against 2 + sum_{k>=1} t^k/k!.
WeightedSumAssembly assemble_linear_sum_exp(int order);
/// 1 + sum a_{n+1} |E_n| for e^{2/s} against 1 + e^{2t}.
WeightedSumAssembly assemble_linear_sum_e2s(int order);
/// 1 + sum a_{n+1} E_n^2 for e^{1/s} against e^t.
WeightedSumAssembly assemble_quadratic_sum_exp(int order);
/// Phi_0 + Phi_1 against (s/4)(e^{4/s} - 1) = sum_k 4^k t^k/(k+1)!.
WeightedSumAssembly assemble_phi_sum(int order);
/// C_0 against (e^{2/s}+1)/2 (tanh family, linear sum, constant part).
WeightedSumAssembly assemble_tanh_c0(int order);
/// C_1 against (e^{2/s}-1)/2 (tanh family, linear sum, part of s/u).
WeightedSumAssembly assemble_tanh_c1(int order);

/// One report per coefficient k in lo..hi of an assembly built at order hi.
std::vector<IdentityReport> coefficient_reports(const char* id, const WeightedSumAssembly& a,
                                                long lo, long hi);

/// Residual of the partial weighted sum through index n.
struct PartialSumStep {
  long n;
  RationalInterval partial;   ///< sum_{m=-1}^{n} a_{m+1} |E_m|^power
  RationalInterval residual;  ///< |partial - target|
  /// The residual enclosure is wider than half its upper bound, so the
  /// upper bound says more about eps than about the residual.
  bool width_dominated;
};

struct PartialSumRun {
  int power;
  Rational alpha_width;  ///< width of the alpha enclosure finally used
  std::vector<PartialSumStep> steps;  ///< n = -1 .. N
};

/// Partial sums of sum a_{n+1} |E_n|^power against alpha + 1 (power 1) or
/// alpha (power 2), for a pattern with numeric alpha. The alpha enclosure is
/// tightened until every residual enclosure is at most eps wide.
PartialSumRun numeric_partial_sums(const CfPattern& pattern, long N, int power,
                                   const Rational& eps);

}  // namespace cferr

#endif  // CFERR_IDENTITIES_HPP
