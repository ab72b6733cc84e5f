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

#ifndef CFERR_HYPERGEOM_HPP
#define CFERR_HYPERGEOM_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "cferr/exact.hpp"
#include "cferr/report.hpp"

namespace cferr {

/// Parameters that do not describe a finite sum, or a vanishing lower
/// Pochhammer symbol inside the summation range.
class HypergeometricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Terminating pFq sum  sum_{j=0}^{k} prod (a_i)_j / prod (b_i)_j * z^j / j!,
/// where -k is the largest non-positive integer among the upper parameters.
struct TerminatingHyperSum {
  std::vector<Rational> upper;
  std::vector<Rational> lower;
  Rational z;
  Rational value;
  long last_index = 0;  ///< k
};

/// Builds terms with t_{j+1} = t_j prod (a_i + j) / prod (b_i + j) * z / (j+1).
TerminatingHyperSum eval_terminating(std::span<const Rational> upper,
                                     std::span<const Rational> lower, const Rational& z);

/// Same sum, each term from explicit Pochhammer products. Quadratic in k;
/// kept as an independent check of the recurrence.
Rational eval_terminating_direct(std::span<const Rational> upper,
                                 std::span<const Rational> lower, const Rational& z);

Rational eval_3f2(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& b1,
                  const Rational& b2, const Rational& z);

/// 3F2(-k, 3/2, 1; 1/2, k+2; z).
Rational s_k_hypergeometric(long k, const Rational& z);

/// Two reports for k >= 0: "thm3.3f2" (3F2 at z = -1 against k+1) and
/// "thm3.chain" (S_k against 3F2 / (k+1)!). Together with cor1 this is the
/// whole chain S_k = 3F2/(k+1)! = 1/k!.
std::vector<IdentityReport> verify_thm3(long k);

/// "lemma-3f2": 3F2(-k, 3/2, 1; 1/2, k+2; 1) = 0 for k >= 1. At k = 0 the
/// sum is 1, so k = 0 is rejected with std::invalid_argument.
IdentityReport verify_lemma_vanish(long k);

}  // namespace cferr

#endif  // CFERR_HYPERGEOM_HPP
