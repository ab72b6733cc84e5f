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

#include "cferr/hypergeom.hpp"

#include <array>
#include <optional>

#include "cferr/identities.hpp"

namespace cferr {

namespace {

std::optional<long> nonpositive_integer(const Rational& q) {
  if (q.get_den() != 1 || q > 0) return std::nullopt;
  Integer n = -q.get_num();
  if (!n.fits_slong_p()) throw HypergeometricError("termination index too large");
  return n.get_si();
}

long termination_index(std::span<const Rational> upper) {
  std::optional<long> k;
  for (const auto& a : upper) {
    if (auto n = nonpositive_integer(a); n && (!k || *n < *k)) k = n;
  }
  if (!k) throw HypergeometricError("no upper parameter is a non-positive integer; series does not terminate");
  return *k;
}

void check_lower(std::span<const Rational> lower, long k) {
  for (const auto& b : lower) {
    // (b)_j vanishes for some j <= k iff b is in {0, -1, ..., -(k-1)}.
    if (auto n = nonpositive_integer(b); n && *n <= k - 1) {
      throw HypergeometricError("lower parameter " + to_string(b) +
                                " makes a Pochhammer symbol vanish before termination");
    }
  }
}

}  // namespace

TerminatingHyperSum eval_terminating(std::span<const Rational> upper,
                                     std::span<const Rational> lower, const Rational& z) {
  const long k = termination_index(upper);
  check_lower(lower, k);
  TerminatingHyperSum out{{upper.begin(), upper.end()}, {lower.begin(), lower.end()}, z, 0, k};
  Rational term = 1;
  out.value = term;
  for (long j = 0; j < k; ++j) {
    for (const auto& a : upper) term *= a + j;
    for (const auto& b : lower) term /= b + j;
    term *= z;
    term /= j + 1;
    out.value += term;
  }
  return out;
}

Rational eval_terminating_direct(std::span<const Rational> upper,
                                 std::span<const Rational> lower, const Rational& z) {
  const long k = termination_index(upper);
  check_lower(lower, k);
  Rational sum = 0;
  for (long j = 0; j <= k; ++j) {
    Rational term = power(z, static_cast<unsigned long>(j)) / Rational(factorial(j));
    for (const auto& a : upper) term *= pochhammer(a, j);
    for (const auto& b : lower) term /= pochhammer(b, j);
    sum += term;
  }
  return sum;
}

Rational eval_3f2(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& b1,
                  const Rational& b2, const Rational& z) {
  const std::array<Rational, 3> upper{a1, a2, a3};
  const std::array<Rational, 2> lower{b1, b2};
  return eval_terminating(upper, lower, z).value;
}

Rational s_k_hypergeometric(long k, const Rational& z) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  return eval_3f2(Rational(-k), Rational(3, 2), Rational(1), Rational(1, 2), Rational(k + 2), z);
}

std::vector<IdentityReport> verify_thm3(long k) {
  const Rational f = s_k_hypergeometric(k, Rational(-1));
  const auto terms = static_cast<std::size_t>(k + 1);
  std::vector<IdentityReport> out;
  out.push_back(make_report("thm3.3f2", k, f, Rational(k + 1), terms));
  out.push_back(make_report("thm3.chain", k, s_k(k), f / Rational(factorial(k + 1)), terms));
  return out;
}

IdentityReport verify_lemma_vanish(long k) {
  if (k < 1) throw std::invalid_argument("the vanishing sum needs k >= 1 (its value at k = 0 is 1)");
  return make_report("lemma-3f2", k, s_k_hypergeometric(k, Rational(1)), Rational(0),
                     static_cast<std::size_t>(k + 1));
}

}  // namespace cferr
