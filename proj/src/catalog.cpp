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

#include "cferr/catalog.hpp"

#include <string>

#include "cferr/hypergeom.hpp"
#include "cferr/identities.hpp"
#include "cferr/parallel.hpp"

namespace cferr {

namespace {

using Batch = std::vector<IdentityReport>;

// Per-instance identities; each instance may yield several reports.
template <class Fn>
Batch each(long lo, long hi, Fn fn) {
  Batch out;
  for (auto& part : parallel_map(lo, hi, [&](long k) {
         if constexpr (std::is_same_v<decltype(fn(k)), IdentityReport>) {
           return Batch{fn(k)};
         } else {
           return fn(k);
         }
       })) {
    for (auto& r : part) out.push_back(std::move(r));
  }
  return out;
}

Batch thm1_batch(long lo, long hi) {
  const WeightedSumAssembly a = assemble_quadratic_sum_exp(static_cast<int>(hi));
  Batch formula = each(lo, hi, quadratic_coeff_exp);
  Batch out;
  for (long r = lo; r <= hi; ++r) {
    out.push_back(std::move(formula[static_cast<std::size_t>(r - lo)]));
    const int e = static_cast<int>(r);
    out.push_back(make_report("thm1.assembly", r, a.assembled.coeff(e),
                              make_rational(1, factorial(r)), a.terms));
  }
  return out;
}

Batch assembly_batch(const char* id, WeightedSumAssembly (*build)(int), long lo, long hi) {
  return coefficient_reports(id, build(static_cast<int>(hi)), lo, hi);
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> table{
      {"cor1", "S_k = sum_{n=0}^{k} (2n+1) k!/((k-n)!(n+k+1)!) = 1/k!", 0, 0, 200,
       [](long lo, long hi) { return each(lo, hi, cor1); }},
      {"cor1-binomial", "sum_{n=0}^{k} (2n+1) C(2k+1,k-n) = (2k+1) C(2k,k)", 0, 0, 200,
       [](long lo, long hi) { return each(lo, hi, cor1_binomial); }},
      {"linear-exp", "[t^k] of the linear error sum for e^{1/s}, second sum cancelling termwise, = 1/k!", 0, 0,
       60, [](long lo, long hi) { return each(lo, hi, coeff_linear_exp); }},
      {"thm1", "[t^r] of sum a_{n+1} E_n^2 for e^{1/s} = 1/r!, four-sum formula and series assembly", 0, 0,
       40, thm1_batch},
      {"thm3", "3F2(-k,3/2,1;1/2,k+2;-1) = k+1 and S_k = 3F2/(k+1)!", 0, 0, 200,
       [](long lo, long hi) { return each(lo, hi, verify_thm3); }},
      {"lemma-3f2", "3F2(-k,3/2,1;1/2,k+2;1) = 0 for k >= 1", 1, 1, 200,
       [](long lo, long hi) { return each(lo, hi, verify_lemma_vanish); }},
      {"goal-z", "[t^k] of (e^{2/s}+1)/2 = sum_{n<=k/2} (4n+1) 2^k k!/((k-2n)!(2n+k+1)!)", 0, 0, 150,
       [](long lo, long hi) { return each(lo, hi, goal_z_coeff); }},
      {"second-tanh", "[t^k] of (e^{2/s}-1)/2 = sum_{n<=(k-1)/2} (4n+3) 2^k k!/((k-2n-1)!(k+2n+2)!)", 1,
       1, 150, [](long lo, long hi) { return each(lo, hi, second_tanh_coeff); }},
      {"thm4", "1/k! = sum (4n+1) 2 k!/((k-2n)!(2n+k+1)!), factorial and binomial forms", 1, 1, 150,
       [](long lo, long hi) { return each(lo, hi, thm4); }},
      {"thm5", "1/k! = sum (4n+3) 2 k!/((k-2n-1)!(k+2n+2)!), binomial form and both conversions", 1, 1,
       150, [](long lo, long hi) { return each(lo, hi, thm5); }},
      {"parity-split", "even/odd-n parts of S_k equal (S_k +- 3F2(z=1)/(k+1)!)/2", 1, 1, 100,
       [](long lo, long hi) { return each(lo, hi, parity_split); }},
      {"thm-quad-tanh", "4^k/(k+1)! = triple sums over 4n+m1+m2 = k and = k+2", 0, 0, 25,
       [](long lo, long hi) { return each(lo, hi, quad_tanh); }},
      {"thm-e2s", "2^l/l! = seven floor-bounded sums from the e^{2/s} error terms", 1, 1, 60,
       [](long lo, long hi) { return each(lo, hi, e2s_theorem); }},
      {"assemble-exp", "1 + sum a_{n+1}|E_n| = 2 + sum t^k/k! for e^{1/s}, per coefficient", 0, 0, 30,
       [](long lo, long hi) { return assembly_batch("assemble-exp", assemble_linear_sum_exp, lo, hi); }},
      {"assemble-e2s", "1 + sum a_{n+1}|E_n| = 1 + e^{2t} for e^{2/s}, per coefficient", 0, 0, 20,
       [](long lo, long hi) { return assembly_batch("assemble-e2s", assemble_linear_sum_e2s, lo, hi); }},
      {"quad-series", "Phi_0 + Phi_1 = sum 4^k t^k/(k+1)!, per coefficient", 0, 0, 20,
       [](long lo, long hi) { return assembly_batch("quad-series", assemble_phi_sum, lo, hi); }},
      {"assemble-tanh", "C_0 = (e^{2/s}+1)/2 and C_1 = (e^{2/s}-1)/2, per coefficient", 0, 0, 20,
       [](long lo, long hi) {
         Batch out = assembly_batch("assemble-tanh.c0", assemble_tanh_c0, lo, hi);
         for (auto& r : assembly_batch("assemble-tanh.c1", assemble_tanh_c1, lo, hi)) out.push_back(std::move(r));
         return out;
       }},
  };
  return table;
}

}  // namespace

std::span<const CatalogEntry> identity_catalog() { return entries(); }

const CatalogEntry* find_identity(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::vector<IdentityReport> run_identity(const CatalogEntry& entry, long lo, long hi) {
  if (lo > hi) {
    throw CatalogError("empty range " + std::to_string(lo) + ".." + std::to_string(hi));
  }
  if (lo < entry.min_instance) {
    throw CatalogError(std::string(entry.id) + " starts at " + std::to_string(entry.min_instance));
  }
  return entry.run(lo, hi);
}

}  // namespace cferr
