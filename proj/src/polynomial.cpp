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

#include "cferr/polynomial.hpp"

#include <algorithm>

namespace cferr {

Polynomial::Polynomial(Rational c) : coeffs_{std::move(c)} { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

Rational Polynomial::evaluate(const Rational& s) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * s + *it;
  return r;
}

LaurentSeries Polynomial::to_laurent() const {
  LaurentSeries::Terms terms;
  for (int d = 0; d <= degree(); ++d) {
    if (coeffs_[static_cast<std::size_t>(d)] != 0) terms.emplace(-d, coeffs_[static_cast<std::size_t>(d)]);
  }
  return LaurentSeries(std::move(terms), LaurentSeries::kExact);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

nlohmann::ordered_json Polynomial::to_json() const {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : coeffs_) coeffs.push_back(to_string(c));
  nlohmann::ordered_json j;
  j["deg_coeffs"] = std::move(coeffs);
  return j;
}

}  // namespace cferr
