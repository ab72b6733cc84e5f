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

#include "cferr/laurent_series.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace cferr {

namespace {

// Saturating sum of two orders; anything at or past kExact stays exact.
int add_orders(int a, int b) {
  if (a == LaurentSeries::kExact || b == LaurentSeries::kExact) return LaurentSeries::kExact;
  std::int64_t s = static_cast<std::int64_t>(a) + b;
  if (s >= LaurentSeries::kExact) return LaurentSeries::kExact;
  if (s < std::numeric_limits<int>::min()) return std::numeric_limits<int>::min();
  return static_cast<int>(s);
}

}  // namespace

LaurentSeries::LaurentSeries(Terms terms, int truncation) : truncation_(truncation) {
  for (auto& [e, c] : terms) {
    if (c == 0) continue;
    if (e > truncation_) {
      throw std::invalid_argument("coefficient at t^" + std::to_string(e) +
                                  " lies above truncation order " + std::to_string(truncation_));
    }
    terms_.emplace(e, std::move(c));
  }
}

LaurentSeries LaurentSeries::constant(const Rational& c, int truncation) {
  return monomial(c, 0, truncation);
}

LaurentSeries LaurentSeries::monomial(const Rational& c, int exponent, int truncation) {
  Terms t;
  if (c != 0 && exponent <= truncation) t.emplace(exponent, c);
  return LaurentSeries(std::move(t), truncation);
}

int LaurentSeries::valuation() const {
  if (!terms_.empty()) return terms_.begin()->first;
  return add_orders(truncation_, 1);
}

Rational LaurentSeries::coeff(int e) const {
  if (e > truncation_) {
    throw TruncationError("coefficient of t^" + std::to_string(e) +
                          " is unknown (series truncated at order " + std::to_string(truncation_) +
                          ")");
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentSeries LaurentSeries::truncated(int order) const {
  LaurentSeries r(std::min(order, truncation_));
  for (const auto& [e, c] : terms_) {
    if (e > r.truncation_) break;
    r.terms_.emplace(e, c);
  }
  return r;
}

int LaurentSeries::leading_sign() const {
  if (terms_.empty()) return 0;
  return sgn(terms_.begin()->second);
}

LaurentSeries LaurentSeries::abs() const {
  int sign = leading_sign();
  if (sign == 0) throw std::domain_error("sign of a zero series is undetermined");
  return sign > 0 ? *this : -*this;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& rhs) {
  truncation_ = std::min(truncation_, rhs.truncation_);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  terms_.erase(terms_.upper_bound(truncation_), terms_.end());
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& rhs) { return *this += -rhs; }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  int order = std::min(add_orders(a.truncation_, b.valuation()),
                       add_orders(b.truncation_, a.valuation()));
  LaurentSeries r(order);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      std::int64_t e = static_cast<std::int64_t>(ea) + eb;
      if (e > order) break;
      r.terms_[static_cast<int>(e)] += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

nlohmann::ordered_json LaurentSeries::to_json() const {
  nlohmann::ordered_json j;
  j["var"] = "1/s";
  if (is_exact()) {
    j["trunc"] = nullptr;
  } else {
    j["trunc"] = truncation_;
  }
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (const auto& [e, c] : terms_) coeffs[std::to_string(e)] = to_string(c);
  j["coeffs"] = std::move(coeffs);
  return j;
}

LaurentSeries LaurentSeries::from_json(const nlohmann::json& j) {
  if (j.value("var", std::string("1/s")) != "1/s") {
    throw std::invalid_argument("unsupported series variable");
  }
  int order = kExact;
  if (j.contains("trunc") && !j.at("trunc").is_null()) order = j.at("trunc").get<int>();
  Terms terms;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    terms.emplace(std::stoi(key), parse_rational(value.get<std::string>()));
  }
  return LaurentSeries(std::move(terms), order);
}

bool agree_through(const LaurentSeries& a, const LaurentSeries& b, int order) {
  if (a.truncation() < order || b.truncation() < order) {
    throw TruncationError("series not known through order " + std::to_string(order));
  }
  for (int e = std::min({a.valuation(), b.valuation(), order}); e <= order; ++e) {
    if (a.coeff(e) != b.coeff(e)) return false;
  }
  return true;
}

LaurentSeries series_exp(const Rational& c, int order) {
  if (order < 0) throw std::invalid_argument("series_exp needs order >= 0");
  LaurentSeries::Terms terms;
  Rational term = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) term = term * c / k;
    terms.emplace(k, term);
  }
  return LaurentSeries(std::move(terms), order);
}

LaurentSeries series_arith(const LaurentSeries& a, const LaurentSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::Add:
      return a + b;
    case SeriesOp::Sub:
      return a - b;
    case SeriesOp::Mul:
      return a * b;
  }
  throw std::invalid_argument("unknown series operation");
}

LaurentSeries series_scale(const LaurentSeries& a, const Rational& c) { return a * c; }

std::string to_string(const LaurentSeries& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << to_string(c) << ")";
    if (e != 0) out << "*t^" << e;
  }
  if (first) out << "0";
  if (!s.is_exact()) out << " + O(t^" << s.truncation() + 1 << ")";
  return out.str();
}

}  // namespace cferr
