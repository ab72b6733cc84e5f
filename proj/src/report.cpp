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

#include "cferr/report.hpp"

namespace cferr {

IdentityReport make_report(std::string id, long instance, Rational lhs, Rational rhs,
                           std::size_t terms) {
  IdentityReport r;
  r.id = std::move(id);
  r.instance = instance;
  r.pass = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.terms = terms;
  return r;
}

nlohmann::ordered_json to_json(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["k"] = r.instance;
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["pass"] = r.pass;
  j["terms"] = r.terms;
  return j;
}

IdentityReport report_from_json(const nlohmann::json& j) {
  IdentityReport r = make_report(j.at("id").get<std::string>(), j.at("k").get<long>(),
                                 parse_rational(j.at("lhs").get<std::string>()),
                                 parse_rational(j.at("rhs").get<std::string>()),
                                 j.at("terms").get<std::size_t>());
  if (j.at("pass").get<bool>() != r.pass) {
    throw std::invalid_argument("report 'pass' disagrees with lhs == rhs");
  }
  return r;
}

std::string to_csv_row(const IdentityReport& r) {
  return r.id + "," + std::to_string(r.instance) + ",\"" + to_string(r.lhs) + "\",\"" +
         to_string(r.rhs) + "\"," + (r.pass ? "true" : "false") + "," + std::to_string(r.terms);
}

}  // namespace cferr
