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

#ifndef CFERR_REPORT_HPP
#define CFERR_REPORT_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cferr/exact.hpp"

namespace cferr {

/// Outcome of checking one identity instance. pass is always lhs == rhs.
struct IdentityReport {
  std::string id;
  long instance = 0;
  Rational lhs;
  Rational rhs;
  bool pass = false;
  std::size_t terms = 0;
};

IdentityReport make_report(std::string id, long instance, Rational lhs, Rational rhs,
                           std::size_t terms);

/// {"id":..,"k":..,"lhs":"p/q","rhs":"p/q","pass":..,"terms":..}
nlohmann::ordered_json to_json(const IdentityReport& r);
IdentityReport report_from_json(const nlohmann::json& j);

inline constexpr std::string_view kCsvHeader = "id,instance,lhs,rhs,pass,terms";
/// One CSV row; rationals are quoted strings.
std::string to_csv_row(const IdentityReport& r);

}  // namespace cferr

#endif  // CFERR_REPORT_HPP
