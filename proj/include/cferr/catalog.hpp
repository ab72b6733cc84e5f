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

#ifndef CFERR_CATALOG_HPP
#define CFERR_CATALOG_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "cferr/report.hpp"

namespace cferr {

/// Range outside what an identity accepts, or an unknown identity id.
class CatalogError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CatalogEntry {
  std::string_view id;
  std::string_view statement;
  long min_instance;
  long default_lo;  ///< range used by the full report run
  long default_hi;
  /// Reports for every instance in lo..hi, in instance order.
  std::function<std::vector<IdentityReport>(long lo, long hi)> run;
};

std::span<const CatalogEntry> identity_catalog();
/// nullptr for an unknown id.
const CatalogEntry* find_identity(std::string_view id);
/// Validates lo <= hi and lo >= min_instance (CatalogError), then runs.
std::vector<IdentityReport> run_identity(const CatalogEntry& entry, long lo, long hi);

}  // namespace cferr

#endif  // CFERR_CATALOG_HPP
