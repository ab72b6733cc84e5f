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

#include "cferr/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cferr {

unsigned worker_count() {
  if (const char* env = std::getenv("CF_ERRSUM_THREADS"); env != nullptr) {
    const std::string_view text(env);
    unsigned value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
      throw std::invalid_argument("CF_ERRSUM_THREADS must be a positive integer, got '" +
                                  std::string(text) + "'");
    }
    return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace cferr
