// Copyright 2026 The vilenkin-mra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VILENKIN_SRC_ODOMETER_HPP
#define VILENKIN_SRC_ODOMETER_HPP

#include <cstddef>
#include <vector>

namespace vilenkin::detail {

// Counts through all base-p digit tuples of a fixed width, digit 0 fastest.
class Odometer {
 public:
  Odometer(int base, std::size_t width) : base_(base), digits_(width, 0) {}

  const std::vector<int>& digits() const noexcept { return digits_; }

  // Advances; false once every tuple has been visited.
  bool next() noexcept {
    for (auto& d : digits_) {
      if (++d < base_) return true;
      d = 0;
    }
    return false;
  }

 private:
  int base_;
  std::vector<int> digits_;
};

}  // namespace vilenkin::detail

#endif  // VILENKIN_SRC_ODOMETER_HPP
