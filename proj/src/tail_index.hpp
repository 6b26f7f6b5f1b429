/* Copyright 2026 The citescale Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
======================================================================== */

#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "citescale/dataset.hpp"

namespace citescale::detail {

// Run-length view of the positive part of a sorted sample with suffix sums,
// so every candidate tail's sufficient statistics are O(1).
struct TailIndex {
  std::vector<Count> values;             // unique positive values, ascending
  std::vector<std::size_t> counts;       // multiplicity of values[i]
  std::vector<std::size_t> suffix_count; // observations >= values[i]
  std::vector<double> suffix_log_sum;    // sum of ln x over x >= values[i]

  explicit TailIndex(std::span<const Count> sorted) {
    for (auto x : sorted) {
      if (x == 0) continue;
      if (values.empty() || values.back() != x) {
        values.push_back(x);
        counts.push_back(1);
      } else {
        ++counts.back();
      }
    }
    const std::size_t m = values.size();
    suffix_count.assign(m + 1, 0);
    suffix_log_sum.assign(m + 1, 0.0);
    for (std::size_t i = m; i-- > 0;) {
      suffix_count[i] = suffix_count[i + 1] + counts[i];
      suffix_log_sum[i] = suffix_log_sum[i + 1] +
                          static_cast<double>(counts[i]) *
                              std::log(static_cast<double>(values[i]));
    }
  }

  std::size_t size() const { return values.size(); }

  // Index of the first unique value >= x (size() if none).
  std::size_t first_at_least(Count x) const {
    std::size_t lo = 0, hi = values.size();
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (values[mid] < x) lo = mid + 1; else hi = mid;
    }
    return lo;
  }
};

}  // namespace citescale::detail
