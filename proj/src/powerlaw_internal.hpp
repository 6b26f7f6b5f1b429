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

#include <optional>
#include <span>

#include "citescale/powerlaw.hpp"
#include "tail_index.hpp"

namespace citescale::detail {

struct ScanResult {
  Count x_min = 0;
  double alpha = 0.0;
  double log_likelihood = 0.0;
  double ks = 0.0;
  std::size_t n_tail = 0;
};

// MLE from sufficient statistics (n, sum ln x) of a non-degenerate tail.
AlphaEstimate solve_alpha(std::size_t n, double log_sum, Count x_min,
                          double start);

double ks_on_index(const TailIndex& index, std::size_t begin, Count x_min,
                   double alpha);

std::optional<ScanResult> scan_x_min(const TailIndex& index,
                                     std::size_t min_tail);

std::optional<ScanResult> fit_at(const TailIndex& index, Count x_min);

// Full refit of a sorted sample, as done per bootstrap or GoF replicate.
std::optional<ScanResult> refit(std::span<const Count> sorted,
                                std::size_t min_tail,
                                std::optional<Count> fixed_x_min);

}  // namespace citescale::detail
