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

#include <cstdint>
#include <functional>
#include <vector>

#include "citescale/dataset.hpp"
#include "citescale/powerlaw.hpp"

namespace citescale {

/// p <= this rules the power law out.
inline constexpr double kPlausibilityThreshold = 0.10;

/// ceil(1 / (4 epsilon^2)): simulations needed for p accurate to ~epsilon.
std::size_t required_sims(double epsilon);

struct GofResult {
  double ks_empirical = 0.0;
  std::size_t n_sims = 0;
  std::size_t n_exceeding = 0;
  /// Synthetic datasets that admitted no x_min candidate; counted as
  /// exceedances.
  std::size_t n_failed = 0;
  double p_value = 0.0;
  bool ruled_out = false;
  std::uint64_t seed = 0;
};

struct GofOptions {
  unsigned threads = 1;
  std::function<void(std::size_t, std::size_t)> progress;
};

/// KS of each synthetic dataset against its own refitted model. Replicate r
/// draws from Rng(derive_seed(seed, r)); a failed refit yields +infinity.
std::vector<double> null_ks_distribution(const CitationSample& sample,
                                         const PowerLawFit& fit,
                                         std::size_t n_sims,
                                         std::uint64_t seed,
                                         const GofOptions& options = {});

/// Semi-parametric bootstrap goodness-of-fit. Synthetic values come from
/// the fitted tail with probability n_tail / n and otherwise uniformly from
/// the observed values below x_min; every synthetic set is refit from
/// scratch. A synthetic KS >= the empirical KS counts as an exceedance.
/// Error "stale fit" if `fit` does not reproduce its KS on `sample`.
GofResult gof_test(const CitationSample& sample, const PowerLawFit& fit,
                   std::size_t n_sims, std::uint64_t seed,
                   const GofOptions& options = {});

/// Assembles a result from a precomputed null distribution.
GofResult gof_from_null(double ks_empirical, const std::vector<double>& null_ks,
                        std::uint64_t seed);

}  // namespace citescale
