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
#include <optional>
#include <string>
#include <vector>

#include "citescale/dataset.hpp"
#include "citescale/random.hpp"

namespace citescale {

/// pmf(x) = x^-alpha / zeta(alpha, x_min) on integers x >= x_min.
class DiscretePowerLaw {
 public:
  /// Throws Error on x_min == 0 or alpha <= 1.
  DiscretePowerLaw(Count x_min, double alpha);

  Count x_min() const { return x_min_; }
  double alpha() const { return alpha_; }
  /// log zeta(alpha, x_min).
  double log_normalizer() const { return log_norm_; }

  double log_pmf(Count x) const;
  double pmf(Count x) const;
  /// P(X >= x); 1 for x <= x_min.
  double ccdf(Count x) const;
  /// P(X <= x); 0 below x_min.
  double cdf(Count x) const;

 private:
  Count x_min_;
  double alpha_;
  double log_norm_;
};

struct AlphaEstimate {
  double alpha = 0.0;
  double log_likelihood = 0.0;
};

/// Discrete maximum likelihood for alpha on the tail x >= x_min.
/// Errors: "empty tail", "degenerate tail" (fewer than two distinct values).
AlphaEstimate fit_alpha(const CitationSample& sample, Count x_min);

/// Closed-form approximation 1 + n / sum ln(x / (x_min - 1/2)); the
/// starting point for the numeric MLE.
double approximate_alpha(const CitationSample& sample, Count x_min);

/// max over observed tail values of |empirical tail CDF - model CDF|.
double ks_distance(const CitationSample& sample, const DiscretePowerLaw& model);

struct FitOptions {
  /// Smallest tail a candidate x_min may leave.
  std::size_t min_tail = 50;
  /// Nonparametric bootstrap replicates for alpha_sd / x_min_sd; 0 skips.
  std::size_t bootstrap_reps = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  /// Skip the x_min scan and fit at this value.
  std::optional<Count> fixed_x_min;
  /// Called with (completed, total) as bootstrap replicates finish.
  std::function<void(std::size_t, std::size_t)> progress;
};

struct PowerLawFit {
  std::string label;
  Count x_min = 0;
  double alpha = 0.0;
  std::size_t n_tail = 0;
  std::size_t n_total = 0;
  double ks = 0.0;
  double alpha_sd = 0.0;
  double x_min_sd = 0.0;
  double log_likelihood = 0.0;
  std::size_t bootstrap_reps = 0;
  /// Replicates whose resample admitted no x_min candidate.
  std::size_t bootstrap_failures = 0;
  std::uint64_t seed = 0;
  std::size_t min_tail = 0;
  bool x_min_fixed = false;

  DiscretePowerLaw model() const { return {x_min, alpha}; }
};

/// x_min by KS minimization over unique observed values (ties go to the
/// smallest x_min), alpha by MLE at that x_min, uncertainties by
/// nonparametric bootstrap. Error "insufficient tail" when no candidate
/// leaves options.min_tail observations with two distinct values.
PowerLawFit fit_power_law(const CitationSample& sample,
                          const FitOptions& options = {});

/// Exact inverse-CDF sampler. A cumulative table covers the head of the
/// support; draws landing beyond it are resolved against the zeta tail.
class PowerLawSampler {
 public:
  explicit PowerLawSampler(const DiscretePowerLaw& model,
                           std::size_t table_size = 4096);

  Count operator()(Rng& rng) const;
  const DiscretePowerLaw& model() const { return model_; }

 private:
  Count resolve_tail(double survival) const;

  DiscretePowerLaw model_;
  // survival_[i] = P(X >= x_min + i), strictly decreasing.
  std::vector<double> survival_;
};

/// n draws; chunk c of 65536 draws uses Rng(derive_seed(seed, c)) so the
/// output is the same for any thread count.
CitationSample sample_power_law(const DiscretePowerLaw& model, std::size_t n,
                                std::uint64_t seed, unsigned threads = 1);

struct CcdfPoint {
  Count x = 0;
  double empirical = 0.0;
  double model = 0.0;
};

/// P(X >= x) over the unique tail values, empirical and fitted.
std::vector<CcdfPoint> ccdf_points(const CitationSample& sample,
                                   const PowerLawFit& fit);

}  // namespace citescale
