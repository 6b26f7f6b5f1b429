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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citescale/dataset.hpp"
#include "citescale/powerlaw.hpp"

namespace citescale {

enum class Family { lognormal, exponential, powerlaw_cutoff };

std::string_view family_name(Family family);
/// Accepts "lognormal", "exponential", "powerlaw_cutoff" (alias "cutoff").
Family parse_family(std::string_view name);

/// A fitted alternative tail model on integers x >= x_min.
///
/// Continuous families are discretized as F(x + 1/2) - F(x - 1/2),
/// renormalized over x >= x_min. The cutoff family is
/// x^-alpha e^(-rate x) / Z on the same support.
struct AltFit {
  Family family = Family::exponential;
  Count x_min = 1;
  double mu = 0.0;     // lognormal location (log scale)
  double sigma = 0.0;  // lognormal scale
  double rate = 0.0;   // exponential rate; cutoff rate lambda
  double alpha = 0.0;  // cutoff exponent
  double log_likelihood = 0.0;
  std::size_t n_tail = 0;
  std::size_t sweeps = 0;

  double log_pmf(Count x) const;
};

/// Tail MLE for one family at a given x_min.
/// Errors: "empty tail"; "degenerate tail" (fewer than two distinct tail
/// values); non-convergence after the sweep cap, with diagnostics.
AltFit fit_alternative(const CitationSample& sample, Count x_min, Family family);

/// log sum over x >= x_min of x^-alpha e^(-lambda x). alpha >= 0,
/// lambda >= 0, and alpha > 1 when lambda == 0.
double cutoff_log_normalizer(double alpha, double lambda, Count x_min);

/// Exact draws from the fitted family; chunked seeding as in
/// sample_power_law.
CitationSample sample_alternative(const AltFit& fit, std::size_t n,
                                  std::uint64_t seed, unsigned threads = 1);

enum class Verdict { power_law_favored, alternative_favored, inconclusive };

std::string_view verdict_name(Verdict verdict);

/// p at or below this makes a comparison significant.
inline constexpr double kComparisonThreshold = 0.10;

struct LikelihoodRatio {
  /// Sum of pointwise log-likelihood differences (first minus second).
  double lr = 0.0;
  /// Vuong statistic lr / (sqrt(n) * sd of the differences).
  double normalized = 0.0;
  /// Two-sided normal p for the normalized statistic.
  double p = 1.0;
  bool zero_variance = false;
};

/// Vuong test on pointwise log-likelihoods of the same observations.
LikelihoodRatio vuong_test(std::span<const double> log_first,
                           std::span<const double> log_second);

struct ModelComparison {
  Family alternative = Family::exponential;
  /// Power-law log-likelihood minus the alternative's; > 0 favors the
  /// power law.
  double lr = 0.0;
  double normalized_lr = 0.0;
  double p = 1.0;
  Verdict verdict = Verdict::inconclusive;
  bool nested = false;
  std::string diagnostic;
  AltFit fit;
};

/// Non-nested families use Vuong's normalized ratio with a two-sided
/// normal p; the nested cutoff uses chi-square(1) on 2|lr|.
std::vector<ModelComparison> compare_models(const CitationSample& sample,
                                            const PowerLawFit& pl,
                                            std::span<const Family> alternatives);

Verdict verdict_for(double lr, double p);

}  // namespace citescale
