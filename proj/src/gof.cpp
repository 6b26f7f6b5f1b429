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

#include "citescale/gof.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>

#include "citescale/error.hpp"
#include "citescale/parallel.hpp"
#include "citescale/random.hpp"
#include "powerlaw_internal.hpp"

namespace citescale {

std::size_t required_sims(double epsilon) {
  if (!(epsilon > 0.0)) throw Error("epsilon must be positive");
  // Guard against 1/(4 * 0.01^2) landing a hair above 2500.
  const double raw = 1.0 / (4.0 * epsilon * epsilon);
  const double rounded = std::round(raw);
  if (std::abs(raw - rounded) <= 1e-9 * rounded) {
    return static_cast<std::size_t>(rounded);
  }
  return static_cast<std::size_t>(std::ceil(raw));
}

std::vector<double> null_ks_distribution(const CitationSample& sample,
                                         const PowerLawFit& fit,
                                         std::size_t n_sims,
                                         std::uint64_t seed,
                                         const GofOptions& options) {
  if (n_sims == 0) throw Error("n_sims must be positive");
  const auto counts = sample.counts();
  const std::size_t n = counts.size();
  const auto below_end =
      std::lower_bound(counts.begin(), counts.end(), fit.x_min);
  const std::span<const Count> below(counts.begin(), below_end);
  const double tail_prob = static_cast<double>(fit.n_tail) /
                           static_cast<double>(n);
  const PowerLawSampler sampler(fit.model());
  const std::optional<Count> fixed =
      fit.x_min_fixed ? std::optional<Count>(fit.x_min) : std::nullopt;

  std::vector<double> out(n_sims);
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  parallel_for(n_sims, options.threads, [&](std::size_t r) {
    Rng rng(derive_seed(seed, r));
    std::vector<Count> synthetic(n);
    for (auto& x : synthetic) {
      if (below.empty() || rng.uniform() < tail_prob) {
        x = sampler(rng);
      } else {
        x = below[rng.below(below.size())];
      }
    }
    std::sort(synthetic.begin(), synthetic.end());
    std::optional<detail::ScanResult> refit;
    try {
      refit = detail::refit(synthetic, fit.min_tail, fixed);
    } catch (const Error&) {
      refit.reset();
    }
    out[r] = refit ? refit->ks : std::numeric_limits<double>::infinity();
    const std::size_t finished = ++done;
    if (options.progress) {
      std::lock_guard lock(progress_mutex);
      options.progress(finished, n_sims);
    }
  });
  return out;
}

GofResult gof_from_null(double ks_empirical, const std::vector<double>& null_ks,
                        std::uint64_t seed) {
  GofResult r;
  r.ks_empirical = ks_empirical;
  r.n_sims = null_ks.size();
  r.seed = seed;
  for (double ks : null_ks) {
    if (std::isinf(ks)) ++r.n_failed;
    if (ks >= ks_empirical) ++r.n_exceeding;
  }
  r.p_value = r.n_sims == 0 ? 0.0
                            : static_cast<double>(r.n_exceeding) /
                                  static_cast<double>(r.n_sims);
  r.ruled_out = r.p_value <= kPlausibilityThreshold;
  return r;
}

GofResult gof_test(const CitationSample& sample, const PowerLawFit& fit,
                   std::size_t n_sims, std::uint64_t seed,
                   const GofOptions& options) {
  const double ks = ks_distance(sample, fit.model());
  if (std::abs(ks - fit.ks) > 1e-9 || fit.n_total != sample.size()) {
    throw Error("stale fit");
  }
  const auto null_ks = null_ks_distribution(sample, fit, n_sims, seed, options);
  return gof_from_null(fit.ks, null_ks, seed);
}

}  // namespace citescale
