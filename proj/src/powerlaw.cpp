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

#include "citescale/powerlaw.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>

#include <boost/math/tools/roots.hpp>

#include "citescale/error.hpp"
#include "citescale/parallel.hpp"
#include "citescale/special_functions.hpp"
#include "powerlaw_internal.hpp"
#include "tail_index.hpp"

namespace citescale {

DiscretePowerLaw::DiscretePowerLaw(Count x_min, double alpha)
    : x_min_(x_min), alpha_(alpha) {
  if (x_min == 0) throw Error("power law requires x_min >= 1");
  if (!(alpha > 1.0)) throw Error("non-normalizable");
  log_norm_ = std::log(hurwitz_zeta(alpha, static_cast<double>(x_min)));
}

double DiscretePowerLaw::log_pmf(Count x) const {
  if (x < x_min_) return -std::numeric_limits<double>::infinity();
  return -alpha_ * std::log(static_cast<double>(x)) - log_norm_;
}

double DiscretePowerLaw::pmf(Count x) const { return std::exp(log_pmf(x)); }

double DiscretePowerLaw::ccdf(Count x) const {
  if (x <= x_min_) return 1.0;
  return std::exp(std::log(hurwitz_zeta(alpha_, static_cast<double>(x))) -
                  log_norm_);
}

double DiscretePowerLaw::cdf(Count x) const {
  if (x < x_min_) return 0.0;
  return 1.0 - ccdf(x + 1);
}

namespace detail {

AlphaEstimate solve_alpha(std::size_t n, double log_sum, Count x_min,
                          double start) {
  const double q = static_cast<double>(x_min);
  const double nd = static_cast<double>(n);
  auto score = [&](double a) {
    const auto z = hurwitz_zeta_with_derivative(a, q);
    return -log_sum - nd * z.d_ds / z.value;
  };

  constexpr double kMaxAlpha = 1000.0;
  double a0 = std::clamp(start, 1.0 + 1e-6, 200.0);
  double lo, hi;
  double s_lo, s_hi;
  const double s0 = score(a0);
  if (s0 > 0.0) {
    lo = a0;
    s_lo = s0;
    hi = a0 + 0.5;
    while ((s_hi = score(hi)) > 0.0) {
      lo = hi;
      s_lo = s_hi;
      hi = 1.0 + 2.0 * (hi - 1.0);
      if (hi > kMaxAlpha) throw Error("alpha MLE did not converge (alpha > 1000)");
    }
  } else {
    hi = a0;
    s_hi = s0;
    lo = 1.0 + 0.5 * (a0 - 1.0);
    while ((s_lo = score(lo)) < 0.0) {
      hi = lo;
      s_hi = s_lo;
      lo = 1.0 + 0.5 * (lo - 1.0);
      if (lo - 1.0 < 1e-12) throw Error("alpha MLE did not converge (alpha -> 1)");
    }
  }

  double alpha;
  if (s_lo == 0.0) {
    alpha = lo;
  } else if (s_hi == 0.0) {
    alpha = hi;
  } else {
    std::uintmax_t max_iter = 200;
    auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-10; };
    const auto r = boost::math::tools::toms748_solve(score, lo, hi, s_lo, s_hi,
                                                     tol, max_iter);
    alpha = 0.5 * (r.first + r.second);
  }
  const double ll =
      -alpha * log_sum - nd * std::log(hurwitz_zeta(alpha, q));
  return {alpha, ll};
}

double ks_on_index(const TailIndex& index, std::size_t begin, Count x_min,
                   double alpha) {
  const std::size_t n = index.suffix_count[begin];
  const double z0 = hurwitz_zeta(alpha, static_cast<double>(x_min));
  double z = z0;  // zeta(alpha, p)
  Count p = x_min;
  std::size_t cum = 0;
  double worst = 0.0;
  for (std::size_t j = begin; j < index.size(); ++j) {
    const Count target = index.values[j] + 1;
    if (target - p <= 64) {
      for (Count x = p; x < target; ++x) {
        z -= std::exp(-alpha * std::log(static_cast<double>(x)));
      }
    } else {
      z = hurwitz_zeta(alpha, static_cast<double>(target));
    }
    p = target;
    cum += index.counts[j];
    const double model = std::clamp(1.0 - z / z0, 0.0, 1.0);
    const double empirical = static_cast<double>(cum) / static_cast<double>(n);
    worst = std::max(worst, std::abs(empirical - model));
  }
  return worst;
}

std::optional<ScanResult> scan_x_min(const TailIndex& index,
                                     std::size_t min_tail) {
  std::optional<ScanResult> best;
  const std::size_t floor_tail = std::max<std::size_t>(min_tail, 2);
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index.suffix_count[i] < floor_tail) break;
    if (index.size() - i < 2) break;
    const Count x_min = index.values[i];
    const std::size_t n = index.suffix_count[i];
    const double log_sum = index.suffix_log_sum[i];
    const double start =
        1.0 + static_cast<double>(n) /
                  (log_sum - static_cast<double>(n) *
                                 std::log(static_cast<double>(x_min) - 0.5));
    const auto est = solve_alpha(n, log_sum, x_min, start);
    const double ks = ks_on_index(index, i, x_min, est.alpha);
    if (!best || ks < best->ks) {
      best = ScanResult{x_min, est.alpha, est.log_likelihood, ks, n};
    }
  }
  return best;
}

std::optional<ScanResult> fit_at(const TailIndex& index, Count x_min) {
  const std::size_t i = index.first_at_least(x_min);
  if (i >= index.size()) return std::nullopt;
  if (index.size() - i < 2) return std::nullopt;
  const std::size_t n = index.suffix_count[i];
  const double log_sum = index.suffix_log_sum[i];
  const double start =
      1.0 + static_cast<double>(n) /
                (log_sum - static_cast<double>(n) *
                               std::log(static_cast<double>(x_min) - 0.5));
  const auto est = solve_alpha(n, log_sum, x_min, start);
  const double ks = ks_on_index(index, i, x_min, est.alpha);
  return ScanResult{x_min, est.alpha, est.log_likelihood, ks, n};
}

std::optional<ScanResult> refit(std::span<const Count> sorted,
                                std::size_t min_tail,
                                std::optional<Count> fixed_x_min) {
  const TailIndex index(sorted);
  if (fixed_x_min) return fit_at(index, *fixed_x_min);
  return scan_x_min(index, min_tail);
}

}  // namespace detail

double approximate_alpha(const CitationSample& sample, Count x_min) {
  if (x_min == 0) throw Error("x_min must be positive");
  const auto tail = sample.tail(x_min);
  if (tail.empty()) throw Error("empty tail");
  double s = 0.0;
  const double shifted = static_cast<double>(x_min) - 0.5;
  for (auto x : tail) s += std::log(static_cast<double>(x) / shifted);
  return 1.0 + static_cast<double>(tail.size()) / s;
}

AlphaEstimate fit_alpha(const CitationSample& sample, Count x_min) {
  if (x_min == 0) throw Error("x_min must be positive");
  const auto tail = sample.tail(x_min);
  if (tail.empty()) throw Error("empty tail");
  if (tail.front() == tail.back()) throw Error("degenerate tail");
  double log_sum = 0.0;
  for (auto x : tail) log_sum += std::log(static_cast<double>(x));
  return detail::solve_alpha(tail.size(), log_sum, x_min,
                             approximate_alpha(sample, x_min));
}

double ks_distance(const CitationSample& sample, const DiscretePowerLaw& model) {
  const detail::TailIndex index(sample.counts());
  const std::size_t begin = index.first_at_least(model.x_min());
  if (begin >= index.size()) throw Error("empty tail");
  return detail::ks_on_index(index, begin, model.x_min(), model.alpha());
}

namespace {

double sample_sd(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

}  // namespace

PowerLawFit fit_power_law(const CitationSample& sample,
                          const FitOptions& options) {
  const detail::TailIndex index(sample.counts());
  std::optional<detail::ScanResult> best;
  if (options.fixed_x_min) {
    const Count x_min = *options.fixed_x_min;
    if (x_min == 0) throw Error("x_min must be positive");
    const std::size_t i = index.first_at_least(x_min);
    if (i >= index.size()) throw Error("empty tail");
    if (index.size() - i < 2) throw Error("degenerate tail");
    best = detail::fit_at(index, x_min);
  } else {
    best = detail::scan_x_min(index, options.min_tail);
    if (!best) throw Error("insufficient tail");
  }

  PowerLawFit fit;
  fit.label = sample.label();
  fit.x_min = best->x_min;
  fit.alpha = best->alpha;
  fit.n_tail = best->n_tail;
  fit.n_total = sample.size();
  fit.ks = best->ks;
  fit.log_likelihood = best->log_likelihood;
  fit.seed = options.seed;
  fit.min_tail = options.min_tail;
  fit.x_min_fixed = options.fixed_x_min.has_value();
  fit.bootstrap_reps = options.bootstrap_reps;

  if (options.bootstrap_reps == 0) return fit;

  const std::size_t reps = options.bootstrap_reps;
  const auto counts = sample.counts();
  std::vector<std::optional<detail::ScanResult>> results(reps);
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  parallel_for(reps, options.threads, [&](std::size_t r) {
    Rng rng(derive_seed(options.seed, r));
    std::vector<Count> resample(counts.size());
    for (auto& x : resample) x = counts[rng.below(counts.size())];
    std::sort(resample.begin(), resample.end());
    try {
      results[r] = detail::refit(resample, options.min_tail, options.fixed_x_min);
    } catch (const Error&) {
      results[r].reset();
    }
    const std::size_t finished = ++done;
    if (options.progress) {
      std::lock_guard lock(progress_mutex);
      options.progress(finished, reps);
    }
  });

  std::vector<double> alphas, x_mins;
  for (const auto& r : results) {
    if (!r) {
      ++fit.bootstrap_failures;
      continue;
    }
    alphas.push_back(r->alpha);
    x_mins.push_back(static_cast<double>(r->x_min));
  }
  fit.alpha_sd = sample_sd(alphas);
  fit.x_min_sd = sample_sd(x_mins);
  return fit;
}

PowerLawSampler::PowerLawSampler(const DiscretePowerLaw& model,
                                 std::size_t table_size)
    : model_(model) {
  const double a = model.alpha();
  const double z0 = hurwitz_zeta(a, static_cast<double>(model.x_min()));
  survival_.reserve(table_size + 1);
  double z = z0;
  for (std::size_t i = 0; i <= table_size; ++i) {
    const double x = static_cast<double>(model.x_min() + i);
    if (i % 256 == 0) z = hurwitz_zeta(a, x);
    survival_.push_back(z / z0);
    z -= std::exp(-a * std::log(x));
  }
}

Count PowerLawSampler::resolve_tail(double survival) const {
  // Continuous inversion gives a starting guess; exact survival values
  // settle the integer.
  const double a = model_.alpha();
  const double shifted = static_cast<double>(model_.x_min()) - 0.5;
  constexpr double kCap = 0x1.0p62;
  double guess = shifted * std::pow(survival, -1.0 / (a - 1.0)) + 0.5;
  const Count floor_x = model_.x_min() + survival_.size() - 1;
  Count x = static_cast<Count>(std::clamp(std::floor(guess),
                                          static_cast<double>(floor_x), kCap));
  // Invariant sought: ccdf(x) >= survival > ccdf(x + 1).
  Count lo, hi;  // ccdf(lo) >= survival, ccdf(hi) < survival
  if (model_.ccdf(x) >= survival) {
    lo = x;
    Count step = 1;
    hi = x + step;
    while (model_.ccdf(hi) >= survival) {
      lo = hi;
      step *= 2;
      if (static_cast<double>(hi) + static_cast<double>(step) > kCap) return lo;
      hi = lo + step;
    }
  } else {
    hi = x;
    Count step = 1;
    lo = hi > floor_x + step ? hi - step : floor_x;
    while (lo > floor_x && model_.ccdf(lo) < survival) {
      hi = lo;
      step *= 2;
      lo = hi > floor_x + step ? hi - step : floor_x;
    }
  }
  while (hi - lo > 1) {
    const Count mid = lo + (hi - lo) / 2;
    if (model_.ccdf(mid) >= survival) lo = mid; else hi = mid;
  }
  return lo;
}

Count PowerLawSampler::operator()(Rng& rng) const {
  const double u = rng.uniform();
  if (u <= survival_.back()) return resolve_tail(u);
  // First index whose survival drops below u; the draw is the value before.
  auto it = std::upper_bound(survival_.begin(), survival_.end(), u,
                             [](double value, double s) { return value > s; });
  const auto idx = static_cast<Count>(it - survival_.begin());
  return model_.x_min() + idx - 1;
}

CitationSample sample_power_law(const DiscretePowerLaw& model, std::size_t n,
                                std::uint64_t seed, unsigned threads) {
  if (n == 0) throw Error("sample size must be positive");
  const PowerLawSampler sampler(model);
  std::vector<Count> out(n);
  constexpr std::size_t kChunk = 65536;
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  parallel_for(chunks, threads, [&](std::size_t c) {
    Rng rng(derive_seed(seed, c));
    const std::size_t end = std::min(n, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) out[i] = sampler(rng);
  });
  return CitationSample("powerlaw", std::move(out));
}

std::vector<CcdfPoint> ccdf_points(const CitationSample& sample,
                                   const PowerLawFit& fit) {
  const detail::TailIndex index(sample.counts());
  const std::size_t begin = index.first_at_least(fit.x_min);
  const auto model = fit.model();
  std::vector<CcdfPoint> out;
  if (begin >= index.size()) return out;
  const double n = static_cast<double>(index.suffix_count[begin]);
  for (std::size_t j = begin; j < index.size(); ++j) {
    out.push_back({index.values[j],
                   static_cast<double>(index.suffix_count[j]) / n,
                   model.ccdf(index.values[j])});
  }
  return out;
}

}  // namespace citescale
