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

#include "citescale/altmodels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>

#include "citescale/error.hpp"
#include "citescale/parallel.hpp"
#include "citescale/random.hpp"
#include "citescale/special_functions.hpp"
#include "tail_index.hpp"

namespace citescale {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::size_t kSweepCap = 10000;
constexpr double kLineTol = 1e-9;
constexpr double kSweepTol = 1e-7;

// ---------------------------------------------------------------------------
// Bounded 1-D maximization: expand a bracket from t0 by doubling, then golden
// section. Returns the best point seen.

struct LinePoint {
  double t;
  double value;
};

template <typename Phi>
LinePoint line_maximize(Phi&& phi, double t0, double f0, double step,
                        double lo, double hi) {
  auto eval = [&](double t) {
    const double v = phi(t);
    return std::isnan(v) ? kNegInf : v;
  };
  LinePoint best{t0, f0};
  auto note = [&](double t, double v) {
    if (v > best.value) best = {t, v};
  };

  double a, b = t0, c;
  double fb = f0;
  double h = std::max(step, kLineTol);

  c = std::min(t0 + h, hi);
  double fc = c > b ? eval(c) : kNegInf;
  note(c, fc);
  if (fc > fb) {
    a = b;
    for (;;) {
      a = b;
      b = c;
      fb = fc;
      h *= 2.0;
      c = std::min(b + h, hi);
      if (c <= b) return best;  // maximum sits on the upper bound
      fc = eval(c);
      note(c, fc);
      if (fc <= fb) break;
    }
  } else {
    a = std::max(t0 - h, lo);
    double fa = a < b ? eval(a) : kNegInf;
    note(a, fa);
    if (fa > fb) {
      for (;;) {
        c = b;
        b = a;
        fb = fa;
        h *= 2.0;
        a = std::max(b - h, lo);
        if (a >= b) return best;  // maximum sits on the lower bound
        fa = eval(a);
        note(a, fa);
        if (fa <= fb) break;
      }
    }
  }

  // Golden section on [a, c].
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = c - kInvPhi * (c - a);
  double x2 = a + kInvPhi * (c - a);
  double f1 = eval(x1), f2 = eval(x2);
  note(x1, f1);
  note(x2, f2);
  while (c - a > kLineTol) {
    if (f1 >= f2) {
      c = x2;
      x2 = x1;
      f2 = f1;
      x1 = c - kInvPhi * (c - a);
      f1 = eval(x1);
      note(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (c - a);
      f2 = eval(x2);
      note(x2, f2);
    }
  }
  return best;
}

// Coordinate ascent over a box, with a pattern move along each sweep's net
// displacement to get through correlated ridges.
struct Maximum2 {
  std::array<double, 2> x;
  double value;
  std::size_t sweeps;
};

template <typename F>
Maximum2 coordinate_ascent(F&& f, std::array<double, 2> x,
                           std::array<double, 2> lo, std::array<double, 2> hi,
                           std::array<double, 2> step, const char* what) {
  auto eval = [&](const std::array<double, 2>& p) {
    const double v = f(p);
    return std::isnan(v) ? kNegInf : v;
  };
  double fx = eval(x);
  if (!std::isfinite(fx)) {
    throw Error(std::string(what) + ": non-finite likelihood at start");
  }
  for (std::size_t sweep = 1; sweep <= kSweepCap; ++sweep) {
    const auto start = x;
    for (int k = 0; k < 2; ++k) {
      auto phi = [&](double t) {
        auto p = x;
        p[k] = t;
        return eval(p);
      };
      const auto r = line_maximize(phi, x[k], fx, step[k], lo[k], hi[k]);
      if (r.value > fx) {
        step[k] = std::max(std::abs(r.t - x[k]), 1e-6 * (std::abs(x[k]) + 1e-3));
        x[k] = r.t;
        fx = r.value;
      } else {
        step[k] = std::max(step[k] * 0.5, 1e-8);
      }
    }
    const std::array<double, 2> d = {x[0] - start[0], x[1] - start[1]};
    if (std::abs(d[0]) <= kSweepTol * std::max(1.0, std::abs(x[0])) &&
        std::abs(d[1]) <= kSweepTol * std::max(1.0, std::abs(x[1]))) {
      return {x, fx, sweep};
    }
    // Largest t keeping x + t d inside the box.
    double t_max = 64.0;
    for (int k = 0; k < 2; ++k) {
      if (d[k] > 0) t_max = std::min(t_max, (hi[k] - x[k]) / d[k]);
      if (d[k] < 0) t_max = std::min(t_max, (lo[k] - x[k]) / d[k]);
    }
    if (t_max > 0.0) {
      auto phi = [&](double t) {
        return eval({x[0] + t * d[0], x[1] + t * d[1]});
      };
      const auto r = line_maximize(phi, 0.0, fx, 1.0, 0.0, t_max);
      if (r.value > fx && r.t > 0.0) {
        x = {x[0] + r.t * d[0], x[1] + r.t * d[1]};
        fx = r.value;
      }
    }
  }
  std::ostringstream os;
  os << what << ": no convergence after " << kSweepCap << " sweeps (at "
     << x[0] << ", " << x[1] << ", log-likelihood " << fx << ")";
  throw Error(os.str());
}

// ---------------------------------------------------------------------------
// Per-family log pmfs.

double lognormal_log_pmf(double mu, double sigma, Count x_min, Count x) {
  if (x < x_min) return kNegInf;
  const double xd = static_cast<double>(x);
  const double z_lo = (std::log(xd - 0.5) - mu) / sigma;
  const double z_hi = (std::log(xd + 0.5) - mu) / sigma;
  const double z0 = (std::log(static_cast<double>(x_min) - 0.5) - mu) / sigma;
  return log_normal_interval(z_lo, z_hi) - log_normal_upper_tail(z0);
}

double exponential_log_pmf(double rate, Count x_min, Count x) {
  if (x < x_min) return kNegInf;
  return -rate * static_cast<double>(x - x_min) + std::log(-std::expm1(-rate));
}

// Normalizer of x^-alpha e^(-lambda x) over x >= x_min: direct summation
// with a geometric remainder bound, or Euler-Maclaurin past a cut point
// (integral by Gauss-Legendre panels in log x) when decay is slow.
class CutoffNormalizer {
 public:
  explicit CutoffNormalizer(Count x_min) : x_min_(x_min) {
    log_x_.resize(kDirect);
    for (std::size_t i = 0; i < kDirect; ++i) {
      log_x_[i] = std::log(static_cast<double>(x_min + i));
    }
  }

  double operator()(double alpha, double lambda) const {
    if (lambda == 0.0) {
      if (!(alpha > 1.0)) return std::numeric_limits<double>::infinity();
      return std::log(hurwitz_zeta(alpha, static_cast<double>(x_min_)));
    }
    const double x0 = static_cast<double>(x_min_);
    const double lf0 = -alpha * log_x_[0] - lambda * x0;
    const double ratio = std::exp(-lambda);
    const double geometric = ratio / (-std::expm1(-lambda));
    double sum = 0.0;
    for (std::size_t i = 0; i < kDirect; ++i) {
      const double t = std::exp(-alpha * (log_x_[i] - log_x_[0]) -
                                lambda * static_cast<double>(i));
      sum += t;
      if (t * geometric < 1e-17 * sum) return lf0 + std::log(sum);
    }
    // Euler-Maclaurin remainder from M = x_min + kDirect.
    const double m = x0 + static_cast<double>(kDirect);
    const double lm = std::log(m);
    const double fm = std::exp(-alpha * lm - lambda * m - lf0);
    const double g1 = -alpha / m - lambda;
    const double g2 = alpha / (m * m);
    const double g3 = -2.0 * alpha / (m * m * m);
    const double f1 = fm * g1;
    const double f3 = fm * (g1 * g1 * g1 + 3.0 * g1 * g2 + g3);
    double tail = 0.5 * fm - f1 / 12.0 + f3 / 720.0;

    auto integrand = [&](double u) {
      return std::exp((1.0 - alpha) * u - lambda * std::exp(u) - lf0);
    };
    double u = lm;
    double integral = 0.0;
    for (int panel = 0; panel < 4000; ++panel) {
      const double u1 = u + 0.5;
      integral += boost::math::quadrature::gauss<double, 20>::integrate(
          integrand, u, u1);
      u = u1;
      const bool decaying = lambda * std::exp(u) > std::abs(1.0 - alpha) + 1.0;
      if (decaying && integrand(u) < 1e-18 * (sum + integral)) break;
    }
    tail += integral;
    return lf0 + std::log(sum + tail);
  }

 private:
  static constexpr std::size_t kDirect = 2000;
  Count x_min_;
  std::vector<double> log_x_;
};

struct TailData {
  Count x_min = 1;
  std::vector<Count> values;
  std::vector<double> weights;  // multiplicities
  std::size_t n = 0;
  double sum_log = 0.0;
  double sum_x = 0.0;
  double mean_log = 0.0;
  double sd_log = 0.0;
};

TailData tail_data(const CitationSample& sample, Count x_min) {
  if (x_min == 0) throw Error("x_min must be positive");
  const detail::TailIndex index(sample.counts());
  const std::size_t begin = index.first_at_least(x_min);
  if (begin >= index.size()) throw Error("empty tail");
  if (index.size() - begin < 2) throw Error("degenerate tail");
  TailData t;
  t.x_min = x_min;
  for (std::size_t j = begin; j < index.size(); ++j) {
    t.values.push_back(index.values[j]);
    t.weights.push_back(static_cast<double>(index.counts[j]));
    t.n += index.counts[j];
    const double lx = std::log(static_cast<double>(index.values[j]));
    t.sum_log += t.weights.back() * lx;
    t.sum_x += t.weights.back() * static_cast<double>(index.values[j]);
  }
  t.mean_log = t.sum_log / static_cast<double>(t.n);
  double ss = 0.0;
  for (std::size_t j = 0; j < t.values.size(); ++j) {
    const double d = std::log(static_cast<double>(t.values[j])) - t.mean_log;
    ss += t.weights[j] * d * d;
  }
  t.sd_log = std::sqrt(ss / static_cast<double>(t.n));
  return t;
}

AltFit fit_exponential(const TailData& t) {
  // Discretized exponential on x >= x_min is geometric in x - x_min; the
  // MLE is closed-form in the mean excess.
  const double excess =
      t.sum_x / static_cast<double>(t.n) - static_cast<double>(t.x_min);
  AltFit fit;
  fit.family = Family::exponential;
  fit.x_min = t.x_min;
  fit.rate = std::log1p(1.0 / excess);
  fit.n_tail = t.n;
  fit.log_likelihood = -fit.rate * (t.sum_x - static_cast<double>(t.n) *
                                                  static_cast<double>(t.x_min)) +
                       static_cast<double>(t.n) * std::log(-std::expm1(-fit.rate));
  return fit;
}

AltFit fit_lognormal(const TailData& t) {
  std::vector<double> log_lo(t.values.size()), log_hi(t.values.size());
  for (std::size_t j = 0; j < t.values.size(); ++j) {
    const double x = static_cast<double>(t.values[j]);
    log_lo[j] = std::log(x - 0.5);
    log_hi[j] = std::log(x + 0.5);
  }
  const double log_start = std::log(static_cast<double>(t.x_min) - 0.5);
  const double n = static_cast<double>(t.n);
  auto loglik = [&](const std::array<double, 2>& p) {
    const double mu = p[0], sigma = p[1];
    double ll = -n * log_normal_upper_tail((log_start - mu) / sigma);
    for (std::size_t j = 0; j < log_lo.size(); ++j) {
      ll += t.weights[j] *
            log_normal_interval((log_lo[j] - mu) / sigma, (log_hi[j] - mu) / sigma);
    }
    return ll;
  };
  const double sigma0 = std::max(t.sd_log, 0.1);
  const double max_log = std::log(static_cast<double>(t.values.back()));
  const auto m = coordinate_ascent(loglik, {t.mean_log, sigma0},
                                   {-500.0, 1e-4}, {max_log + 50.0, 500.0},
                                   {0.1 * sigma0, 0.1 * sigma0},
                                   "lognormal fit");
  AltFit fit;
  fit.family = Family::lognormal;
  fit.x_min = t.x_min;
  fit.mu = m.x[0];
  fit.sigma = m.x[1];
  fit.log_likelihood = m.value;
  fit.n_tail = t.n;
  fit.sweeps = m.sweeps;
  return fit;
}

AltFit fit_cutoff(const TailData& t) {
  const CutoffNormalizer norm(t.x_min);
  const double n = static_cast<double>(t.n);
  auto loglik = [&](const std::array<double, 2>& p) {
    const double alpha = p[0], lambda = p[1];
    if (lambda == 0.0 && alpha <= 1.0) return kNegInf;
    return -alpha * t.sum_log - lambda * t.sum_x - n * norm(alpha, lambda);
  };
  // Start from the pure power law (lambda = 0) so the result can never fall
  // below it.
  double alpha0 = 1.5;
  try {
    const CitationSample tail("tail", [&] {
      std::vector<Count> v;
      for (std::size_t j = 0; j < t.values.size(); ++j) {
        v.insert(v.end(), static_cast<std::size_t>(t.weights[j]), t.values[j]);
      }
      return v;
    }());
    alpha0 = fit_alpha(tail, t.x_min).alpha;
  } catch (const Error&) {
  }
  const double mean_x = t.sum_x / n;
  const auto m = coordinate_ascent(loglik, {alpha0, 0.0}, {0.0, 0.0},
                                   {50.0, 50.0}, {0.1, 0.01 / mean_x},
                                   "power law with cutoff fit");
  AltFit fit;
  fit.family = Family::powerlaw_cutoff;
  fit.x_min = t.x_min;
  fit.alpha = m.x[0];
  fit.rate = m.x[1];
  fit.log_likelihood = m.value;
  fit.n_tail = t.n;
  fit.sweeps = m.sweeps;
  return fit;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::lognormal: return "lognormal";
    case Family::exponential: return "exponential";
    case Family::powerlaw_cutoff: return "powerlaw_cutoff";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "lognormal") return Family::lognormal;
  if (name == "exponential") return Family::exponential;
  if (name == "powerlaw_cutoff" || name == "cutoff") return Family::powerlaw_cutoff;
  throw Error("unknown family '" + std::string(name) + "'");
}

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::power_law_favored: return "power_law_favored";
    case Verdict::alternative_favored: return "alternative_favored";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

double cutoff_log_normalizer(double alpha, double lambda, Count x_min) {
  if (x_min == 0) throw Error("x_min must be positive");
  if (alpha < 0.0 || lambda < 0.0) throw Error("cutoff parameters must be nonnegative");
  if (lambda == 0.0 && alpha <= 1.0) throw Error("non-normalizable");
  return CutoffNormalizer(x_min)(alpha, lambda);
}

double AltFit::log_pmf(Count x) const {
  switch (family) {
    case Family::lognormal: return lognormal_log_pmf(mu, sigma, x_min, x);
    case Family::exponential: return exponential_log_pmf(rate, x_min, x);
    case Family::powerlaw_cutoff: {
      if (x < x_min) return kNegInf;
      return -alpha * std::log(static_cast<double>(x)) -
             rate * static_cast<double>(x) -
             cutoff_log_normalizer(alpha, rate, x_min);
    }
  }
  return kNegInf;
}

AltFit fit_alternative(const CitationSample& sample, Count x_min, Family family) {
  const auto t = tail_data(sample, x_min);
  switch (family) {
    case Family::exponential: return fit_exponential(t);
    case Family::lognormal: return fit_lognormal(t);
    case Family::powerlaw_cutoff: return fit_cutoff(t);
  }
  throw Error("unknown family");
}

namespace {

// Draws for one fitted family; built once per sample_alternative call.
class AltSampler {
 public:
  explicit AltSampler(const AltFit& fit) : fit_(fit) {
    switch (fit.family) {
      case Family::exponential:
        if (!(fit.rate > 0.0)) throw Error("exponential rate must be positive");
        break;
      case Family::lognormal: {
        if (!(fit.sigma > 0.0)) throw Error("lognormal sigma must be positive");
        const double z0 =
            (std::log(static_cast<double>(fit.x_min) - 0.5) - fit.mu) / fit.sigma;
        start_tail_ = std::exp(log_normal_upper_tail(z0));
        if (!(start_tail_ > 1e-300)) {
          throw Error("lognormal parameters put no mass above x_min");
        }
        break;
      }
      case Family::powerlaw_cutoff:
        init_cutoff();
        break;
    }
  }

  Count operator()(Rng& rng) const {
    switch (fit_.family) {
      case Family::exponential: {
        const double k = std::floor(-std::log(rng.uniform()) / fit_.rate);
        return fit_.x_min + static_cast<Count>(std::min(k, 0x1.0p62));
      }
      case Family::lognormal: {
        const double z = normal_upper_tail_inverse(rng.uniform() * start_tail_);
        const double y = std::exp(fit_.mu + fit_.sigma * z);
        const double x = std::floor(std::min(y, 0x1.0p62) + 0.5);
        return std::max<Count>(fit_.x_min, static_cast<Count>(x));
      }
      case Family::powerlaw_cutoff: {
        if (rejection_) {
          for (;;) {
            const Count x = (*rejection_)(rng);
            const double keep =
                std::exp(-fit_.rate * static_cast<double>(x - fit_.x_min));
            if (rng.uniform() < keep) return x;
          }
        }
        const double u = rng.uniform();
        auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
        if (it == cumulative_.end()) --it;
        return fit_.x_min + static_cast<Count>(it - cumulative_.begin());
      }
    }
    return fit_.x_min;
  }

 private:
  void init_cutoff() {
    const double alpha = fit_.alpha, lambda = fit_.rate;
    if (alpha < 0.0 || lambda < 0.0) throw Error("cutoff parameters must be nonnegative");
    if (lambda == 0.0 && alpha <= 1.0) throw Error("non-normalizable");
    const double x0 = static_cast<double>(fit_.x_min);
    const double log_z = cutoff_log_normalizer(alpha, lambda, fit_.x_min);
    if (alpha > 1.0) {
      // Thinning a pure power law by e^(-lambda (x - x_min)) is exact; use
      // it when the acceptance rate is reasonable.
      const double acceptance =
          std::exp(log_z + lambda * x0 - std::log(hurwitz_zeta(alpha, x0)));
      if (acceptance >= 0.05) {
        rejection_.emplace(DiscretePowerLaw(fit_.x_min, alpha));
        return;
      }
    }
    constexpr std::size_t kMaxTable = 20'000'000;
    const double geometric = std::exp(-lambda) / (-std::expm1(-lambda));
    double cum = 0.0;
    for (Count x = fit_.x_min;; ++x) {
      const double xd = static_cast<double>(x);
      const double p = std::exp(-alpha * std::log(xd) - lambda * xd - log_z);
      cum += p;
      cumulative_.push_back(cum);
      if (p * geometric < 1e-17) break;
      if (cumulative_.size() > kMaxTable) {
        throw Error("cutoff sampler: support too long for these parameters");
      }
    }
  }

  AltFit fit_;
  double start_tail_ = 1.0;
  std::optional<PowerLawSampler> rejection_;
  std::vector<double> cumulative_;
};

}  // namespace

CitationSample sample_alternative(const AltFit& fit, std::size_t n,
                                  std::uint64_t seed, unsigned threads) {
  if (n == 0) throw Error("sample size must be positive");
  if (fit.x_min == 0) throw Error("x_min must be positive");
  const AltSampler sampler(fit);
  std::vector<Count> out(n);
  constexpr std::size_t kChunk = 65536;
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  parallel_for(chunks, threads, [&](std::size_t c) {
    Rng rng(derive_seed(seed, c));
    const std::size_t end = std::min(n, (c + 1) * kChunk);
    for (std::size_t i = c * kChunk; i < end; ++i) out[i] = sampler(rng);
  });
  return CitationSample(std::string(family_name(fit.family)), std::move(out));
}

LikelihoodRatio vuong_test(std::span<const double> log_first,
                           std::span<const double> log_second) {
  if (log_first.size() != log_second.size() || log_first.empty()) {
    throw Error("vuong_test needs equal-length, nonempty inputs");
  }
  const std::size_t n = log_first.size();
  LikelihoodRatio out;
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = log_first[i] - log_second[i];
    out.lr += d[i];
  }
  const double mean = out.lr / static_cast<double>(n);
  double ss = 0.0;
  for (double v : d) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n));
  if (!(sd > 0.0)) {
    out.zero_variance = true;
    out.normalized = 0.0;
    out.p = 1.0;
    return out;
  }
  out.normalized = out.lr / (std::sqrt(static_cast<double>(n)) * sd);
  out.p = normal_two_sided_p(out.normalized);
  return out;
}

Verdict verdict_for(double lr, double p) {
  if (lr == 0.0 || !(p <= kComparisonThreshold)) return Verdict::inconclusive;
  return lr > 0.0 ? Verdict::power_law_favored : Verdict::alternative_favored;
}

std::vector<ModelComparison> compare_models(const CitationSample& sample,
                                            const PowerLawFit& pl,
                                            std::span<const Family> alternatives) {
  const auto tail = sample.tail(pl.x_min);
  if (tail.empty()) throw Error("empty tail");
  const auto model = pl.model();
  std::vector<double> log_pl(tail.size());
  for (std::size_t i = 0; i < tail.size(); ++i) log_pl[i] = model.log_pmf(tail[i]);

  std::vector<ModelComparison> out;
  for (const Family family : alternatives) {
    ModelComparison cmp;
    cmp.alternative = family;
    cmp.nested = family == Family::powerlaw_cutoff;
    cmp.fit = fit_alternative(sample, pl.x_min, family);

    auto pointwise = [&](const AltFit& fit) {
      std::vector<double> v(tail.size());
      if (fit.family == Family::powerlaw_cutoff) {
        const double log_z = cutoff_log_normalizer(fit.alpha, fit.rate, fit.x_min);
        for (std::size_t i = 0; i < tail.size(); ++i) {
          const double x = static_cast<double>(tail[i]);
          v[i] = -fit.alpha * std::log(x) - fit.rate * x - log_z;
        }
      } else {
        for (std::size_t i = 0; i < tail.size(); ++i) v[i] = fit.log_pmf(tail[i]);
      }
      return v;
    };
    auto log_alt = pointwise(cmp.fit);
    auto ratio = vuong_test(log_pl, log_alt);

    if (cmp.nested &&
        (ratio.lr > 0.0 || cmp.fit.log_likelihood < pl.log_likelihood)) {
      // The power law itself (lambda = 0) belongs to the cutoff family, so
      // ending below it only means the search stopped short or rounding
      // noise; the maximum is then the power law.
      cmp.fit.alpha = pl.alpha;
      cmp.fit.rate = 0.0;
      cmp.fit.log_likelihood = pl.log_likelihood;
      ratio = vuong_test(log_pl, log_pl);
    }

    cmp.lr = ratio.lr;
    cmp.normalized_lr = ratio.normalized;
    if (cmp.nested) {
      cmp.p = chi_square1_upper_tail(2.0 * std::abs(ratio.lr));
    } else {
      cmp.p = ratio.p;
      if (ratio.zero_variance) {
        cmp.diagnostic = "zero variance in pointwise log-likelihood differences";
      }
    }
    cmp.verdict = ratio.zero_variance && !cmp.nested
                      ? Verdict::inconclusive
                      : verdict_for(cmp.lr, cmp.p);
    out.push_back(std::move(cmp));
  }
  return out;
}

}  // namespace citescale
