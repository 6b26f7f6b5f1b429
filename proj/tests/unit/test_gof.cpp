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

#include <cmath>
#include <limits>

#include "doctest.h"

#include "citescale/error.hpp"
#include "citescale/gof.hpp"
#include "citescale/random.hpp"

using namespace citescale;

namespace {

PowerLawFit quick_fit(const CitationSample& s, std::size_t min_tail = 50) {
  FitOptions opt;
  opt.bootstrap_reps = 0;
  opt.min_tail = min_tail;
  return fit_power_law(s, opt);
}

}  // namespace

TEST_SUITE("gof") {

TEST_CASE("required simulations") {
  CHECK(required_sims(0.01) == 2500);
  CHECK(required_sims(0.05) == 100);
  CHECK(required_sims(0.03) == 278);
  CHECK(required_sims(0.5) == 1);
  CHECK_THROWS_AS(required_sims(0.0), Error);
  CHECK_THROWS_AS(required_sims(-0.1), Error);
}

TEST_CASE("p-value counting") {
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<double> null{0.01, 0.05, 0.05, 0.2, inf, 0.03, 0.02, 0.01, 0.04, 0.06};
  const auto r = gof_from_null(0.05, null, 3);
  CHECK(r.n_sims == 10);
  CHECK(r.n_exceeding == 5);  // ties count, and the failed refit counts
  CHECK(r.n_failed == 1);
  CHECK(r.p_value == 0.5);
  CHECK_FALSE(r.ruled_out);
  CHECK(r.seed == 3);

  const auto edge = gof_from_null(0.199, null, 0);
  CHECK(edge.n_exceeding == 2);
  CHECK(edge.p_value == doctest::Approx(0.2));
  const auto at_threshold = gof_from_null(0.2, null, 0);
  CHECK(at_threshold.p_value == doctest::Approx(0.2));
  const std::vector<double> ten(10, 0.0);
  std::vector<double> one_hit = ten;
  one_hit[4] = 1.0;
  CHECK(gof_from_null(0.5, one_hit, 0).ruled_out);  // p = 0.10 exactly
  CHECK(gof_from_null(0.5, one_hit, 0).p_value == 0.1);
}

TEST_CASE("power-law data is plausible, geometric data is not") {
  const auto pl = sample_power_law(DiscretePowerLaw(1, 2.5), 2000, 21);
  const auto fit = quick_fit(pl);
  const auto r = gof_test(pl, fit, 200, 4);
  CHECK(r.p_value > 0.1);
  CHECK(r.ks_empirical == fit.ks);
  CHECK(r.n_sims == 200);

  Rng rng(2);
  std::vector<Count> geo;
  for (int i = 0; i < 3000; ++i) geo.push_back(1 + static_cast<Count>(-std::log(rng.uniform()) * 30));
  const CitationSample g("geo", geo);
  FitOptions opt;
  opt.bootstrap_reps = 0;
  opt.fixed_x_min = 1;
  const auto gfit = fit_power_law(g, opt);
  const auto gr = gof_test(g, gfit, 100, 4);
  CHECK(gr.ruled_out);
  CHECK(gr.p_value <= 0.05);
}

TEST_CASE("goodness of fit is deterministic across thread counts") {
  const auto s = sample_power_law(DiscretePowerLaw(3, 2.2), 1500, 5);
  const auto fit = quick_fit(s);
  const auto a = null_ks_distribution(s, fit, 64, 99, {1, {}});
  const auto b = null_ks_distribution(s, fit, 64, 99, {4, {}});
  CHECK(a == b);
  CHECK(a != null_ks_distribution(s, fit, 64, 100, {1, {}}));
  for (double ks : a) CHECK((ks >= 0.0 && ks < 1.0));
}

TEST_CASE("null refits respect a fixed x_min") {
  const auto s = sample_power_law(DiscretePowerLaw(1, 2.0), 800, 6);
  FitOptions opt;
  opt.bootstrap_reps = 0;
  opt.fixed_x_min = 4;
  const auto fit = fit_power_law(s, opt);
  const auto r = gof_test(s, fit, 50, 1);
  CHECK(r.n_failed == 0);
  CHECK(r.p_value > 0.0);
}

TEST_CASE("stale fits are rejected") {
  const auto s = sample_power_law(DiscretePowerLaw(1, 2.5), 500, 1);
  auto fit = quick_fit(s);
  fit.alpha += 0.1;
  CHECK_THROWS_WITH_AS(gof_test(s, fit, 10, 1), "stale fit", Error);
  auto other = quick_fit(s);
  other.n_total += 1;
  CHECK_THROWS_AS(gof_test(s, other, 10, 1), Error);
  CHECK_THROWS_AS(gof_test(s, quick_fit(s), 0, 1), Error);
}

TEST_CASE("progress reports every replicate") {
  const auto s = sample_power_law(DiscretePowerLaw(1, 2.5), 300, 1);
  std::size_t calls = 0;
  GofOptions opt;
  opt.threads = 2;
  opt.progress = [&](std::size_t, std::size_t total) {
    ++calls;
    CHECK(total == 25);
  };
  gof_test(s, quick_fit(s), 25, 1, opt);
  CHECK(calls == 25);
}

}  // TEST_SUITE
