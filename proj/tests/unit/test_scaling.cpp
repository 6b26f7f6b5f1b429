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

#include "doctest.h"

#include "citescale/error.hpp"
#include "citescale/random.hpp"
#include "citescale/scaling.hpp"

using namespace citescale;

namespace {

std::vector<ScalingPoint> five_points() {
  return {{"a", 10, 25}, {"b", 20, 60}, {"c", 40, 130}, {"d", 80, 260}, {"e", 160, 530}};
}

}  // namespace

TEST_SUITE("scaling") {

TEST_CASE("least squares on a small fixture matches reference values") {
  // Reference values from an independent OLS implementation.
  const auto fit = scaling_fit(five_points());
  CHECK(fit.exponent == doctest::Approx(1.0927461936771619).epsilon(1e-13));
  CHECK(fit.intercept_log == doctest::Approx(0.3352118082207264).epsilon(1e-13));
  CHECK(fit.exponent_se == doctest::Approx(0.030450342566784052).epsilon(1e-12));
  CHECK(fit.r2 == doctest::Approx(0.9976758909966879).epsilon(1e-13));
  CHECK(fit.t_stat == doctest::Approx(35.88617078052695).epsilon(1e-12));
  CHECK(fit.p_value == doctest::Approx(4.7585723817505796e-05).epsilon(1e-8));
  CHECK(fit.df == 3);
  CHECK(fit.n_points == 5);
  CHECK(fit.k == doctest::Approx(std::pow(10.0, 0.3352118082207264)));
}

TEST_CASE("noiseless power relation is recovered exactly in both bases") {
  std::vector<ScalingPoint> pts;
  for (int i = 0; i < 33; ++i) {
    const double size = 50.0 * std::pow(1.17, i);
    pts.push_back({"s" + std::to_string(i), size, 2.5 * std::pow(size, 1.2)});
  }
  const auto f10 = scaling_fit(pts, LogBase::ten);
  const auto fe = scaling_fit(pts, LogBase::natural);
  CHECK(std::abs(f10.exponent - 1.2) < 1e-12);
  CHECK(std::abs(fe.exponent - f10.exponent) < 1e-12);
  CHECK(f10.r2 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(f10.k == doctest::Approx(2.5).epsilon(1e-10));
  CHECK(fe.k == doctest::Approx(2.5).epsilon(1e-10));
}

TEST_CASE("scaling errors") {
  auto pts = five_points();
  CHECK_THROWS_AS(scaling_fit(std::span(pts).first(2)), Error);
  pts[1].cbp = 0;
  CHECK_THROWS_AS(scaling_fit(pts), Error);
  std::vector<ScalingPoint> flat{{"a", 5, 1}, {"b", 5, 2}, {"c", 5, 3}};
  CHECK_THROWS_WITH_AS(scaling_fit(flat), "no size variation", Error);
}

TEST_CASE("Matthew factor, expected performance and indicator") {
  CHECK(std::round(matthew_factor(1.20) * 100) / 100 == 2.30);
  CHECK(std::round(matthew_factor(0.85) * 100) / 100 == 1.80);
  CHECK(matthew_factor(1.0) == 2.0);
  ScalingFit fit;
  fit.exponent = 1.2;
  fit.k = 2.5;
  CHECK(expected_cbp(fit, 100.0) == doctest::Approx(627.971607877395).epsilon(1e-13));
  const auto f = scaling_fit(five_points());
  const ScalingPoint p{"x", 8, 22};
  CHECK(performance_indicator(p, f) == doctest::Approx(1.0480034848259074).epsilon(1e-12));
  const ScalingPoint on_curve{"y", 33, expected_cbp(f, 33)};
  CHECK(performance_indicator(on_curve, f) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("indicator is invariant to the log base") {
  const auto pts = five_points();
  const auto a = scaling_fit(pts, LogBase::ten);
  const auto b = scaling_fit(pts, LogBase::natural);
  for (const auto& p : pts) {
    CHECK(performance_indicator(p, a) == doctest::Approx(performance_indicator(p, b)).epsilon(1e-12));
  }
}

TEST_CASE("mode points exclude empty subfields") {
  std::vector<SubfieldAggregate> aggs{
      {"A", "F", 10, 6, 4, 50, 30, 20},
      {"B", "F", 8, 8, 0, 40, 40, 0},
      {"C", "F", 6, 3, 3, 12, 12, 0},
  };
  const auto overall = points_for_mode(aggs, ScalingMode::overall);
  CHECK(overall.points.size() == 3);
  CHECK(overall.excluded.empty());
  const auto single = points_for_mode(aggs, ScalingMode::single);
  REQUIRE(single.points.size() == 1);
  CHECK(single.points[0].subfield_id == "A");
  CHECK(single.points[0].size == 4);
  CHECK(single.points[0].cbp == 20);
  CHECK(single.excluded == std::vector<std::string>{"B", "C"});
  const auto collab = points_for_mode(aggs, ScalingMode::collaboration);
  CHECK(collab.points.size() == 3);
  CHECK(collab.points[2].cbp == 12);
}

TEST_CASE("mode names") {
  CHECK(mode_name(ScalingMode::collaboration) == "collaboration");
  CHECK(parse_mode("single") == ScalingMode::single);
  CHECK_THROWS_AS(parse_mode("solo"), Error);
}

TEST_CASE("exponent is scale-free: multiplying cbp by a constant only moves k") {
  Rng rng(5);
  std::vector<ScalingPoint> pts;
  for (int i = 0; i < 12; ++i) {
    const double size = 10 + 1000 * rng.uniform();
    pts.push_back({"p" + std::to_string(i), size, std::pow(size, 0.9) * (0.5 + rng.uniform())});
  }
  auto scaled = pts;
  for (auto& p : scaled) p.cbp *= 7.0;
  const auto a = scaling_fit(pts), b = scaling_fit(scaled);
  CHECK(a.exponent == doctest::Approx(b.exponent).epsilon(1e-12));
  CHECK(b.k / a.k == doctest::Approx(7.0).epsilon(1e-12));
  CHECK(a.r2 == doctest::Approx(b.r2).epsilon(1e-12));
}

}  // TEST_SUITE
