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
#include <numbers>

#include "doctest.h"

#include "citescale/error.hpp"
#include "citescale/random.hpp"
#include "citescale/special_functions.hpp"

using namespace citescale;

namespace {

// Reference values from arbitrary-precision evaluation.
struct ZetaCase {
  double s, q, value, d_ds;
};
constexpr ZetaCase kZeta[] = {
    {2.0, 1.0, 1.6449340668482264365, -0.9375482543158437537},
    {3.5, 10.0, 0.0014322106437178635209, -0.0038011418939247166013},
    {1.5, 1.0, 2.6123753486854883433, -3.9322397374311015107},
    {1.05, 1.0, 20.58084430203698483, -399.92767119173027718},
    {2.35, 7.0, 0.059004580231607650448, -0.15436489029176572949},
    {7.0, 1000.0, 1.6716724999930000183e-19, -1.1825281481003009553e-18},
    {150.0, 2.0, 7.0064923216240853546e-46, -4.8565303983486402946e-46},
};

}  // namespace

TEST_SUITE("special_functions") {

TEST_CASE("hurwitz zeta matches high-precision references") {
  for (const auto& c : kZeta) {
    CAPTURE(c.s);
    CAPTURE(c.q);
    const double v = hurwitz_zeta(c.s, c.q);
    CHECK(std::abs(v - c.value) <= 1e-13 * c.value);
    const auto vd = hurwitz_zeta_with_derivative(c.s, c.q);
    CHECK(vd.value == doctest::Approx(c.value).epsilon(1e-13));
    CHECK(std::abs(vd.d_ds - c.d_ds) <= 1e-11 * std::abs(c.d_ds));
  }
}

TEST_CASE("zeta(2, 1) is pi^2 / 6") {
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - std::numbers::pi * std::numbers::pi / 6) < 1e-14);
}

TEST_CASE("shift identity zeta(s, q + 1) = zeta(s, q) - q^-s") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const double s = 1.01 + 8.0 * rng.uniform();
    const double q = 1.0 + std::floor(500.0 * rng.uniform());
    const double lhs = hurwitz_zeta(s, q + 1);
    const double rhs = hurwitz_zeta(s, q) - std::pow(q, -s);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("zeta derivative agrees with a central difference") {
  for (double s : {1.2, 2.0, 3.3}) {
    for (double q : {1.0, 4.0, 37.0}) {
      const double h = 1e-5;
      const double fd = (hurwitz_zeta(s + h, q) - hurwitz_zeta(s - h, q)) / (2 * h);
      CHECK(hurwitz_zeta_with_derivative(s, q).d_ds == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("zeta rejects s <= 1") {
  CHECK_THROWS_WITH_AS(hurwitz_zeta(1.0, 1.0), "non-normalizable", Error);
  CHECK_THROWS_AS(hurwitz_zeta(0.5, 3.0), Error);
}

TEST_CASE("log normal upper tail across the whole range") {
  const std::pair<double, double> cases[] = {
      {-3, -0.0013508099647481937988}, {0, -0.69314718055994530942},
      {1.5, -2.705944400823889807},    {8, -35.013437159914549896},
      {37, -689.0305855768905936},     {40, -804.60844201375378817},
      {200, -20006.217280898190402},
  };
  for (auto [z, ref] : cases) {
    CAPTURE(z);
    CHECK(log_normal_upper_tail(z) == doctest::Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("log normal interval is monotone and consistent") {
  const double a = -0.4, b = 1.3;
  const double direct = std::log(std::exp(log_normal_upper_tail(a)) -
                                 std::exp(log_normal_upper_tail(b)));
  CHECK(log_normal_interval(a, b) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(std::isfinite(log_normal_interval(50.0, 50.5)));
  CHECK(log_normal_interval(50.0, 50.5) < log_normal_interval(49.5, 50.0));
}

TEST_CASE("normal tail inverse round-trips") {
  for (double p : {1e-12, 1e-4, 0.05, 0.5, 0.9}) {
    CHECK(std::exp(log_normal_upper_tail(normal_upper_tail_inverse(p))) ==
          doctest::Approx(p).epsilon(1e-10));
  }
}

TEST_CASE("test-statistic tails") {
  CHECK(chi_square1_upper_tail(3.841458820694124) == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(chi_square1_upper_tail(10.0) ==
        doctest::Approx(0.0015654022580025496775).epsilon(1e-12));
  CHECK(chi_square1_upper_tail(0.0) == 1.0);
  CHECK(normal_two_sided_p(1.96) == doctest::Approx(0.04999579029644087).epsilon(1e-12));
  CHECK(normal_two_sided_p(-1.96) == normal_two_sided_p(1.96));
  CHECK(student_t_two_sided_p(2.5, 10) == doctest::Approx(0.031446844236608776).epsilon(1e-10));
  CHECK(student_t_two_sided_p(23.723322086615894, 3) ==
        doctest::Approx(0.0001641244049890146).epsilon(1e-8));
}

}  // TEST_SUITE
