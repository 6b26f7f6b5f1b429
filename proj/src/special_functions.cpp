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

#include "citescale/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/erf.hpp>

#include "citescale/error.hpp"

namespace citescale {

namespace {

// B_{2j} / (2j)! for j = 1..12.
constexpr std::array<double, 12> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0,
    -174611.0 / 330.0 / 2432902008176640000.0,
    854513.0 / 138.0 / 1.1240007277776077e21,
    -236364091.0 / 2730.0 / 6.204484017332394e23,
};

template <bool WithDerivative>
ZetaValue zeta_impl(double s, double q) {
  if (!(s > 1.0)) throw Error("non-normalizable");
  if (!(q > 0.0)) throw Error("hurwitz_zeta requires q > 0");

  // Shift far enough that the asymptotic series converges quickly.
  const double shift_to = std::max(16.0, 0.5 * s + 8.0);
  ZetaValue out;
  double a = q;
  while (a < shift_to) {
    const double la = std::log(a);
    const double t = std::exp(-s * la);
    out.value += t;
    if constexpr (WithDerivative) out.d_ds -= la * t;
    a += 1.0;
  }

  const double la = std::log(a);
  const double a_s = std::exp(-s * la);  // a^-s
  const double sm1 = s - 1.0;
  const double integral = a * a_s / sm1;
  out.value += integral + 0.5 * a_s;
  if constexpr (WithDerivative) {
    out.d_ds += integral * (-la - 1.0 / sm1) - 0.5 * la * a_s;
  }

  // Term j: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * a^(-s-2j+1).
  double rising = s;            // s(s+1)...(s+2j-2)
  double rising_log_slope = 1.0 / s;  // d/ds log(rising)
  double power = a_s / a;       // a^(-s-2j+1)
  const double inv_a2 = 1.0 / (a * a);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    const double term = kBernoulliOverFactorial[j] * rising * power;
    out.value += term;
    if constexpr (WithDerivative) out.d_ds += term * (rising_log_slope - la);
    if (std::abs(term) < 1e-18 * out.value) break;
    const double k = static_cast<double>(2 * j + 1);
    rising *= (s + k) * (s + k + 1.0);
    rising_log_slope += 1.0 / (s + k) + 1.0 / (s + k + 1.0);
    power *= inv_a2;
  }
  return out;
}

}  // namespace

double hurwitz_zeta(double s, double q) { return zeta_impl<false>(s, q).value; }

ZetaValue hurwitz_zeta_with_derivative(double s, double q) {
  return zeta_impl<true>(s, q);
}

double log_normal_upper_tail(double z) {
  if (z < 37.0) return std::log(0.5 * std::erfc(z / std::sqrt(2.0)));
  // Asymptotic expansion of Mills' ratio.
  const double z2 = 1.0 / (z * z);
  const double series =
      1.0 - z2 * (1.0 - 3.0 * z2 * (1.0 - 5.0 * z2 * (1.0 - 7.0 * z2)));
  return -0.5 * z * z - std::log(z) - 0.5 * std::log(2.0 * M_PI) +
         std::log(series);
}

double log_normal_interval(double a, double b) {
  if (a > 0.0) {
    const double la = log_normal_upper_tail(a);
    const double lb = log_normal_upper_tail(b);
    return la + std::log1p(-std::exp(lb - la));
  }
  if (b < 0.0) {
    const double la = log_normal_upper_tail(-b);
    const double lb = log_normal_upper_tail(-a);
    return la + std::log1p(-std::exp(lb - la));
  }
  const double outside = std::exp(log_normal_upper_tail(b)) +
                         std::exp(log_normal_upper_tail(-a));
  return std::log1p(-outside);
}

double normal_upper_tail_inverse(double p) {
  return std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
}

double chi_square1_upper_tail(double x) {
  if (x <= 0.0) return 1.0;
  return std::erfc(std::sqrt(0.5 * x));
}

double normal_two_sided_p(double z) {
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

double student_t_two_sided_p(double t, double df) {
  if (std::isinf(t)) return 0.0;
  if (std::isnan(t)) return std::numeric_limits<double>::quiet_NaN();
  boost::math::students_t dist(df);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

}  // namespace citescale
