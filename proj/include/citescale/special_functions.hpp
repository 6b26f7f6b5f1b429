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

namespace citescale {

/// Hurwitz zeta: sum over k >= 0 of (k + q)^(-s).
///
/// Requires s > 1 (throws Error("non-normalizable") otherwise) and q > 0.
/// Direct summation until k + q reaches a shift point, then an
/// Euler-Maclaurin tail; absolute error well below 1e-12 for the ranges the
/// fitters use (1 < s <= 200, q >= 1).
double hurwitz_zeta(double s, double q);

struct ZetaValue {
  double value = 0.0;
  /// Partial derivative with respect to s.
  double d_ds = 0.0;
};

/// Value and s-derivative in one pass.
ZetaValue hurwitz_zeta_with_derivative(double s, double q);

/// log of the upper standard normal tail, log P(Z > z), accurate for any z.
double log_normal_upper_tail(double z);

/// log(P(a < Z <= b)) for a standard normal Z and a < b.
double log_normal_interval(double a, double b);

/// Inverse of the upper standard normal tail: z with P(Z > z) = p, 0 < p < 1.
double normal_upper_tail_inverse(double p);

/// Upper tail of the chi-square distribution with one degree of freedom.
double chi_square1_upper_tail(double x);

/// Two-sided standard normal p-value, P(|Z| >= |z|).
double normal_two_sided_p(double z);

/// Two-sided Student-t p-value with `df` degrees of freedom.
double student_t_two_sided_p(double t, double df);

}  // namespace citescale
