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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citescale/dataset.hpp"

namespace citescale {

/// One subfield in a size-versus-citations regression.
struct ScalingPoint {
  std::string subfield_id;
  double size = 0.0;  // papers in the chosen mode
  double cbp = 0.0;   // total citations to those papers
};

enum class LogBase { ten, natural };

/// OLS fit of log(cbp) = intercept_log + exponent * log(size), i.e.
/// cbp = k * size^exponent.
struct ScalingFit {
  double exponent = 0.0;
  double intercept_log = 0.0;  // in `base`
  double k = 0.0;
  double exponent_se = 0.0;
  double r2 = 0.0;
  double t_stat = 0.0;
  /// Two-sided p for exponent != 0 with df degrees of freedom.
  double p_value = 1.0;
  std::size_t df = 0;
  std::size_t n_points = 0;
  LogBase base = LogBase::ten;
};

/// Errors: fewer than 3 points, a nonpositive size or cbp, or "no size
/// variation" when all sizes are equal.
ScalingFit scaling_fit(std::span<const ScalingPoint> points,
                       LogBase base = LogBase::ten);

/// 2^exponent: the citation multiplier when output doubles.
double matthew_factor(double exponent);

/// k * size^exponent.
double expected_cbp(const ScalingFit& fit, double size);

/// Observed over expected citations; 1 means exactly on the fitted curve.
double performance_indicator(const ScalingPoint& point, const ScalingFit& fit);

enum class ScalingMode { overall, collaboration, single };

std::string_view mode_name(ScalingMode mode);
ScalingMode parse_mode(std::string_view name);

struct ModePoints {
  std::vector<ScalingPoint> points;
  /// Subfields dropped for zero papers or zero citations in this mode.
  std::vector<std::string> excluded;
};

ModePoints points_for_mode(std::span<const SubfieldAggregate> aggregates,
                           ScalingMode mode);

}  // namespace citescale
