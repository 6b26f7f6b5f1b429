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

#include "citescale/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "citescale/error.hpp"
#include "citescale/special_functions.hpp"

namespace citescale {

ScalingFit scaling_fit(std::span<const ScalingPoint> points, LogBase base) {
  if (points.size() < 3) throw Error("scaling fit needs at least 3 points");
  const auto log_of = [base](double v) {
    return base == LogBase::ten ? std::log10(v) : std::log(v);
  };
  const std::size_t n = points.size();
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(points[i].size > 0.0) || !(points[i].cbp > 0.0)) {
      throw Error("nonpositive value for subfield '" + points[i].subfield_id + "'");
    }
    x[i] = log_of(points[i].size);
    y[i] = log_of(points[i].cbp);
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw Error("no size variation");

  ScalingFit fit;
  fit.base = base;
  fit.n_points = n;
  fit.df = n - 2;
  fit.exponent = sxy / sxx;
  fit.intercept_log = my - fit.exponent * mx;
  fit.k = base == LogBase::ten ? std::pow(10.0, fit.intercept_log)
                               : std::exp(fit.intercept_log);
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept_log + fit.exponent * x[i]);
    sse += r * r;
  }
  fit.r2 = syy > 0.0 ? std::clamp(1.0 - sse / syy, 0.0, 1.0) : 1.0;
  fit.exponent_se = std::sqrt(sse / static_cast<double>(fit.df) / sxx);
  if (fit.exponent_se > 0.0) {
    fit.t_stat = fit.exponent / fit.exponent_se;
  } else {
    fit.t_stat = fit.exponent == 0.0
                     ? 0.0
                     : std::copysign(std::numeric_limits<double>::infinity(),
                                     fit.exponent);
  }
  fit.p_value = student_t_two_sided_p(fit.t_stat, static_cast<double>(fit.df));
  return fit;
}

double matthew_factor(double exponent) { return std::exp2(exponent); }

double expected_cbp(const ScalingFit& fit, double size) {
  return fit.k * std::pow(size, fit.exponent);
}

double performance_indicator(const ScalingPoint& point, const ScalingFit& fit) {
  return point.cbp / expected_cbp(fit, point.size);
}

std::string_view mode_name(ScalingMode mode) {
  switch (mode) {
    case ScalingMode::overall: return "overall";
    case ScalingMode::collaboration: return "collaboration";
    case ScalingMode::single: return "single";
  }
  return "unknown";
}

ScalingMode parse_mode(std::string_view name) {
  if (name == "overall") return ScalingMode::overall;
  if (name == "collaboration" || name == "collab") return ScalingMode::collaboration;
  if (name == "single") return ScalingMode::single;
  throw Error("unknown mode '" + std::string(name) + "'");
}

ModePoints points_for_mode(std::span<const SubfieldAggregate> aggregates,
                           ScalingMode mode) {
  ModePoints out;
  for (const auto& a : aggregates) {
    std::uint64_t papers = 0, cites = 0;
    switch (mode) {
      case ScalingMode::overall:
        papers = a.papers_total;
        cites = a.citations_total;
        break;
      case ScalingMode::collaboration:
        papers = a.papers_collab;
        cites = a.citations_collab;
        break;
      case ScalingMode::single:
        papers = a.papers_single;
        cites = a.citations_single;
        break;
    }
    if (papers == 0 || cites == 0) {
      out.excluded.push_back(a.subfield_id);
      continue;
    }
    out.points.push_back({a.subfield_id, static_cast<double>(papers),
                          static_cast<double>(cites)});
  }
  return out;
}

}  // namespace citescale
