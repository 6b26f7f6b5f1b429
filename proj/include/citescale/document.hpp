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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "citescale/altmodels.hpp"
#include "citescale/gof.hpp"
#include "citescale/powerlaw.hpp"
#include "citescale/scaling.hpp"

namespace citescale {

using Document = nlohmann::ordered_json;

inline constexpr std::string_view kToolkitVersion = CITESCALE_VERSION;

/// Embedded in every machine-readable output.
struct Provenance {
  std::string command;
  std::uint64_t seed = 0;
  std::string input_digest;
};

std::string sha256_hex(std::string_view bytes);
/// "sha256:<hex>" of a file's bytes.
std::string file_digest(const std::string& path);

Document fit_document(const PowerLawFit& fit, const Provenance& prov);
Document gof_document(const GofResult& gof, const Provenance& prov);
Document comparison_document(const PowerLawFit& pl,
                             std::span<const ModelComparison> comparisons,
                             const Provenance& prov);
Document scaling_document(const ScalingFit& fit, ScalingMode mode,
                          std::span<const std::string> excluded,
                          const Provenance& prov);

/// Serialized form written to disk: two-space indent, trailing newline.
std::string dump_document(const Document& doc);

// Plot-data and table exports.
void write_ccdf_csv(std::ostream& out, std::span<const CcdfPoint> points);
void write_scatter_csv(std::ostream& out, std::span<const ScalingPoint> points,
                       const ScalingFit& fit);
void write_comparison_tsv(std::ostream& out,
                          std::span<const ModelComparison> comparisons);

/// Human-readable tables over any mix of the documents above.
std::string render_report(std::span<const Document> docs);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace citescale
