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
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace citescale {

using Count = std::uint64_t;

/// Per-paper citation counts with a label.
///
/// Counts are sorted ascending at construction and never change afterwards,
/// so a tail (all counts >= x) is always a contiguous suffix. Zero counts are
/// kept: they matter for shares and medians even though no power-law tail
/// ever includes them.
class CitationSample {
 public:
  /// Throws Error("empty dataset") when `counts` is empty.
  CitationSample(std::string label, std::vector<Count> counts);

  const std::string& label() const { return label_; }
  std::span<const Count> counts() const { return counts_; }
  std::size_t size() const { return counts_.size(); }

  /// Suffix of counts that are >= x_min.
  std::span<const Count> tail(Count x_min) const;

 private:
  std::string label_;
  std::vector<Count> counts_;
};

struct SummaryStats {
  std::uint64_t n_papers = 0;
  std::uint64_t n_citations = 0;
  double share_papers = 1.0;
  double share_citations = 1.0;
  double median_citations = 0.0;
};

/// Shares default to 1 (the sample is its own corpus); use
/// summarize_partition to express them relative to a two-way split.
SummaryStats summarize(const CitationSample& sample);

struct PartitionShares {
  double papers_collab = 0.0;
  double papers_single = 0.0;
  double citations_collab = 0.0;
  double citations_single = 0.0;
  /// citations_collab / citations_single; empty when the single partition
  /// has no citations.
  std::optional<double> citation_ratio;
};

PartitionShares partition_shares(const SummaryStats& collab,
                                 const SummaryStats& single);

/// Returns copies of both summaries with shares relative to their union.
std::pair<SummaryStats, SummaryStats> summarize_partition(
    const CitationSample& collab, const CitationSample& single);

/// Whole-percent rendering ("88%") of a stored full-precision fraction.
std::string format_percent(double fraction);

struct SubfieldAggregate {
  std::string subfield_id;
  std::string field_id;
  std::uint64_t papers_total = 0;
  std::uint64_t papers_collab = 0;
  std::uint64_t papers_single = 0;
  std::uint64_t citations_total = 0;
  std::uint64_t citations_collab = 0;
  std::uint64_t citations_single = 0;

  bool consistent() const {
    return papers_total == papers_collab + papers_single &&
           citations_total == citations_collab + citations_single;
  }
};

// Plain-text counts: one base-10 integer per line, LF or CRLF, blank lines
// and '#' comment lines ignored.
CitationSample read_counts(std::istream& in, std::string label);
CitationSample read_counts_file(const std::string& path);
void write_counts(std::ostream& out, std::span<const Count> counts);

// Aggregate TSV with the fixed eight-column header.
inline constexpr const char* kAggregateHeader =
    "subfield\tfield\tpapers_total\tpapers_collab\tpapers_single\t"
    "citations_total\tcitations_collab\tcitations_single";

std::vector<SubfieldAggregate> read_aggregates(std::istream& in);
void write_aggregates(std::ostream& out,
                      std::span<const SubfieldAggregate> aggregates);

}  // namespace citescale
