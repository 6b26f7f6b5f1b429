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

#include "citescale/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "citescale/error.hpp"
#include "text_util.hpp"

namespace citescale {

CitationSample::CitationSample(std::string label, std::vector<Count> counts)
    : label_(std::move(label)), counts_(std::move(counts)) {
  if (counts_.empty()) throw Error("empty dataset");
  std::sort(counts_.begin(), counts_.end());
}

std::span<const Count> CitationSample::tail(Count x_min) const {
  auto it = std::lower_bound(counts_.begin(), counts_.end(), x_min);
  return {it, counts_.end()};
}

SummaryStats summarize(const CitationSample& sample) {
  const auto counts = sample.counts();
  SummaryStats s;
  s.n_papers = counts.size();
  s.n_citations = std::accumulate(counts.begin(), counts.end(), Count{0});
  const std::size_t n = counts.size();
  if (n % 2 == 1) {
    s.median_citations = static_cast<double>(counts[n / 2]);
  } else {
    s.median_citations = 0.5 * (static_cast<double>(counts[n / 2 - 1]) +
                                static_cast<double>(counts[n / 2]));
  }
  return s;
}

PartitionShares partition_shares(const SummaryStats& collab,
                                 const SummaryStats& single) {
  PartitionShares out;
  const auto papers = collab.n_papers + single.n_papers;
  const auto cites = collab.n_citations + single.n_citations;
  if (papers > 0) {
    out.papers_collab = static_cast<double>(collab.n_papers) / papers;
    out.papers_single = 1.0 - out.papers_collab;
  }
  if (cites > 0) {
    out.citations_collab = static_cast<double>(collab.n_citations) / cites;
    out.citations_single = 1.0 - out.citations_collab;
  }
  if (single.n_citations > 0) {
    out.citation_ratio = static_cast<double>(collab.n_citations) /
                         static_cast<double>(single.n_citations);
  }
  return out;
}

std::pair<SummaryStats, SummaryStats> summarize_partition(
    const CitationSample& collab, const CitationSample& single) {
  auto a = summarize(collab);
  auto b = summarize(single);
  const auto shares = partition_shares(a, b);
  a.share_papers = shares.papers_collab;
  b.share_papers = shares.papers_single;
  a.share_citations = shares.citations_collab;
  b.share_citations = shares.citations_single;
  return {a, b};
}

std::string format_percent(double fraction) {
  const double pct = std::round(fraction * 100.0);
  std::ostringstream os;
  os << static_cast<long long>(pct) << '%';
  return os.str();
}

CitationSample read_counts(std::istream& in, std::string label) {
  std::vector<Count> counts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = detail::trim(line);
    if (text.empty() || text.front() == '#') continue;
    Count value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw Error("malformed count on line " + std::to_string(line_no) +
                  ": '" + std::string(text) + "'");
    }
    counts.push_back(value);
  }
  return CitationSample(std::move(label), std::move(counts));
}

CitationSample read_counts_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  return read_counts(in, path);
}

void write_counts(std::ostream& out, std::span<const Count> counts) {
  for (auto c : counts) out << c << '\n';
}

namespace {

std::uint64_t parse_u64(std::string_view field, std::size_t line_no,
                        const char* column) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error("aggregate line " + std::to_string(line_no) + ": bad " +
                column + " '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::vector<SubfieldAggregate> read_aggregates(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("empty aggregate file");
  if (detail::trim(line) != kAggregateHeader) {
    throw Error("aggregate header mismatch; expected '" +
                std::string(kAggregateHeader) + "'");
  }
  std::vector<SubfieldAggregate> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const std::string row = detail::strip_cr(line);
    const auto f = detail::split(row, '\t');
    if (f.size() != 8) {
      throw Error("aggregate line " + std::to_string(line_no) +
                  ": expected 8 fields, got " + std::to_string(f.size()));
    }
    SubfieldAggregate a;
    a.subfield_id = std::string(f[0]);
    a.field_id = std::string(f[1]);
    a.papers_total = parse_u64(f[2], line_no, "papers_total");
    a.papers_collab = parse_u64(f[3], line_no, "papers_collab");
    a.papers_single = parse_u64(f[4], line_no, "papers_single");
    a.citations_total = parse_u64(f[5], line_no, "citations_total");
    a.citations_collab = parse_u64(f[6], line_no, "citations_collab");
    a.citations_single = parse_u64(f[7], line_no, "citations_single");
    if (!a.consistent()) {
      throw Error("aggregate line " + std::to_string(line_no) +
                  ": totals do not equal collab + single");
    }
    out.push_back(std::move(a));
  }
  return out;
}

void write_aggregates(std::ostream& out,
                      std::span<const SubfieldAggregate> aggregates) {
  out << kAggregateHeader << '\n';
  for (const auto& a : aggregates) {
    out << a.subfield_id << '\t' << a.field_id << '\t' << a.papers_total
        << '\t' << a.papers_collab << '\t' << a.papers_single << '\t'
        << a.citations_total << '\t' << a.citations_collab << '\t'
        << a.citations_single << '\n';
  }
}

}  // namespace citescale
