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

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "citescale/dataset.hpp"

namespace citescale {

struct BiblioRecord {
  std::string record_id;
  std::vector<std::string> authors;
  std::string title;
  std::string journal;
  std::string doc_type;
  Count citations = 0;
  int year = 0;
  /// 1-based line in the source export (header is line 1).
  std::size_t source_row = 0;
};

/// Header names of the required export columns.
struct ColumnNames {
  std::string authors = "AU";
  std::string title = "TI";
  std::string journal = "SO";
  std::string doc_type = "DT";
  std::string times_cited = "TC";
  std::string year = "PY";
  std::string unique_id = "UT";
};

struct Rejection {
  std::size_t row = 0;
  std::string reason;
};

struct ParseResult {
  std::vector<BiblioRecord> records;
  std::vector<Rejection> rejections;
  std::size_t duplicates = 0;
  std::size_t excluded_doc_types = 0;
};

/// Document types kept by the export filter; a record is kept when any of
/// its ';'-separated types matches one of these (case-insensitive).
inline constexpr std::string_view kAcceptedDocTypes[] = {
    "Article", "Review", "Letter", "Note", "Proceedings Paper"};

bool accepted_doc_type(std::string_view doc_type);

/// Parses a tab-delimited export. Bad rows, excluded document types and
/// repeated record ids (first occurrence wins) go to `rejections` with their
/// line numbers. Errors: empty input; missing required column (named).
ParseResult parse_export(std::istream& in, const ColumnNames& columns = {});

/// Writes records in the export layout parse_export reads. Authors are
/// joined with "; ".
void write_export(std::ostream& out, std::span<const BiblioRecord> records,
                  const ColumnNames& columns = {});

/// Nonempty ';'-separated author segments.
std::vector<std::string> parse_authors(std::string_view field);

enum class Collaboration { collaboration, no_collaboration };

/// More than one author is a collaboration; affiliations play no part.
/// Error "anonymous record" for zero authors.
Collaboration classify_collaboration(const BiblioRecord& record);

/// Case-fold, trim, collapse whitespace, and spell '&' as "and".
std::string normalize_journal(std::string_view name);

/// Journal -> (field, subfield) under normalized journal names.
class ClassificationMap {
 public:
  struct Entry {
    std::string field_id;
    std::string subfield_id;
  };

  /// CSV with header `journal,field,subfield`; double-quoted fields allowed.
  static ClassificationMap read_csv(std::istream& in);

  /// Errors when the journal is already mapped elsewhere or the subfield
  /// already belongs to another field.
  void add(std::string_view journal, std::string field_id,
           std::string subfield_id);

  const Entry* find(std::string_view journal) const;
  std::size_t size() const { return by_journal_.size(); }
  bool empty() const { return by_journal_.empty(); }

 private:
  std::map<std::string, Entry> by_journal_;
  std::map<std::string, std::string> field_of_subfield_;
};

struct AggregateResult {
  /// Sorted by subfield id; subfields with no records are absent.
  std::vector<SubfieldAggregate> aggregates;
  /// Unmapped journals and anonymous records, by source row.
  std::vector<Rejection> rejections;
  std::vector<BiblioRecord> mapped;
};

/// Errors: empty mapping.
AggregateResult build_aggregates(std::span<const BiblioRecord> records,
                                 const ClassificationMap& map);

/// Inclusive publication-year window; unset bounds pass everything.
struct YearWindow {
  std::optional<int> from;
  std::optional<int> to;
  bool contains(int year) const {
    return (!from || year >= *from) && (!to || year <= *to);
  }
};

std::vector<BiblioRecord> filter_years(std::span<const BiblioRecord> records,
                                       const YearWindow& window);

/// Citation counts split by collaboration class. Anonymous records are
/// skipped.
struct ModeCounts {
  std::vector<Count> overall;
  std::vector<Count> collaboration;
  std::vector<Count> single;
};

ModeCounts counts_by_mode(std::span<const BiblioRecord> records);

void write_rejections(std::ostream& out, std::span<const Rejection> rejections);

}  // namespace citescale
