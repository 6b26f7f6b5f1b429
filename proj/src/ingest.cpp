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

#include "citescale/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <map>
#include <unordered_set>

#include "citescale/error.hpp"
#include "text_util.hpp"

namespace citescale {

namespace {

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() && lower_ascii(a) == lower_ascii(b);
}

std::string strip_bom(std::string line) {
  if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF &&
      static_cast<unsigned char>(line[1]) == 0xBB &&
      static_cast<unsigned char>(line[2]) == 0xBF) {
    line.erase(0, 3);
  }
  return line;
}

// One CSV record (no embedded newlines).
std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(c);
    }
  }
  if (quoted) throw Error("unterminated quote in CSV line");
  out.push_back(std::move(field));
  return out;
}

template <typename T>
bool parse_int(std::string_view text, T& value) {
  text = detail::trim(text);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

bool accepted_doc_type(std::string_view doc_type) {
  for (auto part : detail::split(doc_type, ';')) {
    part = detail::trim(part);
    for (auto accepted : kAcceptedDocTypes) {
      if (iequals(part, accepted)) return true;
    }
  }
  return false;
}

std::vector<std::string> parse_authors(std::string_view field) {
  std::vector<std::string> out;
  for (auto part : detail::split(field, ';')) {
    part = detail::trim(part);
    if (!part.empty()) out.emplace_back(part);
  }
  return out;
}

ParseResult parse_export(std::istream& in, const ColumnNames& columns) {
  std::string line;
  if (!std::getline(in, line)) throw Error("empty export file");
  const std::string header_line = strip_bom(detail::strip_cr(line));
  if (detail::trim(header_line).empty()) throw Error("empty export file");
  const auto header = detail::split(header_line, '\t');

  auto locate = [&](const std::string& name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (detail::trim(header[i]) == name) return i;
    }
    throw Error("missing required column '" + name + "'");
  };
  const std::size_t c_au = locate(columns.authors);
  const std::size_t c_ti = locate(columns.title);
  const std::size_t c_so = locate(columns.journal);
  const std::size_t c_dt = locate(columns.doc_type);
  const std::size_t c_tc = locate(columns.times_cited);
  const std::size_t c_py = locate(columns.year);
  const std::size_t c_ut = locate(columns.unique_id);
  const std::size_t needed =
      1 + std::max({c_au, c_ti, c_so, c_dt, c_tc, c_py, c_ut});

  ParseResult result;
  std::unordered_set<std::string> seen;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    const std::string text = detail::strip_cr(line);
    if (detail::trim(text).empty()) continue;
    const auto f = detail::split(text, '\t');
    if (f.size() < needed) {
      result.rejections.push_back(
          {row, "expected at least " + std::to_string(needed) + " fields, got " +
                    std::to_string(f.size())});
      continue;
    }
    BiblioRecord r;
    r.source_row = row;
    r.record_id = std::string(detail::trim(f[c_ut]));
    if (r.record_id.empty()) {
      result.rejections.push_back({row, "missing record id"});
      continue;
    }
    if (!parse_int(f[c_tc], r.citations)) {
      result.rejections.push_back(
          {row, "unparseable citation count '" + std::string(f[c_tc]) + "'"});
      continue;
    }
    if (!parse_int(f[c_py], r.year)) {
      result.rejections.push_back(
          {row, "unparseable year '" + std::string(f[c_py]) + "'"});
      continue;
    }
    r.doc_type = std::string(detail::trim(f[c_dt]));
    if (!accepted_doc_type(r.doc_type)) {
      ++result.excluded_doc_types;
      result.rejections.push_back(
          {row, "excluded document type '" + r.doc_type + "'"});
      continue;
    }
    if (!seen.insert(r.record_id).second) {
      ++result.duplicates;
      result.rejections.push_back({row, "duplicate record id " + r.record_id});
      continue;
    }
    r.authors = parse_authors(f[c_au]);
    r.title = std::string(detail::trim(f[c_ti]));
    r.journal = std::string(detail::trim(f[c_so]));
    result.records.push_back(std::move(r));
  }
  return result;
}

void write_export(std::ostream& out, std::span<const BiblioRecord> records,
                  const ColumnNames& columns) {
  out << columns.authors << '\t' << columns.title << '\t' << columns.journal
      << '\t' << columns.doc_type << '\t' << columns.times_cited << '\t'
      << columns.year << '\t' << columns.unique_id << '\n';
  for (const auto& r : records) {
    for (std::size_t i = 0; i < r.authors.size(); ++i) {
      if (i) out << "; ";
      out << r.authors[i];
    }
    out << '\t' << r.title << '\t' << r.journal << '\t' << r.doc_type << '\t'
        << r.citations << '\t' << r.year << '\t' << r.record_id << '\n';
  }
}

Collaboration classify_collaboration(const BiblioRecord& record) {
  if (record.authors.empty()) throw Error("anonymous record");
  return record.authors.size() > 1 ? Collaboration::collaboration
                                   : Collaboration::no_collaboration;
}

std::string normalize_journal(std::string_view name) {
  std::string spaced;
  spaced.reserve(name.size() + 8);
  for (char c : name) {
    if (c == '&') {
      spaced += " and ";
    } else {
      spaced.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  std::string out;
  bool pending_space = false;
  for (char c : spaced) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

ClassificationMap ClassificationMap::read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("empty classification map");
  const auto header = split_csv(strip_bom(detail::strip_cr(line)));
  if (header.size() < 3 || detail::trim(header[0]) != "journal" ||
      detail::trim(header[1]) != "field" || detail::trim(header[2]) != "subfield") {
    throw Error("classification map header must be 'journal,field,subfield'");
  }
  ClassificationMap map;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    const std::string text = detail::strip_cr(line);
    if (detail::trim(text).empty()) continue;
    const auto f = split_csv(text);
    if (f.size() != 3) {
      throw Error("classification map line " + std::to_string(row) +
                  ": expected 3 fields");
    }
    map.add(f[0], std::string(detail::trim(f[1])), std::string(detail::trim(f[2])));
  }
  return map;
}

void ClassificationMap::add(std::string_view journal, std::string field_id,
                            std::string subfield_id) {
  const std::string key = normalize_journal(journal);
  if (key.empty() || field_id.empty() || subfield_id.empty()) {
    throw Error("classification entry with empty journal, field or subfield");
  }
  if (auto it = field_of_subfield_.find(subfield_id);
      it != field_of_subfield_.end() && it->second != field_id) {
    throw Error("subfield '" + subfield_id + "' assigned to fields '" +
                it->second + "' and '" + field_id + "'");
  }
  if (auto it = by_journal_.find(key); it != by_journal_.end()) {
    if (it->second.subfield_id != subfield_id || it->second.field_id != field_id) {
      throw Error("journal '" + std::string(journal) +
                  "' mapped to more than one subfield");
    }
    return;
  }
  field_of_subfield_[subfield_id] = field_id;
  by_journal_[key] = Entry{std::move(field_id), std::move(subfield_id)};
}

const ClassificationMap::Entry* ClassificationMap::find(
    std::string_view journal) const {
  auto it = by_journal_.find(normalize_journal(journal));
  return it == by_journal_.end() ? nullptr : &it->second;
}

AggregateResult build_aggregates(std::span<const BiblioRecord> records,
                                 const ClassificationMap& map) {
  if (map.empty()) throw Error("empty classification map");
  AggregateResult result;
  std::map<std::string, SubfieldAggregate> by_subfield;
  for (const auto& r : records) {
    const auto* entry = map.find(r.journal);
    if (!entry) {
      result.rejections.push_back({r.source_row, "unmapped journal '" + r.journal + "'"});
      continue;
    }
    if (r.authors.empty()) {
      result.rejections.push_back({r.source_row, "anonymous record"});
      continue;
    }
    auto& agg = by_subfield[entry->subfield_id];
    agg.subfield_id = entry->subfield_id;
    agg.field_id = entry->field_id;
    ++agg.papers_total;
    agg.citations_total += r.citations;
    if (classify_collaboration(r) == Collaboration::collaboration) {
      ++agg.papers_collab;
      agg.citations_collab += r.citations;
    } else {
      ++agg.papers_single;
      agg.citations_single += r.citations;
    }
    result.mapped.push_back(r);
  }
  for (auto& [_, agg] : by_subfield) result.aggregates.push_back(std::move(agg));
  return result;
}

std::vector<BiblioRecord> filter_years(std::span<const BiblioRecord> records,
                                       const YearWindow& window) {
  std::vector<BiblioRecord> out;
  for (const auto& r : records) {
    if (window.contains(r.year)) out.push_back(r);
  }
  return out;
}

ModeCounts counts_by_mode(std::span<const BiblioRecord> records) {
  ModeCounts out;
  for (const auto& r : records) {
    if (r.authors.empty()) continue;
    out.overall.push_back(r.citations);
    if (classify_collaboration(r) == Collaboration::collaboration) {
      out.collaboration.push_back(r.citations);
    } else {
      out.single.push_back(r.citations);
    }
  }
  return out;
}

void write_rejections(std::ostream& out, std::span<const Rejection> rejections) {
  out << "row\treason\n";
  for (const auto& r : rejections) out << r.row << '\t' << r.reason << '\n';
}

}  // namespace citescale
