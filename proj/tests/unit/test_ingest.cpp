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

#include <algorithm>
#include <numeric>
#include <sstream>

#include "doctest.h"

#include "citescale/error.hpp"
#include "citescale/ingest.hpp"
#include "support/synthetic_export.hpp"

using namespace citescale;

namespace {

ParseResult parse(const std::string& text, const ColumnNames& cols = {}) {
  std::istringstream in(text);
  return parse_export(in, cols);
}

ClassificationMap map_of(const std::string& csv) {
  std::istringstream in(csv);
  return ClassificationMap::read_csv(in);
}

const std::string kHeader = "AU\tTI\tSO\tDT\tTC\tPY\tUT\n";

}  // namespace

TEST_SUITE("ingest") {

TEST_CASE("document-type filter") {
  const auto r = parse(kHeader +
                       "A; B\tOne\tJ\tArticle\t3\t2006\tU1\n"
                       "C\tTwo\tJ\tBook Review\t1\t2006\tU2\n"
                       "D\tThree\tJ\tLetter\t17\t2005\tU3\n");
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[1].citations == 17);
  CHECK(r.excluded_doc_types == 1);
  REQUIRE(r.rejections.size() == 1);
  CHECK(r.rejections[0].row == 3);
  CHECK(accepted_doc_type("Article; Proceedings Paper"));
  CHECK(accepted_doc_type("proceedings paper"));
  CHECK_FALSE(accepted_doc_type("Editorial Material"));
  CHECK(accepted_doc_type("Book; Review"));
}

TEST_CASE("duplicates keep the first occurrence") {
  const auto r = parse(kHeader +
                       "A\tFirst\tJ\tArticle\t3\t2006\tU1\n"
                       "A\tSecond\tJ\tArticle\t9\t2006\tU1\n");
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].title == "First");
  CHECK(r.duplicates == 1);
  CHECK(r.rejections[0].row == 3);
}

TEST_CASE("malformed rows are rejected with line numbers") {
  const auto r = parse(kHeader +
                       "A\tT\tJ\tArticle\tmany\t2006\tU1\n"
                       "\n"
                       "A\tT\tJ\tArticle\t4\tyear\tU2\n"
                       "A\tT\tJ\n"
                       "A\tT\tJ\tArticle\t-1\t2006\tU3\n"
                       "A\tT\tJ\tArticle\t5\t2006\t\n"
                       "A\tT\tJ\tArticle\t5\t2006\tU4\n");
  CHECK(r.records.size() == 1);
  std::vector<std::size_t> rows;
  for (const auto& x : r.rejections) rows.push_back(x.row);
  CHECK(rows == std::vector<std::size_t>{2, 4, 5, 6, 7});
  CHECK(r.rejections[0].reason.find("many") != std::string::npos);
}

TEST_CASE("header handling") {
  CHECK_THROWS_WITH_AS(parse(""), "empty export file", Error);
  CHECK_THROWS_WITH_AS(parse("AU\tTI\tSO\tDT\tTC\tPY\n"), "missing required column 'UT'", Error);
  const auto bom = parse("\xEF\xBB\xBF" + kHeader + "A\tT\tJ\tNote\t1\t2007\tU\r\n");
  CHECK(bom.records.size() == 1);
  ColumnNames cols;
  cols.times_cited = "Z9";
  const auto custom = parse("UT\tZ9\tAU\tTI\tSO\tDT\tPY\tXX\nU1\t8\tA\tT\tJ\tArticle\t2005\tq\n", cols);
  REQUIRE(custom.records.size() == 1);
  CHECK(custom.records[0].citations == 8);
}

TEST_CASE("authors and collaboration") {
  CHECK(parse_authors("Smith, J; Doe, A ;  ; Roe, B") ==
        std::vector<std::string>{"Smith, J", "Doe, A", "Roe, B"});
  CHECK(parse_authors(" ; ").empty());
  BiblioRecord r;
  r.authors = {"A", "B", "C"};
  CHECK(classify_collaboration(r) == Collaboration::collaboration);
  r.authors = {"A"};
  CHECK(classify_collaboration(r) == Collaboration::no_collaboration);
  r.authors.clear();
  CHECK_THROWS_WITH_AS(classify_collaboration(r), "anonymous record", Error);
}

TEST_CASE("collaboration depends only on the author count") {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    BiblioRecord a;
    const std::size_t n = 1 + rng.below(6);
    for (std::size_t k = 0; k < n; ++k) a.authors.push_back("X" + std::to_string(rng.below(9)));
    BiblioRecord b = a;
    b.journal = "Other";
    b.title = "Changed";
    b.citations = rng.below(1000);
    for (auto& s : b.authors) s += " (Univ A; Univ B)";
    CHECK(classify_collaboration(a) == classify_collaboration(b));
  }
}

TEST_CASE("journal normalization") {
  CHECK(normalize_journal("  Cell &  Tissue\tResearch ") == "cell and tissue research");
  CHECK(normalize_journal("CELL AND TISSUE RESEARCH") == "cell and tissue research");
  CHECK(normalize_journal("A&B") == "a and b");
}

TEST_CASE("classification map") {
  const auto m = map_of("journal,field,subfield\n\"Cell & Tissue\",Bio,Cell\nOptics,Phys,Opt\n");
  CHECK(m.size() == 2);
  REQUIRE(m.find("cell and tissue") != nullptr);
  CHECK(m.find("CELL AND  TISSUE")->subfield_id == "Cell");
  CHECK(m.find("Nature") == nullptr);
  CHECK_THROWS_AS(map_of("journal,field\n"), Error);
  CHECK_THROWS_AS(map_of("journal,field,subfield\nA,F1,S\nB,F2,S\n"), Error);
  CHECK_THROWS_AS(map_of("journal,field,subfield\nA,F,S1\na,F,S2\n"), Error);
  CHECK_NOTHROW(map_of("journal,field,subfield\nA,F,S1\na,F,S1\n"));
  CHECK_THROWS_AS(map_of("journal,field,subfield\nA,F\n"), Error);
}

TEST_CASE("aggregates on a hand-summed fixture") {
  const auto r = parse(kHeader +
                       "A; B\tT\tJournal X\tArticle\t5\t2006\tU1\n"
                       "A; C\tT\tJournal X\tArticle\t5\t2006\tU2\n"
                       "A; B; C\tT\tjournal  x\tReview\t10\t2006\tU3\n"
                       "D\tT\tJournal X\tLetter\t4\t2006\tU4\n"
                       "E\tT\tNowhere\tArticle\t99\t2006\tU5\n"
                       "\tT\tJournal X\tArticle\t7\t2006\tU6\n");
  const auto m = map_of("journal,field,subfield\nJournal X,F,S\nJournal Y,F,Empty\n");
  const auto agg = build_aggregates(r.records, m);
  REQUIRE(agg.aggregates.size() == 1);
  const auto& a = agg.aggregates[0];
  CHECK(a.subfield_id == "S");
  CHECK(a.papers_total == 4);
  CHECK(a.papers_collab == 3);
  CHECK(a.papers_single == 1);
  CHECK(a.citations_total == 24);
  CHECK(a.citations_collab == 20);
  CHECK(a.citations_single == 4);
  CHECK(a.consistent());
  REQUIRE(agg.rejections.size() == 2);
  CHECK(agg.rejections[0].row == 6);
  CHECK(agg.rejections[1].reason == "anonymous record");
  CHECK_THROWS_WITH_AS(build_aggregates(r.records, ClassificationMap{}), "empty classification map", Error);
}

TEST_CASE("conservation on a synthetic export") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto ex = testing::make_export(1000, seed);
    const auto parsed = parse(ex.text);
    const auto agg = build_aggregates(parsed.records, map_of(ex.map_csv));
    std::uint64_t papers = 0, collab = 0, cites = 0;
    for (const auto& a : agg.aggregates) {
      CHECK(a.consistent());
      papers += a.papers_total;
      collab += a.papers_collab;
      cites += a.citations_total;
    }
    CHECK(papers == ex.expected_mapped);
    CHECK(papers == agg.mapped.size());
    CHECK(collab == ex.expected_collab);
    CHECK(cites == ex.expected_citations);
    // Every data row is accounted for exactly once.
    CHECK(parsed.records.size() + parsed.rejections.size() == ex.rows);
    CHECK(agg.mapped.size() + agg.rejections.size() == parsed.records.size());
  }
}

TEST_CASE("export round trip") {
  const auto ex = testing::make_export(300, 9);
  const auto first = parse(ex.text);
  std::ostringstream out;
  write_export(out, first.records);
  const auto second = parse(out.str());
  REQUIRE(second.records.size() == first.records.size());
  CHECK(second.rejections.empty());
  for (std::size_t i = 0; i < first.records.size(); ++i) {
    const auto& a = first.records[i];
    const auto& b = second.records[i];
    CHECK(a.record_id == b.record_id);
    CHECK(a.authors == b.authors);
    CHECK(a.title == b.title);
    CHECK(a.journal == b.journal);
    CHECK(a.doc_type == b.doc_type);
    CHECK(a.citations == b.citations);
    CHECK(a.year == b.year);
  }
}

TEST_CASE("year window and mode counts") {
  const auto r = parse(kHeader +
                       "A; B\tT\tJ\tArticle\t5\t2004\tU1\n"
                       "A\tT\tJ\tArticle\t2\t2005\tU2\n"
                       "A; C\tT\tJ\tArticle\t8\t2007\tU3\n"
                       "A\tT\tJ\tArticle\t1\t2008\tU4\n");
  const auto kept = filter_years(r.records, {2005, 2007});
  CHECK(kept.size() == 2);
  CHECK(filter_years(r.records, {}).size() == 4);
  CHECK(filter_years(r.records, {std::nullopt, 2005}).size() == 2);
  const auto c = counts_by_mode(r.records);
  CHECK(c.overall.size() == 4);
  CHECK(c.collaboration == std::vector<Count>{5, 8});
  CHECK(c.single == std::vector<Count>{2, 1});
}

TEST_CASE("shares at the published proportions survive ingestion") {
  // The published split (726,306 / 99,616 papers, 15,257,054 / 1,233,292
  // citations) scaled down by 1000.
  std::ostringstream os;
  os << kHeader;
  const std::size_t collab_papers = 726, single_papers = 100;
  const std::uint64_t collab_cites = 15257, single_cites = 1233;
  std::size_t id = 0;
  for (std::size_t i = 0; i < collab_papers; ++i) {
    const auto c = collab_cites / collab_papers + (i < collab_cites % collab_papers ? 1 : 0);
    os << "A; B\tT\tJ\tArticle\t" << c << "\t2006\tU" << id++ << "\n";
  }
  for (std::size_t i = 0; i < single_papers; ++i) {
    const auto c = single_cites / single_papers + (i < single_cites % single_papers ? 1 : 0);
    os << "A\tT\tJ\tArticle\t" << c << "\t2006\tU" << id++ << "\n";
  }
  const auto r = parse(os.str());
  const auto agg = build_aggregates(r.records, map_of("journal,field,subfield\nJ,F,S\n"));
  REQUIRE(agg.aggregates.size() == 1);
  const auto& a = agg.aggregates[0];
  SummaryStats c, s;
  c.n_papers = a.papers_collab;
  c.n_citations = a.citations_collab;
  s.n_papers = a.papers_single;
  s.n_citations = a.citations_single;
  const auto p = partition_shares(c, s);
  CHECK(format_percent(p.papers_collab) == "88%");
  CHECK(format_percent(p.papers_single) == "12%");
  CHECK(format_percent(p.citations_collab) == "93%");
  CHECK(format_percent(p.citations_single) == "7%");
}

TEST_CASE("rejection report layout") {
  std::ostringstream out;
  const std::vector<Rejection> rej{{3, "bad"}, {9, "worse"}};
  write_rejections(out, rej);
  CHECK(out.str() == "row\treason\n3\tbad\n9\tworse\n");
}

}  // TEST_SUITE
