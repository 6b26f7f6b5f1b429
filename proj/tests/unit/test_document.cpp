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

#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"

#include "citescale/document.hpp"
#include "citescale/error.hpp"

using namespace citescale;

TEST_SUITE("document") {

TEST_CASE("sha256 known answers") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK_THROWS_AS(file_digest("/nonexistent/file"), Error);
}

TEST_CASE("shortest round-trip doubles") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(1e-20) == "1e-20");
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_double(std::nan("")) == "nan");
  const double x = 0.1 + 0.2;
  CHECK(std::stod(format_double(x)) == x);
}

TEST_CASE("documents carry provenance in a fixed key order") {
  PowerLawFit fit;
  fit.label = "overall";
  fit.x_min = 22;
  fit.alpha = 2.35;
  const Provenance prov{"citescale fit --input c.txt", 42, "sha256:00"};
  const auto d = fit_document(fit, prov);
  std::vector<std::string> keys;
  for (auto it = d.begin(); it != d.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys.size() >= 5);
  CHECK(keys[0] == "kind");
  CHECK(keys[1] == "toolkit_version");
  CHECK(keys[2] == "command");
  CHECK(keys[3] == "seed");
  CHECK(keys[4] == "input_digest");
  CHECK(d["seed"] == 42);
  CHECK(d["toolkit_version"] == std::string(kToolkitVersion));
  const auto text = dump_document(d);
  CHECK(text.back() == '\n');
  CHECK(text.find("\n  \"kind\": \"powerlaw_fit\",") != std::string::npos);
  CHECK(Document::parse(text) == d);
}

TEST_CASE("gof and scaling documents") {
  GofResult g;
  g.n_sims = 2500;
  g.p_value = 0.77;
  const auto gd = gof_document(g, {});
  CHECK(gd["kind"] == "gof");
  CHECK(gd["n_sims"] == 2500);
  CHECK(gd["threshold"] == 0.10);

  ScalingFit f;
  f.exponent = 1.2;
  f.k = 2.5;
  f.t_stat = std::numeric_limits<double>::infinity();
  const std::vector<std::string> excluded{"Z"};
  const auto sd = scaling_document(f, ScalingMode::single, excluded, {});
  CHECK(sd["mode"] == "single");
  CHECK(sd["t_stat"].is_null());
  CHECK(sd["excluded"][0] == "Z");
  CHECK(sd["matthew_factor"].get<double>() == doctest::Approx(std::pow(2.0, 1.2)));
}

TEST_CASE("tabular exports") {
  std::ostringstream ccdf;
  const std::vector<CcdfPoint> pts{{1, 1.0, 1.0}, {3, 0.25, 0.125}};
  write_ccdf_csv(ccdf, pts);
  CHECK(ccdf.str() == "x,ccdf_empirical,ccdf_model\n1,1,1\n3,0.25,0.125\n");

  ScalingFit fit;
  fit.exponent = 1.0;
  fit.k = 2.0;
  std::ostringstream scatter;
  const std::vector<ScalingPoint> sp{{"Optics", 10, 30}};
  write_scatter_csv(scatter, sp, fit);
  CHECK(scatter.str() == "subfield,size,cbp,expected_cbp,indicator\nOptics,10,30,20,1.5\n");

  ModelComparison c;
  c.alternative = Family::exponential;
  c.lr = 39.51;
  c.p = 0.0;
  c.verdict = Verdict::power_law_favored;
  std::ostringstream tsv;
  const std::vector<ModelComparison> cs{c};
  write_comparison_tsv(tsv, cs);
  CHECK(tsv.str() == "alternative\tlr\tp\tverdict\nexponential\t39.51\t0\tpower_law_favored\n");
}

TEST_CASE("report renders each document kind") {
  PowerLawFit fit;
  fit.label = "Overall";
  fit.x_min = 22260;
  fit.x_min_sd = 8;
  fit.alpha = 2.35;
  fit.alpha_sd = 0.2;
  fit.ks = 0.03;
  GofResult g;
  g.p_value = 0.77;
  g.n_sims = 2500;
  ScalingFit s;
  s.exponent = 1.2;
  s.exponent_se = 0.05;
  s.r2 = 0.93;
  s.t_stat = 20.1;
  const std::vector<std::string> none;
  const std::vector<Document> docs{fit_document(fit, {}), gof_document(g, {}),
                                   scaling_document(s, ScalingMode::overall, none, {})};
  const auto text = render_report(docs);
  CHECK(text.find("22260 +/- 8") != std::string::npos);
  CHECK(text.find("2.35 +/- 0.20") != std::string::npos);
  CHECK(text.find("0.77") != std::string::npos);
  CHECK(text.find("overall") != std::string::npos);
  CHECK(text.find("2.30") != std::string::npos);

  Document unknown;
  unknown["kind"] = "mystery";
  const std::vector<Document> bad{unknown};
  CHECK_THROWS_AS(render_report(bad), Error);
}

}  // TEST_SUITE
