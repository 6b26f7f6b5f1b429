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

#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "citescale/altmodels.hpp"
#include "citescale/dataset.hpp"
#include "citescale/error.hpp"
#include "citescale/gof.hpp"
#include "citescale/ingest.hpp"
#include "citescale/powerlaw.hpp"
#include "citescale/scaling.hpp"
#include "citescale/special_functions.hpp"

namespace py = pybind11;
using namespace citescale;

namespace {

CitationSample to_sample(const std::vector<Count>& counts, const std::string& label) {
  return CitationSample(label, counts);
}

py::dict fit_dict(const PowerLawFit& f) {
  py::dict d;
  d["label"] = f.label;
  d["x_min"] = f.x_min;
  d["alpha"] = f.alpha;
  d["alpha_sd"] = f.alpha_sd;
  d["x_min_sd"] = f.x_min_sd;
  d["n_tail"] = f.n_tail;
  d["n_total"] = f.n_total;
  d["ks"] = f.ks;
  d["log_likelihood"] = f.log_likelihood;
  d["bootstrap_reps"] = f.bootstrap_reps;
  d["bootstrap_failures"] = f.bootstrap_failures;
  return d;
}

PowerLawFit run_fit(const std::vector<Count>& counts, std::size_t min_tail,
                    std::size_t bootstrap, std::uint64_t seed, unsigned threads,
                    std::optional<Count> x_min) {
  FitOptions opt;
  opt.min_tail = min_tail;
  opt.bootstrap_reps = bootstrap;
  opt.seed = seed;
  opt.threads = threads;
  opt.fixed_x_min = x_min;
  py::gil_scoped_release release;
  return fit_power_law(to_sample(counts, "data"), opt);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "citescale core bindings";
  m.attr("__version__") = CITESCALE_VERSION;
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("hurwitz_zeta", &hurwitz_zeta, py::arg("s"), py::arg("q"));

  m.def(
      "fit_alpha",
      [](const std::vector<Count>& counts, Count x_min) {
        const auto est = fit_alpha(to_sample(counts, "data"), x_min);
        return py::make_tuple(est.alpha, est.log_likelihood);
      },
      py::arg("counts"), py::arg("x_min"),
      "Discrete MLE (alpha, log-likelihood) on the tail at a fixed x_min.");

  m.def(
      "fit_power_law",
      [](const std::vector<Count>& counts, std::size_t min_tail, std::size_t bootstrap,
         std::uint64_t seed, unsigned threads, std::optional<Count> x_min) {
        return fit_dict(run_fit(counts, min_tail, bootstrap, seed, threads, x_min));
      },
      py::arg("counts"), py::arg("min_tail") = 50, py::arg("bootstrap") = 0,
      py::arg("seed") = 1, py::arg("threads") = 1, py::arg("x_min") = py::none());

  m.def(
      "ks_distance",
      [](const std::vector<Count>& counts, Count x_min, double alpha) {
        return ks_distance(to_sample(counts, "data"), DiscretePowerLaw(x_min, alpha));
      },
      py::arg("counts"), py::arg("x_min"), py::arg("alpha"));

  m.def("required_sims", &required_sims, py::arg("epsilon"));

  m.def(
      "gof_test",
      [](const std::vector<Count>& counts, std::size_t sims, std::uint64_t seed,
         std::size_t min_tail, unsigned threads, std::optional<Count> x_min) {
        const auto sample = to_sample(counts, "data");
        const auto fit = run_fit(counts, min_tail, 0, seed, threads, x_min);
        GofResult r;
        {
          py::gil_scoped_release release;
          r = gof_test(sample, fit, sims, seed, {threads, {}});
        }
        py::dict d;
        d["ks_empirical"] = r.ks_empirical;
        d["n_sims"] = r.n_sims;
        d["n_exceeding"] = r.n_exceeding;
        d["n_failed"] = r.n_failed;
        d["p_value"] = r.p_value;
        d["ruled_out"] = r.ruled_out;
        return d;
      },
      py::arg("counts"), py::arg("sims") = 2500, py::arg("seed") = 1,
      py::arg("min_tail") = 50, py::arg("threads") = 1, py::arg("x_min") = py::none());

  m.def(
      "compare_models",
      [](const std::vector<Count>& counts, std::vector<std::string> families,
         std::size_t min_tail, std::optional<Count> x_min) {
        const auto sample = to_sample(counts, "data");
        const auto fit = run_fit(counts, min_tail, 0, 1, 1, x_min);
        std::vector<Family> fams;
        for (const auto& f : families) fams.push_back(parse_family(f));
        py::list out;
        for (const auto& c : compare_models(sample, fit, fams)) {
          py::dict d;
          d["alternative"] = std::string(family_name(c.alternative));
          d["lr"] = c.lr;
          d["normalized_lr"] = c.normalized_lr;
          d["p"] = c.p;
          d["verdict"] = std::string(verdict_name(c.verdict));
          d["nested"] = c.nested;
          d["log_likelihood"] = c.fit.log_likelihood;
          out.append(d);
        }
        return out;
      },
      py::arg("counts"),
      py::arg("families") =
          std::vector<std::string>{"lognormal", "exponential", "powerlaw_cutoff"},
      py::arg("min_tail") = 50, py::arg("x_min") = py::none());

  m.def(
      "sample_power_law",
      [](Count x_min, double alpha, std::size_t n, std::uint64_t seed, unsigned threads) {
        py::gil_scoped_release release;
        const auto s = sample_power_law(DiscretePowerLaw(x_min, alpha), n, seed, threads);
        return std::vector<Count>(s.counts().begin(), s.counts().end());
      },
      py::arg("x_min"), py::arg("alpha"), py::arg("n"), py::arg("seed") = 1,
      py::arg("threads") = 1, "Sorted draws from a discrete power law.");

  m.def(
      "sample_alternative",
      [](const std::string& family, Count x_min, std::size_t n, std::uint64_t seed,
         double alpha, double rate, double mu, double sigma) {
        AltFit fit;
        fit.family = parse_family(family);
        fit.x_min = x_min;
        fit.alpha = alpha;
        fit.rate = rate;
        fit.mu = mu;
        fit.sigma = sigma;
        py::gil_scoped_release release;
        const auto s = sample_alternative(fit, n, seed);
        return std::vector<Count>(s.counts().begin(), s.counts().end());
      },
      py::arg("family"), py::arg("x_min"), py::arg("n"), py::arg("seed") = 1,
      py::arg("alpha") = 0.0, py::arg("rate") = 0.0, py::arg("mu") = 0.0,
      py::arg("sigma") = 1.0);

  m.def(
      "scaling_fit",
      [](const std::vector<double>& sizes, const std::vector<double>& cbp, bool natural) {
        if (sizes.size() != cbp.size()) throw Error("sizes and cbp differ in length");
        std::vector<ScalingPoint> pts;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
          pts.push_back({std::to_string(i), sizes[i], cbp[i]});
        }
        const auto f = scaling_fit(pts, natural ? LogBase::natural : LogBase::ten);
        py::dict d;
        d["exponent"] = f.exponent;
        d["exponent_se"] = f.exponent_se;
        d["k"] = f.k;
        d["r2"] = f.r2;
        d["t_stat"] = f.t_stat;
        d["p_value"] = f.p_value;
        d["n_points"] = f.n_points;
        return d;
      },
      py::arg("sizes"), py::arg("cbp"), py::arg("natural_log") = false);

  m.def("matthew_factor", &matthew_factor, py::arg("exponent"));

  m.def(
      "parse_export",
      [](const std::string& text) {
        std::istringstream in(text);
        const auto r = parse_export(in);
        py::list records;
        for (const auto& rec : r.records) {
          py::dict d;
          d["record_id"] = rec.record_id;
          d["authors"] = rec.authors;
          d["title"] = rec.title;
          d["journal"] = rec.journal;
          d["doc_type"] = rec.doc_type;
          d["citations"] = rec.citations;
          d["year"] = rec.year;
          records.append(d);
        }
        py::list rejections;
        for (const auto& rej : r.rejections) {
          rejections.append(py::make_tuple(rej.row, rej.reason));
        }
        return py::make_tuple(records, rejections);
      },
      py::arg("text"), "Parse a tab-delimited export; returns (records, rejections).");
}
