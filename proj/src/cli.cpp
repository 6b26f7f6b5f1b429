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

#include "citescale/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "citescale/altmodels.hpp"
#include "citescale/dataset.hpp"
#include "citescale/document.hpp"
#include "citescale/error.hpp"
#include "citescale/gof.hpp"
#include "citescale/ingest.hpp"
#include "citescale/powerlaw.hpp"
#include "citescale/random.hpp"
#include "citescale/scaling.hpp"

namespace citescale::cli {

namespace {

namespace fs = std::filesystem;

// Stream offset for the goodness-of-fit replicates so they never share
// seeds with the bootstrap replicates of the same run.
constexpr std::uint64_t kGofStream = 0x676f66;

std::uint64_t gof_seed(std::uint64_t seed) { return derive_seed(seed, kGofStream); }

// Flags that change where outputs go or how fast they are produced, never
// what they contain.
bool is_placement_flag(std::string_view arg, bool& takes_value) {
  static constexpr std::string_view kValued[] = {"--threads", "--out", "--output"};
  for (auto flag : kValued) {
    if (arg == flag) {
      takes_value = true;
      return true;
    }
    if (arg.size() > flag.size() && arg.substr(0, flag.size()) == flag &&
        arg[flag.size()] == '=') {
      takes_value = false;
      return true;
    }
  }
  takes_value = false;
  return arg == "--quiet" || arg == "-q";
}

std::string recorded_command(int argc, const char* const* argv) {
  std::string out = "citescale";
  for (int i = 1; i < argc; ++i) {
    bool takes_value = false;
    if (is_placement_flag(argv[i], takes_value)) {
      if (takes_value) ++i;
      continue;
    }
    out += ' ';
    out += argv[i];
  }
  return out;
}

struct Artifact {
  fs::path path;
  std::string content;
};

void write_artifacts(const std::vector<Artifact>& artifacts) {
  for (const auto& a : artifacts) {
    if (a.path.has_parent_path()) fs::create_directories(a.path.parent_path());
    std::ofstream f(a.path, std::ios::binary);
    if (!f) throw Error("cannot write '" + a.path.string() + "'");
    f << a.content;
    f.close();
    if (!f) throw Error("failed writing '" + a.path.string() + "'");
  }
}

std::function<void(std::size_t, std::size_t)> progress_printer(
    std::ostream& err, bool quiet, std::string what) {
  if (quiet) return {};
  return [&err, what = std::move(what), last = std::size_t{0}](
             std::size_t done, std::size_t total) mutable {
    const std::size_t step = std::max<std::size_t>(1, total / 10);
    if (done == total || done >= last + step) {
      last = done;
      err << what << ' ' << done << '/' << total << '\n';
    }
  };
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  try {
    return Document::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error("'" + path + "' is not a valid document: " + e.what());
  }
}

CitationSample load_counts(const std::string& path, const std::string& label) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  return read_counts(in, label.empty() ? fs::path(path).stem().string() : label);
}

// Rebuilds the parts of a fit that gof and compare need from its document.
PowerLawFit fit_from_document(const Document& doc) {
  if (doc.value("kind", std::string()) != "powerlaw_fit") {
    throw Error("--fit document is not a power-law fit");
  }
  PowerLawFit fit;
  fit.label = doc.at("label").get<std::string>();
  fit.x_min = doc.at("x_min").get<Count>();
  fit.alpha = doc.at("alpha").get<double>();
  fit.n_tail = doc.at("n_tail").get<std::size_t>();
  fit.n_total = doc.at("n_total").get<std::size_t>();
  fit.ks = doc.at("ks").get<double>();
  fit.log_likelihood = doc.at("log_likelihood").get<double>();
  fit.min_tail = doc.at("min_tail").get<std::size_t>();
  fit.x_min_fixed = doc.at("x_min_fixed").get<bool>();
  return fit;
}

struct Common {
  std::string input;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool quiet = false;
  std::string label;
};

void add_common(CLI::App* cmd, Common& c, bool with_out = true) {
  cmd->add_option("--input,-i", c.input, "Input file")->required();
  if (with_out) cmd->add_option("--out,-o", c.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  cmd->add_option("--threads", c.threads, "Worker threads")->capture_default_str()
      ->check(CLI::Range(1u, 1024u));
  cmd->add_flag("--quiet,-q", c.quiet, "No progress on stderr");
}

struct SimsChoice {
  std::optional<std::size_t> sims;
  std::optional<double> epsilon;

  std::size_t resolve() const {
    if (sims) {
      if (*sims == 0) throw Error("--sims must be positive");
      return *sims;
    }
    return required_sims(epsilon.value_or(0.01));
  }
};

void add_sims(CLI::App* cmd, SimsChoice& s) {
  auto* sims = cmd->add_option("--sims", s.sims, "Goodness-of-fit simulations");
  auto* eps = cmd->add_option("--epsilon", s.epsilon,
                              "Target p-value accuracy (default 0.01)");
  sims->excludes(eps);
  eps->excludes(sims);
}

struct FitArgs {
  Common common;
  SimsChoice sims;
  std::size_t bootstrap = 1000;
  std::size_t min_tail = 50;
  std::optional<Count> x_min;
  bool gof = false;
};

FitOptions fit_options(const FitArgs& a, std::ostream& err) {
  FitOptions opt;
  opt.min_tail = a.min_tail;
  opt.bootstrap_reps = a.bootstrap;
  opt.seed = a.common.seed;
  opt.threads = a.common.threads;
  if (a.x_min) {
    if (*a.x_min == 0) throw Error("--xmin must be positive");
    opt.fixed_x_min = a.x_min;
  }
  opt.progress = progress_printer(err, a.common.quiet, "bootstrap");
  return opt;
}

int cmd_fit(const FitArgs& a, const std::string& command, std::ostream& out,
            std::ostream& err) {
  const auto sample = load_counts(a.common.input, a.common.label);
  const Provenance prov{command, a.common.seed, file_digest(a.common.input)};
  const auto fit = fit_power_law(sample, fit_options(a, err));

  std::vector<Document> docs{fit_document(fit, prov)};
  if (a.gof) {
    GofOptions gopt{a.common.threads, progress_printer(err, a.common.quiet, "gof")};
    const auto gof = gof_test(sample, fit, a.sims.resolve(),
                              gof_seed(a.common.seed), gopt);
    docs.push_back(gof_document(gof, prov));
  }

  const fs::path dir(a.common.out_dir);
  std::vector<Artifact> artifacts{{dir / "fit.json", dump_document(docs[0])}};
  if (a.gof) artifacts.push_back({dir / "gof.json", dump_document(docs[1])});
  std::ostringstream ccdf;
  write_ccdf_csv(ccdf, ccdf_points(sample, fit));
  artifacts.push_back({dir / "ccdf.csv", ccdf.str()});
  write_artifacts(artifacts);
  out << render_report(docs);
  return 0;
}

struct GofArgs {
  Common common;
  SimsChoice sims;
  std::string fit_path;
  std::size_t min_tail = 50;
  std::optional<Count> x_min;
};

PowerLawFit fit_or_load(const CitationSample& sample, const std::string& fit_path,
                        std::size_t min_tail, std::optional<Count> x_min,
                        unsigned threads) {
  if (!fit_path.empty()) {
    auto fit = fit_from_document(read_document(fit_path));
    fit.label = sample.label();
    return fit;
  }
  FitOptions opt;
  opt.min_tail = min_tail;
  opt.bootstrap_reps = 0;
  opt.threads = threads;
  if (x_min) {
    if (*x_min == 0) throw Error("--xmin must be positive");
    opt.fixed_x_min = x_min;
  }
  return fit_power_law(sample, opt);
}

int cmd_gof(const GofArgs& a, const std::string& command, std::ostream& out,
            std::ostream& err) {
  const auto sample = load_counts(a.common.input, a.common.label);
  const Provenance prov{command, a.common.seed, file_digest(a.common.input)};
  const auto fit =
      fit_or_load(sample, a.fit_path, a.min_tail, a.x_min, a.common.threads);
  GofOptions gopt{a.common.threads, progress_printer(err, a.common.quiet, "gof")};
  const auto gof =
      gof_test(sample, fit, a.sims.resolve(), gof_seed(a.common.seed), gopt);
  const std::vector<Document> docs{gof_document(gof, prov)};
  write_artifacts({{fs::path(a.common.out_dir) / "gof.json", dump_document(docs[0])}});
  out << render_report(docs);
  return 0;
}

struct CompareArgs {
  Common common;
  std::string fit_path;
  std::vector<std::string> families;
  std::size_t min_tail = 50;
  std::optional<Count> x_min;
};

int cmd_compare(const CompareArgs& a, const std::string& command, std::ostream& out,
                std::ostream&) {
  std::vector<Family> families;
  if (a.families.empty()) {
    families = {Family::lognormal, Family::exponential, Family::powerlaw_cutoff};
  } else {
    for (const auto& name : a.families) families.push_back(parse_family(name));
  }
  const auto sample = load_counts(a.common.input, a.common.label);
  const Provenance prov{command, a.common.seed, file_digest(a.common.input)};
  const auto fit =
      fit_or_load(sample, a.fit_path, a.min_tail, a.x_min, a.common.threads);
  const auto comparisons = compare_models(sample, fit, families);
  const std::vector<Document> docs{comparison_document(fit, comparisons, prov)};
  std::ostringstream tsv;
  write_comparison_tsv(tsv, comparisons);
  const fs::path dir(a.common.out_dir);
  write_artifacts({{dir / "comparison.json", dump_document(docs[0])},
                   {dir / "comparison.tsv", tsv.str()}});
  out << render_report(docs);
  return 0;
}

struct ScalingArgs {
  Common common;
  std::vector<std::string> modes;
  bool natural_log = false;
};

int cmd_scaling(const ScalingArgs& a, const std::string& command, std::ostream& out,
                std::ostream&) {
  std::vector<ScalingMode> modes;
  if (a.modes.empty()) {
    modes = {ScalingMode::overall, ScalingMode::collaboration, ScalingMode::single};
  } else {
    for (const auto& name : a.modes) modes.push_back(parse_mode(name));
  }
  std::ifstream in(a.common.input);
  if (!in) throw Error("cannot read '" + a.common.input + "'");
  const auto aggregates = read_aggregates(in);
  const Provenance prov{command, a.common.seed, file_digest(a.common.input)};
  const LogBase base = a.natural_log ? LogBase::natural : LogBase::ten;

  std::vector<Document> docs;
  std::vector<Artifact> artifacts;
  const fs::path dir(a.common.out_dir);
  for (auto mode : modes) {
    const std::string name(mode_name(mode));
    const auto mp = points_for_mode(aggregates, mode);
    if (mp.points.size() < 3) {
      throw Error("mode '" + name + "': " + std::to_string(mp.points.size()) +
                  " usable subfields, need at least 3");
    }
    ScalingFit fit;
    try {
      fit = scaling_fit(mp.points, base);
    } catch (const Error& e) {
      throw Error("mode '" + name + "': " + e.what());
    }
    docs.push_back(scaling_document(fit, mode, mp.excluded, prov));
    std::ostringstream scatter;
    write_scatter_csv(scatter, mp.points, fit);
    artifacts.push_back({dir / ("scaling_" + name + ".json"), dump_document(docs.back())});
    artifacts.push_back({dir / ("scatter_" + name + ".csv"), scatter.str()});
  }
  write_artifacts(artifacts);
  out << render_report(docs);
  return 0;
}

struct SimulateArgs {
  std::string family;
  std::optional<double> alpha, lambda, mu, sigma;
  Count x_min = 1;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string output;
  bool quiet = false;
};

double need(const std::optional<double>& v, const char* flag, const std::string& family) {
  if (!v) throw Error(std::string(flag) + " is required for family '" + family + "'");
  if (!std::isfinite(*v)) throw Error(std::string(flag) + " must be finite");
  return *v;
}

int cmd_simulate(const SimulateArgs& a, const std::string& command, std::ostream& out,
                 std::ostream&) {
  if (a.n == 0) throw Error("--n must be positive");
  if (a.x_min == 0) throw Error("--xmin must be positive");
  std::ostringstream meta;
  meta << "# citescale " << kToolkitVersion << " simulate\n"
       << "# command: " << command << '\n'
       << "# family: "
       << (a.family == "powerlaw" ? std::string_view("powerlaw")
                                  : family_name(parse_family(a.family)))
       << '\n'
       << "# x_min: " << a.x_min << '\n';
  std::optional<CitationSample> sample;
  if (a.family == "powerlaw") {
    const double alpha = need(a.alpha, "--alpha", a.family);
    if (!(alpha > 1.0)) throw Error("--alpha must exceed 1 for a power law");
    meta << "# alpha: " << format_double(alpha) << '\n';
    sample = sample_power_law(DiscretePowerLaw(a.x_min, alpha), a.n, a.seed, a.threads);
  } else {
    AltFit fit;
    fit.family = parse_family(a.family);
    fit.x_min = a.x_min;
    switch (fit.family) {
      case Family::exponential:
        fit.rate = need(a.lambda, "--lambda", a.family);
        meta << "# lambda: " << format_double(fit.rate) << '\n';
        break;
      case Family::lognormal:
        fit.mu = need(a.mu, "--mu", a.family);
        fit.sigma = need(a.sigma, "--sigma", a.family);
        meta << "# mu: " << format_double(fit.mu) << '\n'
             << "# sigma: " << format_double(fit.sigma) << '\n';
        break;
      case Family::powerlaw_cutoff:
        fit.alpha = need(a.alpha, "--alpha", a.family);
        fit.rate = need(a.lambda, "--lambda", a.family);
        meta << "# alpha: " << format_double(fit.alpha) << '\n'
             << "# lambda: " << format_double(fit.rate) << '\n';
        break;
    }
    sample = sample_alternative(fit, a.n, a.seed, a.threads);
  }
  meta << "# n: " << a.n << '\n' << "# seed: " << a.seed << '\n';
  std::ostringstream body;
  body << meta.str();
  write_counts(body, sample->counts());
  if (a.output.empty() || a.output == "-") {
    out << body.str();
    out.flush();
    if (!out) throw Error("failed writing counts to stdout");
  } else {
    write_artifacts({{fs::path(a.output), body.str()}});
  }
  return 0;
}

struct IngestArgs {
  Common common;
  std::string map_path;
  std::optional<int> year_from, year_to;
  ColumnNames columns;
};

int cmd_ingest(const IngestArgs& a, const std::string&, std::ostream& out,
               std::ostream&) {
  std::ifstream in(a.common.input, std::ios::binary);
  if (!in) throw Error("cannot read '" + a.common.input + "'");
  auto parsed = parse_export(in, a.columns);
  const auto records = filter_years(parsed.records, {a.year_from, a.year_to});
  std::vector<Rejection> rejections = std::move(parsed.rejections);
  std::vector<BiblioRecord> kept = records;

  const fs::path dir(a.common.out_dir);
  std::vector<Artifact> artifacts;
  std::optional<AggregateResult> agg;
  if (!a.map_path.empty()) {
    std::ifstream map_in(a.map_path);
    if (!map_in) throw Error("cannot read '" + a.map_path + "'");
    const auto map = ClassificationMap::read_csv(map_in);
    agg = build_aggregates(records, map);
    rejections.insert(rejections.end(), agg->rejections.begin(), agg->rejections.end());
    kept = agg->mapped;
    std::ostringstream tsv;
    write_aggregates(tsv, agg->aggregates);
    artifacts.push_back({dir / "aggregates.tsv", tsv.str()});
  } else {
    for (const auto& r : records) {
      if (r.authors.empty()) rejections.push_back({r.source_row, "anonymous record"});
    }
    std::erase_if(kept, [](const BiblioRecord& r) { return r.authors.empty(); });
  }
  std::stable_sort(rejections.begin(), rejections.end(),
                   [](const Rejection& x, const Rejection& y) { return x.row < y.row; });

  const auto counts = counts_by_mode(kept);
  auto counts_file = [](const std::vector<Count>& c) {
    std::ostringstream os;
    write_counts(os, c);
    return os.str();
  };
  artifacts.push_back({dir / "counts_overall.txt", counts_file(counts.overall)});
  artifacts.push_back({dir / "counts_collaboration.txt", counts_file(counts.collaboration)});
  artifacts.push_back({dir / "counts_single.txt", counts_file(counts.single)});
  std::ostringstream rej;
  write_rejections(rej, rejections);
  artifacts.push_back({dir / "rejections.tsv", rej.str()});
  write_artifacts(artifacts);

  out << "Records kept: " << kept.size() << " (rejected " << rejections.size()
      << ", duplicates " << parsed.duplicates << ", excluded document types "
      << parsed.excluded_doc_types << ")\n";
  if (!counts.collaboration.empty() && !counts.single.empty()) {
    const auto [c, s] = summarize_partition(
        CitationSample("collaboration", counts.collaboration),
        CitationSample("single", counts.single));
    out << "Collaboration: " << c.n_papers << " papers ("
        << format_percent(c.share_papers) << "), " << c.n_citations
        << " citations (" << format_percent(c.share_citations) << ")\n";
    out << "Single:        " << s.n_papers << " papers ("
        << format_percent(s.share_papers) << "), " << s.n_citations
        << " citations (" << format_percent(s.share_citations) << ")\n";
  }
  if (agg) out << "Subfields: " << agg->aggregates.size() << '\n';
  return 0;
}

int cmd_report(const std::vector<std::string>& files, std::ostream& out) {
  std::vector<Document> docs;
  for (const auto& f : files) docs.push_back(read_document(f));
  out << render_report(docs);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heavy-tailed citation analysis: power-law fitting, goodness of "
               "fit, model comparison and scaling regressions.",
               "citescale"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolkitVersion));

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Fit a discrete power law to counts");
  add_common(fit_cmd, fit.common);
  fit_cmd->add_option("--label", fit.common.label, "Dataset label (default: file stem)");
  fit_cmd->add_option("--bootstrap", fit.bootstrap, "Bootstrap replicates")->capture_default_str();
  fit_cmd->add_option("--min-tail", fit.min_tail, "Smallest admissible tail")->capture_default_str();
  fit_cmd->add_option("--xmin", fit.x_min, "Fix x_min instead of scanning");
  fit_cmd->add_flag("--gof", fit.gof, "Also run the goodness-of-fit test");
  add_sims(fit_cmd, fit.sims);

  GofArgs gof;
  auto* gof_cmd = app.add_subcommand("gof", "Goodness-of-fit test for a power-law fit");
  add_common(gof_cmd, gof.common);
  gof_cmd->add_option("--label", gof.common.label, "Dataset label (default: file stem)");
  gof_cmd->add_option("--fit", gof.fit_path, "fit.json from a previous run");
  gof_cmd->add_option("--min-tail", gof.min_tail, "Smallest admissible tail")->capture_default_str();
  gof_cmd->add_option("--xmin", gof.x_min, "Fix x_min instead of scanning");
  add_sims(gof_cmd, gof.sims);

  CompareArgs cmp;
  auto* cmp_cmd = app.add_subcommand("compare", "Likelihood-ratio tests against alternatives");
  add_common(cmp_cmd, cmp.common);
  cmp_cmd->add_option("--label", cmp.common.label, "Dataset label (default: file stem)");
  cmp_cmd->add_option("--fit", cmp.fit_path, "fit.json from a previous run");
  cmp_cmd->add_option("--family", cmp.families,
                      "lognormal, exponential, powerlaw_cutoff (default: all)")
      ->delimiter(',');
  cmp_cmd->add_option("--min-tail", cmp.min_tail, "Smallest admissible tail")->capture_default_str();
  cmp_cmd->add_option("--xmin", cmp.x_min, "Fix x_min instead of scanning");

  ScalingArgs sc;
  auto* sc_cmd = app.add_subcommand("scaling", "Size versus citation regressions");
  add_common(sc_cmd, sc.common);
  sc_cmd->add_option("--modes,--mode", sc.modes,
                     "overall, collaboration, single (default: all)")
      ->delimiter(',');
  sc_cmd->add_flag("--natural-log", sc.natural_log, "Regress on natural logs");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Write synthetic counts");
  sim_cmd->add_option("--family", sim.family,
                      "powerlaw, lognormal, exponential, cutoff")
      ->required();
  sim_cmd->add_option("--alpha", sim.alpha, "Power-law exponent");
  sim_cmd->add_option("--lambda", sim.lambda, "Exponential or cutoff rate");
  sim_cmd->add_option("--mu", sim.mu, "Lognormal location");
  sim_cmd->add_option("--sigma", sim.sigma, "Lognormal scale");
  sim_cmd->add_option("--xmin", sim.x_min, "Lower bound of the support")->capture_default_str();
  sim_cmd->add_option("--n", sim.n, "Number of draws")->required();
  sim_cmd->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
  sim_cmd->add_option("--threads", sim.threads, "Worker threads")->capture_default_str()
      ->check(CLI::Range(1u, 1024u));
  sim_cmd->add_option("--output,-o", sim.output, "Counts file (default: stdout)");
  sim_cmd->add_flag("--quiet,-q", sim.quiet, "Accepted for symmetry; no effect");

  IngestArgs ing;
  auto* ing_cmd = app.add_subcommand("ingest", "Parse a bibliographic export");
  add_common(ing_cmd, ing.common);
  ing_cmd->add_option("--map", ing.map_path, "Journal classification CSV");
  ing_cmd->add_option("--year-from", ing.year_from, "First publication year kept");
  ing_cmd->add_option("--year-to", ing.year_to, "Last publication year kept");
  ing_cmd->add_option("--col-authors", ing.columns.authors, "Authors column")->capture_default_str();
  ing_cmd->add_option("--col-title", ing.columns.title, "Title column")->capture_default_str();
  ing_cmd->add_option("--col-journal", ing.columns.journal, "Journal column")->capture_default_str();
  ing_cmd->add_option("--col-doctype", ing.columns.doc_type, "Document type column")->capture_default_str();
  ing_cmd->add_option("--col-cited", ing.columns.times_cited, "Times cited column")->capture_default_str();
  ing_cmd->add_option("--col-year", ing.columns.year, "Year column")->capture_default_str();
  ing_cmd->add_option("--col-id", ing.columns.unique_id, "Record id column")->capture_default_str();

  std::vector<std::string> report_files;
  auto* rep_cmd = app.add_subcommand("report", "Render documents as tables");
  rep_cmd->add_option("documents", report_files, "JSON documents")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const std::string command = recorded_command(argc, argv);
  try {
    if (*fit_cmd) return cmd_fit(fit, command, out, err);
    if (*gof_cmd) return cmd_gof(gof, command, out, err);
    if (*cmp_cmd) return cmd_compare(cmp, command, out, err);
    if (*sc_cmd) return cmd_scaling(sc, command, out, err);
    if (*sim_cmd) return cmd_simulate(sim, command, out, err);
    if (*ing_cmd) return cmd_ingest(ing, command, out, err);
    if (*rep_cmd) return cmd_report(report_files, out);
  } catch (const std::exception& e) {
    err << "citescale: error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace citescale::cli
