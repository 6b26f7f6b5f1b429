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

#include "citescale/document.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "citescale/error.hpp"

namespace citescale {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  const std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
  return "sha256:" + sha256_hex(bytes);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

namespace {

Document header(std::string_view kind, const Provenance& prov) {
  Document d;
  d["kind"] = kind;
  d["toolkit_version"] = kToolkitVersion;
  d["command"] = prov.command;
  d["seed"] = prov.seed;
  d["input_digest"] = prov.input_digest;
  return d;
}

// JSON has no infinities; they are stored as null.
nlohmann::ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

Document fit_document(const PowerLawFit& fit, const Provenance& prov) {
  auto d = header("powerlaw_fit", prov);
  d["label"] = fit.label;
  d["x_min"] = fit.x_min;
  d["x_min_sd"] = fit.x_min_sd;
  d["alpha"] = fit.alpha;
  d["alpha_sd"] = fit.alpha_sd;
  d["n_tail"] = fit.n_tail;
  d["n_total"] = fit.n_total;
  d["ks"] = fit.ks;
  d["log_likelihood"] = fit.log_likelihood;
  d["bootstrap_reps"] = fit.bootstrap_reps;
  d["bootstrap_failures"] = fit.bootstrap_failures;
  d["min_tail"] = fit.min_tail;
  d["x_min_fixed"] = fit.x_min_fixed;
  return d;
}

Document gof_document(const GofResult& gof, const Provenance& prov) {
  auto d = header("gof", prov);
  d["ks_empirical"] = gof.ks_empirical;
  d["n_sims"] = gof.n_sims;
  d["n_exceeding"] = gof.n_exceeding;
  d["n_failed"] = gof.n_failed;
  d["p_value"] = gof.p_value;
  d["ruled_out"] = gof.ruled_out;
  d["threshold"] = kPlausibilityThreshold;
  return d;
}

Document comparison_document(const PowerLawFit& pl,
                             std::span<const ModelComparison> comparisons,
                             const Provenance& prov) {
  auto d = header("model_comparison", prov);
  d["label"] = pl.label;
  d["x_min"] = pl.x_min;
  d["alpha"] = pl.alpha;
  d["n_tail"] = pl.n_tail;
  d["threshold"] = kComparisonThreshold;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& c : comparisons) {
    nlohmann::ordered_json row;
    row["alternative"] = family_name(c.alternative);
    row["lr"] = c.lr;
    row["normalized_lr"] = c.normalized_lr;
    row["p"] = c.p;
    row["verdict"] = verdict_name(c.verdict);
    row["nested"] = c.nested;
    row["log_likelihood"] = c.fit.log_likelihood;
    switch (c.alternative) {
      case Family::lognormal:
        row["mu"] = c.fit.mu;
        row["sigma"] = c.fit.sigma;
        break;
      case Family::exponential:
        row["rate"] = c.fit.rate;
        break;
      case Family::powerlaw_cutoff:
        row["alpha"] = c.fit.alpha;
        row["rate"] = c.fit.rate;
        break;
    }
    row["diagnostic"] = c.diagnostic;
    rows.push_back(std::move(row));
  }
  d["comparisons"] = std::move(rows);
  return d;
}

Document scaling_document(const ScalingFit& fit, ScalingMode mode,
                          std::span<const std::string> excluded,
                          const Provenance& prov) {
  auto d = header("scaling_fit", prov);
  d["mode"] = mode_name(mode);
  d["exponent"] = fit.exponent;
  d["exponent_se"] = fit.exponent_se;
  d["r2"] = fit.r2;
  d["t_stat"] = number(fit.t_stat);
  d["p_value"] = fit.p_value;
  d["df"] = fit.df;
  d["n_points"] = fit.n_points;
  d["k"] = fit.k;
  d["intercept_log10"] = fit.base == LogBase::ten ? fit.intercept_log
                                                  : fit.intercept_log / std::log(10.0);
  d["matthew_factor"] = matthew_factor(fit.exponent);
  d["excluded"] = std::vector<std::string>(excluded.begin(), excluded.end());
  return d;
}

std::string dump_document(const Document& doc) { return doc.dump(2) + "\n"; }

void write_ccdf_csv(std::ostream& out, std::span<const CcdfPoint> points) {
  out << "x,ccdf_empirical,ccdf_model\n";
  for (const auto& p : points) {
    out << p.x << ',' << format_double(p.empirical) << ','
        << format_double(p.model) << '\n';
  }
}

void write_scatter_csv(std::ostream& out, std::span<const ScalingPoint> points,
                       const ScalingFit& fit) {
  out << "subfield,size,cbp,expected_cbp,indicator\n";
  for (const auto& p : points) {
    out << p.subfield_id << ',' << format_double(p.size) << ','
        << format_double(p.cbp) << ',' << format_double(expected_cbp(fit, p.size))
        << ',' << format_double(performance_indicator(p, fit)) << '\n';
  }
}

void write_comparison_tsv(std::ostream& out,
                          std::span<const ModelComparison> comparisons) {
  out << "alternative\tlr\tp\tverdict\n";
  for (const auto& c : comparisons) {
    out << family_name(c.alternative) << '\t' << format_double(c.lr) << '\t'
        << format_double(c.p) << '\t' << verdict_name(c.verdict) << '\n';
  }
}

namespace {

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

double num(const Document& d, const char* key) {
  const auto& v = d.at(key);
  return v.is_null() ? std::nan("") : v.get<double>();
}

}  // namespace

std::string render_report(std::span<const Document> docs) {
  std::ostringstream os;
  std::vector<const Document*> fits, gofs, comparisons, scalings;
  for (const auto& d : docs) {
    const auto kind = d.value("kind", std::string());
    if (kind == "powerlaw_fit") fits.push_back(&d);
    else if (kind == "gof") gofs.push_back(&d);
    else if (kind == "model_comparison") comparisons.push_back(&d);
    else if (kind == "scaling_fit") scalings.push_back(&d);
    else throw Error("unrecognized document kind '" + kind + "'");
  }

  if (!fits.empty()) {
    os << "Power-law fits\n";
    os << std::left << std::setw(24) << "Dataset" << std::setw(20) << "x_min"
       << std::setw(16) << "alpha" << std::setw(8) << "p" << "KS\n";
    for (std::size_t i = 0; i < fits.size(); ++i) {
      const auto& f = *fits[i];
      std::string p = "-";
      if (i < gofs.size()) p = fixed(num(*gofs[i], "p_value"), 2);
      os << std::left << std::setw(24) << f.at("label").get<std::string>()
         << std::setw(20)
         << (std::to_string(f.at("x_min").get<std::uint64_t>()) + " +/- " +
             fixed(num(f, "x_min_sd"), 0))
         << std::setw(16)
         << (fixed(num(f, "alpha"), 2) + " +/- " + fixed(num(f, "alpha_sd"), 2))
         << std::setw(8) << p << fixed(num(f, "ks"), 2) << '\n';
    }
    os << '\n';
  }
  if (fits.empty() && !gofs.empty()) {
    os << "Goodness of fit\n";
    for (const auto* g : gofs) {
      os << "  p = " << fixed(num(*g, "p_value"), 2) << " over "
         << g->at("n_sims").get<std::size_t>() << " simulations, "
         << (g->at("ruled_out").get<bool>() ? "ruled out" : "plausible") << '\n';
    }
    os << '\n';
  }
  for (const auto* c : comparisons) {
    os << "Likelihood-ratio comparisons (" << c->at("label").get<std::string>()
       << ", x_min " << c->at("x_min").get<std::uint64_t>() << ")\n";
    os << std::left << std::setw(18) << "Alternative" << std::setw(14) << "LR"
       << std::setw(8) << "p" << "Verdict\n";
    for (const auto& row : c->at("comparisons")) {
      os << std::left << std::setw(18) << row.at("alternative").get<std::string>()
         << std::setw(14) << fixed(num(row, "lr"), 2) << std::setw(8)
         << fixed(num(row, "p"), 2) << row.at("verdict").get<std::string>() << '\n';
    }
    os << '\n';
  }
  if (!scalings.empty()) {
    os << "Scaling exponents\n";
    os << std::left << std::setw(16) << "Mode" << std::setw(8) << "Alpha"
       << std::setw(8) << "SD" << std::setw(8) << "R2" << std::setw(10) << "t"
       << "2^Alpha\n";
    for (const auto* s : scalings) {
      os << std::left << std::setw(16) << s->at("mode").get<std::string>()
         << std::setw(8) << fixed(num(*s, "exponent"), 2) << std::setw(8)
         << fixed(num(*s, "exponent_se"), 2) << std::setw(8)
         << fixed(num(*s, "r2"), 2) << std::setw(10) << fixed(num(*s, "t_stat"), 2)
         << fixed(num(*s, "matthew_factor"), 2) << '\n';
    }
  }
  return os.str();
}

}  // namespace citescale
