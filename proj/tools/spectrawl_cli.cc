// Copyright 2026 The Spectrawl Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spectrawl/benchmark.hpp"
#include "spectrawl/corpus.hpp"
#include "spectrawl/csl.hpp"
#include "spectrawl/discriminate.hpp"
#include "spectrawl/error.hpp"
#include "spectrawl/gnn.hpp"
#include "spectrawl/graph_io.hpp"
#include "spectrawl/reproduce.hpp"
#include "spectrawl/spectral.hpp"
#include "spectrawl/wl.hpp"

namespace spectrawl::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// Settings shared by all subcommands. Values come from defaults, then the
// config file (--config or SPECTRAWL_CONFIG), then explicit flags.
struct CliConfig {
  std::optional<std::vector<double>> filter;
  std::string sigma = "relu";
  double tol = kDefaultEmbeddingTolerance;
  std::optional<double> group_tol;
  std::optional<int> depth;
  double variance = 1.0;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::string distribution = "gaussian";
  unsigned threads = 0;
  CslSpec csl;
  std::optional<std::string> out;
  std::optional<std::string> format;
};

// Flag values; unset flags leave the config untouched.
struct Flags {
  std::optional<std::string> filter;
  std::optional<std::string> sigma;
  std::optional<double> tol;
  std::optional<double> group_tol;
  std::optional<int> depth;
  std::optional<double> variance;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> distribution;
  std::optional<unsigned> threads;
  std::optional<std::string> config;
  std::optional<std::string> out;
  std::optional<std::string> format;
};

std::vector<double> ParseFilter(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kConfigError, "bad filter coefficient '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::kConfigError, "empty filter");
  return out;
}

void ApplyFile(CliConfig& cfg, const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfigError, path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kConfigError, "config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "filter") {
        cfg.filter = value.is_string() ? ParseFilter(value.get<std::string>())
                                       : value.get<std::vector<double>>();
      } else if (key == "sigma") {
        cfg.sigma = value.get<std::string>();
      } else if (key == "tol") {
        cfg.tol = value.get<double>();
      } else if (key == "group_tol") {
        cfg.group_tol = value.get<double>();
      } else if (key == "depth") {
        cfg.depth = value.get<int>();
      } else if (key == "variance") {
        cfg.variance = value.get<double>();
      } else if (key == "samples") {
        cfg.samples = value.get<std::uint64_t>();
      } else if (key == "seed") {
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "distribution") {
        cfg.distribution = value.get<std::string>();
      } else if (key == "threads") {
        cfg.threads = value.get<unsigned>();
      } else if (key == "out") {
        cfg.out = value.get<std::string>();
      } else if (key == "format") {
        cfg.format = value.get<std::string>();
      } else if (key == "csl") {
        for (const auto& [ck, cv] : value.items()) {
          if (ck == "n") cfg.csl.n = cv.get<int>();
          else if (ck == "skips") cfg.csl.skips = cv.get<std::vector<int>>();
          else if (ck == "copies_per_class") cfg.csl.copies_per_class = cv.get<int>();
          else if (ck == "seed") cfg.csl.seed = cv.get<std::uint64_t>();
          else throw Error(ErrorCode::kConfigError, "unknown csl key '" + ck + "'");
        }
      } else {
        throw Error(ErrorCode::kConfigError, "unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfigError, path.string() + ": " + e.what());
  }
}

CliConfig Resolve(const Flags& flags) {
  CliConfig cfg;
  if (flags.config) {
    ApplyFile(cfg, *flags.config);
  } else if (const char* env = std::getenv("SPECTRAWL_CONFIG"); env && *env) {
    ApplyFile(cfg, env);
  }
  if (flags.filter) cfg.filter = ParseFilter(*flags.filter);
  if (flags.sigma) cfg.sigma = *flags.sigma;
  if (flags.tol) cfg.tol = *flags.tol;
  if (flags.group_tol) cfg.group_tol = *flags.group_tol;
  if (flags.depth) cfg.depth = *flags.depth;
  if (flags.variance) cfg.variance = *flags.variance;
  if (flags.samples) cfg.samples = *flags.samples;
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.distribution) cfg.distribution = *flags.distribution;
  if (flags.threads) cfg.threads = *flags.threads;
  if (flags.out) cfg.out = *flags.out;
  if (flags.format) cfg.format = *flags.format;
  if (cfg.tol <= 0.0) throw Error(ErrorCode::kConfigError, "tol must be positive");
  if (cfg.format && *cfg.format != "json" && *cfg.format != "csv") {
    throw Error(ErrorCode::kConfigError, "format must be json or csv");
  }
  return cfg;
}

FilterParams FilterOr(const CliConfig& cfg, const FilterParams& fallback) {
  return cfg.filter ? FilterParams(*cfg.filter) : fallback;
}

Nonlinearity Sigma(const CliConfig& cfg) {
  try {
    return Nonlinearity::Parse(cfg.sigma);
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
}

WhiteNoise Distribution(const CliConfig& cfg) {
  if (cfg.distribution == "gaussian") return WhiteNoise::kGaussian;
  if (cfg.distribution == "rademacher") return WhiteNoise::kRademacher;
  throw Error(ErrorCode::kConfigError, "distribution must be gaussian or rademacher");
}

SpectralOptions Spectral(const CliConfig& cfg) {
  SpectralOptions opts;
  opts.group_tolerance = cfg.group_tol;
  return opts;
}

// A graph argument is a file path, a corpus key, or csl:R.
Graph ResolveGraph(const std::string& arg, const CliConfig& cfg) {
  if (fs::exists(arg)) return LoadGraph(arg);
  if (auto g = CorpusGraph(arg)) return *g;
  if (arg.rfind("csl:", 0) == 0) {
    int skip = 0;
    try {
      skip = std::stoi(arg.substr(4));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidSkip, "bad skip in '" + arg + "'");
    }
    return CslBaseGraph(cfg.csl.n, skip);
  }
  throw Error(ErrorCode::kIoError, "no graph file or corpus entry named '" + arg + "'");
}

// Six significant digits; magnitudes below 1e-12 print as 0.
std::string Num(double v) {
  if (std::abs(v) < 1e-12) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Rounds every number in a JSON tree to six significant digits.
void RoundNumbers(json& j) {
  if (j.is_number_float()) {
    j = std::stod(Num(j.get<double>()));
  } else if (j.is_structured()) {
    for (auto& child : j) RoundNumbers(child);
  }
}

void Emit(const CliConfig& cfg, const std::string& text) {
  if (!cfg.out) {
    std::cout << text;
    return;
  }
  std::ofstream out(*cfg.out, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + *cfg.out);
}

std::string Dump(json j) {
  RoundNumbers(j);
  return j.dump(2) + "\n";
}

bool WantJson(const CliConfig& cfg) { return cfg.format && *cfg.format == "json"; }

int CheckExpect(const std::optional<std::string>& expect, std::string_view got) {
  return expect && *expect != got ? kExitMismatch : kExitOk;
}

// ---- subcommands ----

int CmdWl(const CliConfig& cfg, const std::vector<std::string>& graphs,
          const std::string& init, const std::optional<std::string>& expect) {
  const WlInit mode = init == "degree" ? WlInit::kDegree : WlInit::kUniform;
  if (graphs.size() == 2) {
    const Graph a = ResolveGraph(graphs[0], cfg);
    const Graph b = ResolveGraph(graphs[1], cfg);
    const std::string verdict(WlVerdictName(WlDistinguish(a, b)));
    if (WantJson(cfg)) {
      Emit(cfg, Dump({{"pair", {a.name(), b.name()}}, {"wl", verdict}}));
    } else {
      Emit(cfg, a.name() + " vs " + b.name() + ": " + verdict + "\n");
    }
    return CheckExpect(expect, verdict);
  }
  const Graph g = ResolveGraph(graphs[0], cfg);
  const WlColoring c = WlRefine(g, mode);
  if (WantJson(cfg)) {
    json rounds = json::array();
    for (const auto& colors : c.colors) rounds.push_back(colors);
    Emit(cfg, Dump({{"graph", g.name()}, {"stable_at", c.stable_at}, {"colors", rounds}}));
    return kExitOk;
  }
  std::ostringstream out;
  for (std::size_t t = 0; t < c.colors.size(); ++t) {
    out << "round " << t << " (" << c.NumClasses(static_cast<int>(t)) << " classes):";
    for (int col : c.colors[t]) out << ' ' << col;
    out << '\n';
  }
  out << "stable_at " << c.stable_at << '\n';
  Emit(cfg, out.str());
  return kExitOk;
}

json SpectrumJson(const Graph& g, const Spectrum& s) {
  json groups = json::array();
  for (const auto& grp : s.groups) {
    const Eigenspace space = EigenspaceOf(s, grp.value, s.group_tolerance);
    groups.push_back({{"value", grp.value},
                      {"multiplicity", grp.multiplicity()},
                      {"one_product", (space.basis.transpose() * Vector::Ones(s.size())).norm()}});
  }
  return {{"graph", g.name()}, {"groups", groups}};
}

std::string SpectrumText(const Graph& g, const Spectrum& s) {
  std::ostringstream out;
  out << g.name() << " (n=" << g.size() << ")\n  lambda  multiplicity  |V^T 1|\n";
  for (auto it = s.groups.rbegin(); it != s.groups.rend(); ++it) {
    const Eigenspace space = EigenspaceOf(s, it->value, s.group_tolerance);
    out << "  " << Num(it->value) << "  " << it->multiplicity() << "  "
        << Num((space.basis.transpose() * Vector::Ones(s.size())).norm()) << '\n';
  }
  return out.str();
}

int CmdSpectral(const CliConfig& cfg, const std::vector<std::string>& graphs) {
  std::vector<Graph> gs;
  std::vector<Spectrum> ss;
  for (const auto& arg : graphs) {
    gs.push_back(ResolveGraph(arg, cfg));
    ss.push_back(Eigendecompose(gs.back(), Spectral(cfg)));
  }
  std::optional<SpectralWitness> witness;
  if (gs.size() == 2) {
    witness = SpectraDiffer(ss[0], ss[1], cfg.group_tol.value_or(kDefaultSpectralTolerance));
  }
  if (WantJson(cfg)) {
    json out;
    out["spectra"] = json::array();
    for (std::size_t i = 0; i < gs.size(); ++i) out["spectra"].push_back(SpectrumJson(gs[i], ss[i]));
    if (gs.size() == 2) {
      out["witness"] = witness ? json{{"value", witness->value},
                                      {"multiplicity", {witness->multiplicity1,
                                                        witness->multiplicity2}}}
                               : json(nullptr);
    }
    Emit(cfg, Dump(out));
    return kExitOk;
  }
  std::string text;
  for (std::size_t i = 0; i < gs.size(); ++i) text += SpectrumText(gs[i], ss[i]);
  if (gs.size() == 2) {
    text += witness ? "witness lambda " + Num(witness->value) + " (multiplicity " +
                          std::to_string(witness->multiplicity1) + " vs " +
                          std::to_string(witness->multiplicity2) + ")\n"
                    : std::string("spectra agree\n");
  }
  Emit(cfg, text);
  return kExitOk;
}

int CmdFeatures(const CliConfig& cfg, const std::string& graph, bool wl) {
  const Graph g = ResolveGraph(graph, cfg);
  const int depth = cfg.depth.value_or(10);
  const FeatureMatrix x = wl ? WlFeatureMatrix(g, depth) : DiagPowers(g, depth);
  const int first = wl ? 1 : 0;
  if (WantJson(cfg)) {
    json rows = json::array();
    for (int i = 0; i < x.rows(); ++i) {
      json row = json::array();
      for (int k = 0; k < x.cols(); ++k) row.push_back(x(i, k));
      rows.push_back(row);
    }
    Emit(cfg, Dump({{"graph", g.name()}, {"kind", wl ? "wl" : "diag_powers"}, {"rows", rows}}));
    return kExitOk;
  }
  std::ostringstream out;
  out << "node";
  for (int k = 0; k < x.cols(); ++k) out << ",k" << (k + first);
  out << '\n';
  for (int i = 0; i < x.rows(); ++i) {
    out << i;
    for (int k = 0; k < x.cols(); ++k) out << ',' << Num(x(i, k));
    out << '\n';
  }
  Emit(cfg, out.str());
  return kExitOk;
}

int CmdDiscriminate(const CliConfig& cfg, const std::string& a, const std::string& b,
                    const std::optional<std::string>& expect) {
  DiscriminationConfig dc;
  dc.filter = FilterOr(cfg, ExamplePairFilter());
  dc.sigma = Sigma(cfg);
  dc.embed_tol = cfg.tol;
  if (cfg.group_tol) dc.spectral_tol = *cfg.group_tol;
  dc.condition_depth = cfg.depth;
  const DiscriminationReport r =
      DiscriminatePair(ResolveGraph(a, cfg), ResolveGraph(b, cfg), dc);
  Emit(cfg, Dump(ReportToJson(r)));
  return CheckExpect(expect, SeparabilityName(r.overall));
}

int CmdCsl(const CliConfig& cfg, const std::optional<std::string>& generate,
           const std::optional<std::string>& classify) {
  if (!generate && !classify) {
    throw Error(ErrorCode::kConfigError, "csl needs --generate DIR or --classify DIR");
  }
  if (generate) {
    CslSpec spec = cfg.csl;
    spec.seed = cfg.seed != 0 ? cfg.seed : spec.seed;
    const CslDataset data = CslGenerate(spec);
    CslWrite(data, *generate);
    std::cout << "wrote " << data.samples.size() << " graphs to " << *generate << '\n';
    return kExitOk;
  }
  const CslDataset data = CslLoad(*classify);
  const CslClassification c = CslClassify(data);
  if (WantJson(cfg)) {
    json classes = json::array();
    for (std::size_t k = 0; k < c.centroids.size(); ++k) {
      classes.push_back({{"skip", data.spec.skips[k]}, {"score", c.centroids[k]}});
    }
    Emit(cfg, Dump({{"graphs", data.samples.size()},
                    {"accuracy", c.accuracy},
                    {"classes", classes},
                    {"scores", c.scores},
                    {"predicted", c.predicted}}));
    return kExitOk;
  }
  std::ostringstream out;
  out << "class skip score\n";
  for (std::size_t k = 0; k < c.centroids.size(); ++k) {
    out << k << ' ' << data.spec.skips[k] << ' ' << Num(c.centroids[k]) << '\n';
  }
  out << "accuracy " << Num(100.0 * c.accuracy) << "% over " << data.samples.size()
      << " graphs\n";
  Emit(cfg, out.str());
  return kExitOk;
}

int CmdReproduce(const CliConfig& cfg, int table) {
  const TableReport r = ReproduceTable(table);
  if (WantJson(cfg)) {
    json entries = json::array();
    for (const auto& e : r.entries) {
      entries.push_back({{"label", e.label}, {"got", e.got}, {"want", e.want},
                         {"tolerance", e.tolerance}, {"ok", e.ok()}});
    }
    Emit(cfg, Dump({{"table", table}, {"match", r.match()}, {"entries", entries}}));
  } else {
    std::ostringstream out;
    for (const auto& e : r.entries) {
      out << (e.ok() ? "  ok    " : "  DIFF  ") << e.label << ": " << Num(e.got)
          << " (table " << Num(e.want) << " +/- " << Num(e.tolerance) << ")\n";
    }
    out << (r.match() ? "MATCH" : "MISMATCH") << '\n';
    Emit(cfg, out.str());
  }
  return r.match() ? kExitOk : kExitMismatch;
}

int CmdStochastic(const CliConfig& cfg, const std::string& graph) {
  const Graph g = ResolveGraph(graph, cfg);
  const FilterParams h = FilterOr(cfg, ExamplePairFilter());
  StochasticConfig sc;
  sc.variance = cfg.variance;
  sc.samples = cfg.samples;
  sc.seed = cfg.seed;
  sc.distribution = Distribution(cfg);
  sc.threads = cfg.threads;
  const VarianceEstimate r = StochasticVariance(g, h, sc);
  const Vector expected = ExpectedVariance(g, h, cfg.variance);
  bool within = true;
  json nodes = json::array();
  std::ostringstream out;
  out << "node estimate stderr closed_form z\n";
  for (int v = 0; v < g.size(); ++v) {
    const double z = r.standard_error[v] > 0.0
                         ? (r.estimate[v] - expected[v]) / r.standard_error[v]
                         : (r.estimate[v] == expected[v] ? 0.0 : 1e300);
    within = within && std::abs(z) <= 3.0;
    nodes.push_back({{"estimate", r.estimate[v]}, {"stderr", r.standard_error[v]},
                     {"closed_form", expected[v]}, {"z", z}});
    out << v << ' ' << Num(r.estimate[v]) << ' ' << Num(r.standard_error[v]) << ' '
        << Num(expected[v]) << ' ' << Num(z) << '\n';
  }
  out << (within ? "within 3 standard errors" : "OUTSIDE 3 standard errors") << '\n';
  if (WantJson(cfg)) {
    Emit(cfg, Dump({{"graph", g.name()}, {"samples", cfg.samples}, {"seed", cfg.seed},
                    {"distribution", cfg.distribution}, {"nodes", nodes},
                    {"within_3_stderr", within}}));
  } else {
    Emit(cfg, out.str());
  }
  return within ? kExitOk : kExitMismatch;
}

int CmdBenchmark(const CliConfig& cfg, const std::vector<std::string>& pairs) {
  std::vector<GraphPair> list;
  if (pairs.empty()) {
    list.push_back({*CorpusGraph("prism"), *CorpusGraph("k33")});
    list.push_back({*CorpusGraph("bihexagon"), *CorpusGraph("bipentagon")});
  }
  for (const auto& p : pairs) {
    const auto comma = p.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::kConfigError, "pair must be A,B: '" + p + "'");
    }
    list.push_back({ResolveGraph(p.substr(0, comma), cfg), ResolveGraph(p.substr(comma + 1), cfg)});
  }
  DiscriminationConfig dc;
  dc.filter = FilterOr(cfg, ExamplePairFilter());
  dc.sigma = Sigma(cfg);
  dc.embed_tol = cfg.tol;
  if (cfg.group_tol) dc.spectral_tol = *cfg.group_tol;
  dc.condition_depth = cfg.depth;
  const BenchmarkSummary s = RunBenchmark(list, dc, cfg.threads);
  if (WantJson(cfg)) {
    json rows = json::array();
    for (const auto& row : s.rows) {
      json r = row.error.empty() ? ReportToJson(row.report) : json{{"error", row.error}};
      r["millis"] = row.millis;
      rows.push_back(r);
    }
    Emit(cfg, Dump({{"pairs", s.pairs}, {"errors", s.errors},
                    {"wl_distinguished", s.wl_distinguished},
                    {"spectral_separable", s.spectral_separable},
                    {"diag_separable", s.diag_separable},
                    {"overall_separable", s.overall_separable}, {"rows", rows}}));
  } else {
    Emit(cfg, s.ToCsv());
  }
  return s.errors == 0 ? kExitOk : kExitMismatch;
}

void AddCommonFlags(CLI::App* app, Flags& f) {
  app->add_option("--filter", f.filter, "Filter coefficients h0,h1,...");
  app->add_option("--sigma", f.sigma, "Nonlinearity: relu, linear, leaky, square");
  app->add_option("--tol", f.tol, "Embedding comparison tolerance");
  app->add_option("--group-tol", f.group_tol, "Eigenvalue grouping tolerance");
  app->add_option("--depth", f.depth, "Feature depth");
  app->add_option("--variance", f.variance, "White-noise variance");
  app->add_option("--samples", f.samples, "Monte-Carlo sample count");
  app->add_option("--seed", f.seed, "Random seed");
  app->add_option("--distribution", f.distribution, "gaussian or rademacher");
  app->add_option("--threads", f.threads, "Worker threads (0 = all cores)");
  app->add_option("--config", f.config, "JSON config file");
  app->add_option("--out", f.out, "Write output to this path");
  app->add_option("--format", f.format, "json or csv");
}

int Main(int argc, char** argv) {
  CLI::App app{"Graph discrimination toolkit: WL refinement, spectral tests and "
               "anonymous diagonal GNN modules"};
  app.require_subcommand(1);
  Flags flags;

  std::vector<std::string> wl_graphs;
  std::string wl_init = "uniform";
  std::optional<std::string> expect;
  auto* wl = app.add_subcommand("wl", "Colour refinement history or pair verdict");
  wl->add_option("graphs", wl_graphs, "One or two graphs")->required()->expected(1, 2);
  wl->add_option("--init", wl_init, "uniform or degree")
      ->check(CLI::IsMember({"uniform", "degree"}));
  wl->add_option("--expect", expect, "Expected pair verdict; exit 1 on mismatch")
      ->check(CLI::IsMember({"distinguished", "indistinguishable"}));
  AddCommonFlags(wl, flags);

  std::vector<std::string> spec_graphs;
  auto* spectral = app.add_subcommand("spectral", "Grouped spectrum and differ witness");
  spectral->add_option("graphs", spec_graphs, "One or two graphs")->required()->expected(1, 2);
  AddCommonFlags(spectral, flags);

  std::string feat_graph;
  bool feat_wl = false;
  auto* features = app.add_subcommand("features", "Closed-walk feature matrix as CSV");
  features->add_option("graph", feat_graph)->required();
  features->add_flag("--wl", feat_wl, "Emit S^k 1 columns instead of diag(S^k)");
  AddCommonFlags(features, flags);

  std::string disc_a, disc_b;
  auto* discriminate = app.add_subcommand("discriminate", "Full pair report as JSON");
  discriminate->add_option("graph1", disc_a)->required();
  discriminate->add_option("graph2", disc_b)->required();
  discriminate->add_option("--expect", expect, "Expected overall verdict; exit 1 on mismatch")
      ->check(CLI::IsMember({"separable", "inconclusive"}));
  AddCommonFlags(discriminate, flags);

  std::optional<std::string> csl_generate, csl_classify;
  auto* csl = app.add_subcommand("csl", "Generate or classify the CSL dataset");
  auto* gen = csl->add_option("--generate", csl_generate, "Write the dataset to a directory");
  auto* cls = csl->add_option("--classify", csl_classify, "Classify a dataset directory");
  gen->excludes(cls);
  AddCommonFlags(csl, flags);

  int table = 0;
  auto* reproduce = app.add_subcommand("reproduce", "Recompute a reference table");
  reproduce->add_option("--table", table)->required()->check(CLI::IsMember({1, 2, 4, 5}));
  AddCommonFlags(reproduce, flags);

  std::string stoch_graph;
  auto* stochastic = app.add_subcommand("stochastic", "Monte-Carlo variance vs closed form");
  stochastic->add_option("graph", stoch_graph)->required();
  AddCommonFlags(stochastic, flags);

  std::vector<std::string> bench_pairs;
  auto* benchmark = app.add_subcommand("benchmark", "Discriminate many pairs; CSV summary");
  benchmark->add_option("--pair", bench_pairs, "A,B (repeatable); defaults to corpus pairs");
  AddCommonFlags(benchmark, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const CliConfig cfg = Resolve(flags);
    if (*wl) return CmdWl(cfg, wl_graphs, wl_init, expect);
    if (*spectral) return CmdSpectral(cfg, spec_graphs);
    if (*features) return CmdFeatures(cfg, feat_graph, feat_wl);
    if (*discriminate) return CmdDiscriminate(cfg, disc_a, disc_b, expect);
    if (*csl) return CmdCsl(cfg, csl_generate, csl_classify);
    if (*reproduce) return CmdReproduce(cfg, table);
    if (*stochastic) return CmdStochastic(cfg, stoch_graph);
    if (*benchmark) return CmdBenchmark(cfg, bench_pairs);
  } catch (const Error& e) {
    std::cerr << "spectrawl: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace
}  // namespace spectrawl::cli

int main(int argc, char** argv) { return spectrawl::cli::Main(argc, argv); }
