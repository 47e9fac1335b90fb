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

#include "spectrawl/discriminate.hpp"

#include <algorithm>

#include "spectrawl/error.hpp"
#include "spectrawl/rows.hpp"

namespace spectrawl {

using nlohmann::json;

bool EmbeddingsIsomorphic(const FeatureMatrix& y1, const FeatureMatrix& y2,
                          double tol) {
  if (y1.cols() != y2.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "embedding widths differ");
  }
  return SameRowMultiset(y1, y2, tol);
}

namespace {

std::vector<double> SortedValues(const Vector& v) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end());
  return out;
}

Separability ToSeparability(bool separable) {
  return separable ? Separability::kSeparable : Separability::kInconclusive;
}

Separability ParseSeparability(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "separable") return Separability::kSeparable;
  if (s == "inconclusive") return Separability::kInconclusive;
  throw Error(ErrorCode::kParseError, "unknown verdict '" + s + "'");
}

WlVerdict ParseWl(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "distinguished") return WlVerdict::kDistinguished;
  if (s == "indistinguishable") return WlVerdict::kIndistinguishable;
  throw Error(ErrorCode::kParseError, "unknown wl verdict '" + s + "'");
}

json ConditionsToJson(const ConditionReport& c) {
  json out;
  out["signals_differ"] = c.cond1_signals_differ;
  if (c.cond2_witness) {
    out["exclusive_eigenvalue"] = {{"value", c.cond2_witness->value},
                                   {"graph", c.cond2_witness->graph},
                                   {"norm", c.cond2_witness->norm}};
  } else {
    out["exclusive_eigenvalue"] = nullptr;
  }
  if (c.cond3_witness) {
    out["multiplicity_mismatch"] = {
        {"value", c.cond3_witness->value},
        {"multiplicity", {c.cond3_witness->multiplicity1,
                          c.cond3_witness->multiplicity2}},
        {"norm", {c.cond3_witness->norm1, c.cond3_witness->norm2}}};
  } else {
    out["multiplicity_mismatch"] = nullptr;
  }
  out["verdict"] = SeparabilityName(c.verdict);
  return out;
}

ConditionReport ConditionsFromJson(const json& j) {
  ConditionReport c;
  c.cond1_signals_differ = j.at("signals_differ").get<bool>();
  if (const auto& w = j.at("exclusive_eigenvalue"); !w.is_null()) {
    c.cond2_witness = DifferingEigenvalueWitness{
        w.at("value").get<double>(), w.at("graph").get<int>(),
        w.at("norm").get<double>()};
  }
  if (const auto& w = j.at("multiplicity_mismatch"); !w.is_null()) {
    c.cond3_witness = MultiplicityWitness{
        w.at("value").get<double>(), w.at("multiplicity").at(0).get<int>(),
        w.at("multiplicity").at(1).get<int>(), w.at("norm").at(0).get<double>(),
        w.at("norm").at(1).get<double>()};
  }
  c.verdict = ParseSeparability(j.at("verdict"));
  return c;
}

}  // namespace

DiscriminationReport DiscriminatePair(const Graph& g1, const Graph& g2,
                                      const DiscriminationConfig& config) {
  DiscriminationReport r;
  r.name1 = g1.name();
  r.name2 = g2.name();
  r.wl = WlDistinguish(g1, g2);

  const Spectrum s1 = Eigendecompose(g1);
  const Spectrum s2 = Eigendecompose(g2);
  if (auto witness = SpectraDiffer(s1, s2, config.spectral_tol)) {
    r.spectral = Separability::kSeparable;
    r.spectral_witness = witness->value;
  }

  const Vector y1 = DiagonalModule(g1, config.filter, config.sigma);
  const Vector y2 = DiagonalModule(g2, config.filter, config.sigma);
  r.diag_gnn = ToSeparability(!EmbeddingsIsomorphic(y1, y2, config.embed_tol));
  r.outputs1 = SortedValues(y1);
  r.outputs2 = SortedValues(y2);

  if (config.condition_depth) {
    r.conditions = CheckSeparationConditions(
        g1, g2, DiagPowers(g1, *config.condition_depth),
        DiagPowers(g2, *config.condition_depth), config.spectral_tol);
  }

  r.overall = ToSeparability(r.wl == WlVerdict::kDistinguished ||
                             r.spectral == Separability::kSeparable ||
                             r.diag_gnn == Separability::kSeparable ||
                             (r.conditions && r.conditions->verdict ==
                                                  Separability::kSeparable));
  return r;
}

json ReportToJson(const DiscriminationReport& r) {
  json out;
  out["pair"] = {r.name1, r.name2};
  out["wl"] = WlVerdictName(r.wl);
  out["spectral"] = {{"verdict", SeparabilityName(r.spectral)},
                     {"witness", r.spectral_witness
                                     ? json(*r.spectral_witness)
                                     : json(nullptr)}};
  out["diag_gnn"] = {{"verdict", SeparabilityName(r.diag_gnn)},
                     {"outputs", {r.outputs1, r.outputs2}}};
  if (r.conditions) out["conditions"] = ConditionsToJson(*r.conditions);
  out["overall"] = SeparabilityName(r.overall);
  return out;
}

DiscriminationReport ReportFromJson(const json& j) {
  try {
    DiscriminationReport r;
    const auto& pair = j.at("pair");
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorCode::kParseError, "'pair' must hold two names");
    }
    r.name1 = pair.at(0).get<std::string>();
    r.name2 = pair.at(1).get<std::string>();
    r.wl = ParseWl(j.at("wl"));
    r.spectral = ParseSeparability(j.at("spectral").at("verdict"));
    if (const auto& w = j.at("spectral").at("witness"); !w.is_null()) {
      r.spectral_witness = w.get<double>();
    }
    const auto& diag = j.at("diag_gnn");
    r.diag_gnn = ParseSeparability(diag.at("verdict"));
    if (diag.contains("outputs")) {
      r.outputs1 = diag["outputs"].at(0).get<std::vector<double>>();
      r.outputs2 = diag["outputs"].at(1).get<std::vector<double>>();
    }
    if (j.contains("conditions")) {
      r.conditions = ConditionsFromJson(j["conditions"]);
    }
    r.overall = ParseSeparability(j.at("overall"));
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace spectrawl
