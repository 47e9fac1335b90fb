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

#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "spectrawl/anonymous.hpp"
#include "spectrawl/benchmark.hpp"
#include "spectrawl/csl.hpp"
#include "spectrawl/error.hpp"
#include "spectrawl/spectral.hpp"
#include "test_graphs.hpp"

namespace spectrawl {
namespace {

using testing::Named;
using testing::P3;

TEST(EmbeddingsTest, Examples) {
  const FeatureMatrix prism = FeatureMatrix::Constant(6, 1, 10.4167);
  const FeatureMatrix k33 = FeatureMatrix::Constant(6, 1, 1.75);
  EXPECT_FALSE(EmbeddingsIsomorphic(prism, k33));
  FeatureMatrix y(4, 2);
  y << 1, 2, 3, 4, 5, 6, 7, 8;
  const FeatureMatrix py = PermuteRows(y, Permutation({3, 1, 0, 2}));
  EXPECT_TRUE(EmbeddingsIsomorphic(y, py));
  FeatureMatrix near = y;
  near(0, 0) += 1e-7;
  EXPECT_TRUE(EmbeddingsIsomorphic(y, near, 1e-6));
  near(0, 0) += 1e-4;
  EXPECT_FALSE(EmbeddingsIsomorphic(y, near, 1e-6));
  EXPECT_FALSE(EmbeddingsIsomorphic(y, y.topRows(3)));
  EXPECT_THROW(EmbeddingsIsomorphic(y, y.leftCols(1)), Error);
}

TEST(DiscriminatePairTest, CorpusPairs) {
  for (const auto& [a, b] : {std::pair{"prism", "k33"}, std::pair{"bihexagon", "bipentagon"}}) {
    const DiscriminationReport r = DiscriminatePair(Named(a), Named(b));
    EXPECT_EQ(r.wl, WlVerdict::kIndistinguishable) << a;
    EXPECT_EQ(r.spectral, Separability::kSeparable) << a;
    EXPECT_TRUE(r.spectral_witness.has_value()) << a;
    EXPECT_EQ(r.diag_gnn, Separability::kSeparable) << a;
    EXPECT_EQ(r.overall, Separability::kSeparable) << a;
    EXPECT_EQ(r.name1, a);
    EXPECT_EQ(r.name2, b);
  }
}

TEST(DiscriminatePairTest, IsomorphicPairIsInconclusive) {
  DiscriminationConfig cfg;
  cfg.condition_depth = 5;
  for (const auto& e : Corpus()) {
    const Graph h = ApplyPermutation(e.graph, Permutation::Random(e.graph.size(), 3));
    const DiscriminationReport r = DiscriminatePair(e.graph, h, cfg);
    EXPECT_EQ(r.wl, WlVerdict::kIndistinguishable);
    EXPECT_EQ(r.spectral, Separability::kInconclusive);
    EXPECT_EQ(r.diag_gnn, Separability::kInconclusive);
    ASSERT_TRUE(r.conditions.has_value());
    EXPECT_EQ(r.conditions->verdict, Separability::kInconclusive);
    EXPECT_EQ(r.overall, Separability::kInconclusive);
  }
}

TEST(DiscriminatePairTest, OverallIsDisjunction) {
  DiscriminationConfig cfg;
  cfg.condition_depth = 4;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph a = RandomGraph(7, 0.4, seed);
    const Graph b = RandomGraph(7, 0.4, seed + 77);
    const DiscriminationReport r = DiscriminatePair(a, b, cfg);
    const bool any = r.wl == WlVerdict::kDistinguished ||
                     r.spectral == Separability::kSeparable ||
                     r.diag_gnn == Separability::kSeparable ||
                     r.conditions->verdict == Separability::kSeparable;
    EXPECT_EQ(r.overall == Separability::kSeparable, any);
  }
}

TEST(DiscriminatePairTest, DiagFeaturesDominateConstantInput) {
  // Constant-input outputs differing implies diag-power features differ.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph a = RandomGraph(7, 0.4, seed);
    const Graph b = RandomGraph(7, 0.4, seed + 300);
    const FilterParams h = ExamplePairFilter();
    const Vector ca = ConstantInputResponse(a, h, Nonlinearity::Linear());
    const Vector cb = ConstantInputResponse(b, h, Nonlinearity::Linear());
    if (!EmbeddingsIsomorphic(ca, cb)) {
      EXPECT_FALSE(EmbeddingsIsomorphic(DiagPowers(a, 7), DiagPowers(b, 7))) << seed;
    }
  }
  const FilterParams h = ExamplePairFilter();
  EXPECT_TRUE(EmbeddingsIsomorphic(
      ConstantInputResponse(Named("prism"), h, Nonlinearity::Linear()),
      ConstantInputResponse(Named("k33"), h, Nonlinearity::Linear())));
  EXPECT_FALSE(EmbeddingsIsomorphic(DiagPowers(Named("prism"), 4),
                                    DiagPowers(Named("k33"), 4)));
}

TEST(ReportJsonTest, RoundTrip) {
  DiscriminationConfig cfg;
  cfg.condition_depth = 4;
  const DiscriminationReport a = DiscriminatePair(Named("prism"), Named("k33"), cfg);
  const auto j = ReportToJson(a);
  EXPECT_EQ(j["wl"], "indistinguishable");
  EXPECT_EQ(j["overall"], "separable");
  EXPECT_EQ(j["pair"][0], "prism");
  EXPECT_TRUE(j["spectral"]["witness"].is_number());
  EXPECT_EQ(ReportFromJson(nlohmann::json::parse(j.dump())), a);

  const DiscriminationReport b = DiscriminatePair(Named("k33"), Named("k33"));
  const auto jb = ReportToJson(b);
  EXPECT_TRUE(jb["spectral"]["witness"].is_null());
  EXPECT_FALSE(jb.contains("conditions"));
  EXPECT_EQ(ReportFromJson(nlohmann::json::parse(jb.dump())), b);
}

TEST(ReportJsonTest, RejectsBadSchema) {
  auto j = ReportToJson(DiscriminatePair(Named("prism"), Named("k33")));
  auto bad = j;
  bad["wl"] = "maybe";
  EXPECT_THROW(ReportFromJson(bad), Error);
  bad = j;
  bad.erase("overall");
  EXPECT_THROW(ReportFromJson(bad), Error);
  bad = j;
  bad["pair"] = {"a"};
  EXPECT_THROW(ReportFromJson(bad), Error);
}

TEST(CslTest, BaseGraphsAreRegular) {
  const CslSpec spec;
  for (int r : spec.skips) {
    const Graph g = CslBaseGraph(spec.n, r);
    EXPECT_EQ(g.EdgeCount(), 82);
    EXPECT_TRUE((g.Degrees().array() == 4.0).all());
  }
}

TEST(CslTest, Validation) {
  CslSpec spec;
  spec.skips = {2, 21};
  try {
    spec.Validate();
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidSkip);
  }
  spec.skips = {1};
  EXPECT_THROW(spec.Validate(), Error);
  spec.skips = {3, 3};
  EXPECT_THROW(spec.Validate(), Error);
  spec.skips = {3};
  spec.copies_per_class = 0;
  EXPECT_THROW(spec.Validate(), Error);
}

TEST(CslTest, GenerateShapesAndInvariance) {
  CslSpec spec;
  spec.copies_per_class = 4;
  const CslDataset d = CslGenerate(spec);
  ASSERT_EQ(d.samples.size(), 40u);
  for (const auto& s : d.samples) {
    EXPECT_TRUE((s.graph.Degrees().array() == 4.0).all());
    const Vector one = Vector::Ones(41);
    EXPECT_LE((s.graph.adjacency() * one - 4 * one).norm(), 0.0);
    EXPECT_NEAR(CslScore(s.graph),
                CslScore(CslBaseGraph(spec.n, spec.skips[s.label])), 1e-9);
  }
  // Copies within a class share the spectrum.
  const Spectrum a = Eigendecompose(d.samples[0].graph);
  const Spectrum b = Eigendecompose(d.samples[1].graph);
  EXPECT_LE((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff(), 1e-9);
  // Cross-class pairs are WL-indistinguishable.
  EXPECT_EQ(WlDistinguish(d.samples[0].graph, d.samples[4].graph),
            WlVerdict::kIndistinguishable);
  // Seeded and reproducible.
  EXPECT_EQ(CslGenerate(spec).samples[5].graph, d.samples[5].graph);
}

TEST(CslTest, ClassifiesPerfectly) {
  CslSpec spec;
  spec.copies_per_class = 3;
  const CslClassification c = CslClassify(CslGenerate(spec));
  EXPECT_EQ(c.accuracy, 1.0);
  EXPECT_EQ(c.centroids.size(), 10u);
  EXPECT_EQ(std::set<double>(c.centroids.begin(), c.centroids.end()).size(), 10u);
}

TEST(CslTest, WriteLoadRoundTrip) {
  CslSpec spec;
  spec.copies_per_class = 2;
  spec.skips = {2, 5};
  const CslDataset d = CslGenerate(spec);
  const auto dir = std::filesystem::temp_directory_path() / "spectrawl_csl_test";
  std::filesystem::remove_all(dir);
  CslWrite(d, dir);
  const CslDataset back = CslLoad(dir);
  ASSERT_EQ(back.samples.size(), d.samples.size());
  EXPECT_EQ(back.spec.skips, d.spec.skips);
  for (std::size_t i = 0; i < d.samples.size(); ++i) {
    EXPECT_EQ(back.samples[i].graph, d.samples[i].graph);
    EXPECT_EQ(back.samples[i].label, d.samples[i].label);
  }
  std::filesystem::remove_all(dir);
  EXPECT_THROW(CslLoad(dir), Error);
}

TEST(AnonymousTest, SelectorFiltersGiveDiagPowers) {
  for (const auto& e : Corpus()) {
    const FeatureMatrix y =
        AnonymousEmbed(e.graph, {DiagonalLayer{SelectorFilters(6), Nonlinearity::Linear()}});
    EXPECT_EQ(y, DiagPowers(e.graph, 6)) << e.key;
  }
}

TEST(AnonymousTest, StandardFirstLayerMatchesDiagonalModule) {
  const FilterParams h = ExamplePairFilter();
  Matrix stacked(h.length(), 1);
  for (int k = 0; k < h.length(); ++k) stacked(k, 0) = h[k];
  for (const auto& e : Corpus()) {
    StandardLayer layer{{stacked}, Nonlinearity::Linear(), h.length()};
    const FeatureMatrix y = AnonymousEmbed(e.graph, {layer});
    const Vector expected = DiagonalModule(e.graph, h, Nonlinearity::Linear());
    EXPECT_LE((y.col(0) - expected).cwiseAbs().maxCoeff(), 1e-12) << e.key;
  }
}

TEST(AnonymousTest, BothFirstLayersAgreeThroughDeeperStack) {
  const std::vector<Matrix> taps = {Matrix::Random(4, 3), Matrix::Random(4, 3)};
  const StandardLayer second{taps, Nonlinearity::Relu(), std::nullopt};
  const std::vector<Matrix> identity = {Matrix::Identity(4, 4)};
  for (const auto& e : Corpus()) {
    const FeatureMatrix a = AnonymousEmbed(
        e.graph, {DiagonalLayer{SelectorFilters(4), Nonlinearity::Linear()}, second});
    const FeatureMatrix b = AnonymousEmbed(
        e.graph, {StandardLayer{identity, Nonlinearity::Linear(), 4}, second});
    EXPECT_LE((a - b).cwiseAbs().maxCoeff(), 1e-12) << e.key;
  }
}

TEST(AnonymousTest, IsomorphicEmbeddingsMatch) {
  const std::vector<Matrix> taps = {Matrix::Random(5, 2), Matrix::Random(5, 2)};
  const std::vector<AnonymousLayer> net = {
      DiagonalLayer{SelectorFilters(5), Nonlinearity::Linear()},
      StandardLayer{taps, Nonlinearity::Relu(), std::nullopt}};
  for (const auto& e : Corpus()) {
    const Graph h = ApplyPermutation(e.graph, Permutation::Random(e.graph.size(), 9));
    EXPECT_TRUE(EmbeddingsIsomorphic(AnonymousEmbed(e.graph, net), AnonymousEmbed(h, net)));
  }
}

TEST(AnonymousTest, ConfigErrors) {
  const Graph g = Named("prism");
  auto code = [&](const std::vector<AnonymousLayer>& net) {
    try {
      AnonymousEmbed(g, net);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  const std::vector<Matrix> taps = {Matrix::Identity(2, 2)};
  EXPECT_EQ(code({}), ErrorCode::kConfigError);
  EXPECT_EQ(code({StandardLayer{taps, Nonlinearity::Linear(), std::nullopt}}),
            ErrorCode::kConfigError);
  EXPECT_EQ(code({StandardLayer{taps, Nonlinearity::Linear(), 3}}), ErrorCode::kConfigError);
  EXPECT_EQ(code({DiagonalLayer{SelectorFilters(2), Nonlinearity::Linear()},
                  DiagonalLayer{SelectorFilters(2), Nonlinearity::Linear()}}),
            ErrorCode::kConfigError);
  EXPECT_EQ(code({DiagonalLayer{SelectorFilters(2), Nonlinearity::Linear()},
                  StandardLayer{taps, Nonlinearity::Linear(), 2}}),
            ErrorCode::kConfigError);
  EXPECT_EQ(code({DiagonalLayer{{}, Nonlinearity::Linear()}}), ErrorCode::kConfigError);
}

TEST(BenchmarkTest, CorpusPairs) {
  const std::vector<GraphPair> pairs = {{Named("prism"), Named("k33")},
                                        {Named("bihexagon"), Named("bipentagon")}};
  const BenchmarkSummary s = RunBenchmark(pairs);
  EXPECT_EQ(s.pairs, 2);
  EXPECT_EQ(s.wl_distinguished, 0);
  EXPECT_EQ(s.spectral_separable, 2);
  EXPECT_EQ(s.diag_separable, 2);
  EXPECT_EQ(s.errors, 0);
  const std::string csv = s.ToCsv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "pair,wl,spectral,diag,overall,millis");
  EXPECT_NE(csv.find("bihexagon|bipentagon,indistinguishable,separable,separable,separable,"),
            std::string::npos);
  EXPECT_LT(csv.find("bihexagon"), csv.find("prism"));
}

TEST(BenchmarkTest, EmptyAndThreadIndependent) {
  const BenchmarkSummary empty = RunBenchmark({});
  EXPECT_EQ(empty.pairs, 0);
  EXPECT_TRUE(empty.rows.empty());
  std::vector<GraphPair> pairs;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    pairs.push_back({RandomGraph(7, 0.4, seed).WithName("a" + std::to_string(seed)),
                     RandomGraph(7, 0.4, seed + 50).WithName("b" + std::to_string(seed))});
  }
  const BenchmarkSummary one = RunBenchmark(pairs, {}, 1);
  const BenchmarkSummary many = RunBenchmark(pairs, {}, 4);
  ASSERT_EQ(one.rows.size(), many.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    EXPECT_EQ(one.rows[i].pair, many.rows[i].pair);
    EXPECT_EQ(one.rows[i].report, many.rows[i].report);
  }
  EXPECT_EQ(one.overall_separable, many.overall_separable);
}

TEST(BenchmarkTest, ErrorsAreRecorded) {
  DiscriminationConfig cfg;
  cfg.condition_depth = 0;  // invalid feature depth
  const BenchmarkSummary s = RunBenchmark({{P3(), Named("prism")}}, cfg);
  EXPECT_EQ(s.pairs, 1);
  EXPECT_EQ(s.errors, 1);
  EXPECT_FALSE(s.rows[0].error.empty());
  EXPECT_NE(s.ToCsv().find("error,error,error,error"), std::string::npos);
}

}  // namespace
}  // namespace spectrawl
