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


#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spectrawl/corpus.hpp"
#include "spectrawl/csl.hpp"
#include "spectrawl/discriminate.hpp"
#include "spectrawl/error.hpp"
#include "spectrawl/gnn.hpp"
#include "spectrawl/graph.hpp"
#include "spectrawl/graph_io.hpp"
#include "spectrawl/reproduce.hpp"
#include "spectrawl/spectral.hpp"
#include "spectrawl/wl.hpp"

namespace py = pybind11;
using namespace spectrawl;

namespace {

Graph FromPairs(int n, const std::vector<std::pair<int, int>>& pairs,
                const std::string& name) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph::FromEdgeList(n, edges, name);
}

WlInit ParseInit(const std::string& init) {
  if (init == "uniform") return WlInit::kUniform;
  if (init == "degree") return WlInit::kDegree;
  throw Error(ErrorCode::kInvalidArgument, "init must be uniform or degree");
}

WhiteNoise ParseNoise(const std::string& name) {
  if (name == "gaussian") return WhiteNoise::kGaussian;
  if (name == "rademacher") return WhiteNoise::kRademacher;
  throw Error(ErrorCode::kInvalidArgument, "distribution must be gaussian or rademacher");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graph discrimination kernels: WL refinement, spectra, diagonal GNN modules";

  // Held for the interpreter's lifetime; the translator below needs it.
  static PyObject* error_type =
      py::exception<Error>(m, "SpectrawlError", PyExc_ValueError).inc_ref().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&FromPairs), py::arg("n"), py::arg("edges"), py::arg("name") = "")
      .def_static("from_adjacency",
                  [](const Matrix& a, const std::string& name) {
                    return Graph::FromAdjacency(a, name);
                  },
                  py::arg("adjacency"), py::arg("name") = "")
      .def_property_readonly("n", &Graph::size)
      .def_property_readonly("name", &Graph::name)
      .def_property_readonly("adjacency", &Graph::adjacency)
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (const Edge& e : g.Edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("degrees", &Graph::Degrees)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(name='" + g.name() + "', n=" + std::to_string(g.size()) +
               ", edges=" + std::to_string(g.EdgeCount()) + ")";
      });

  m.def("corpus_keys", [] {
    std::vector<std::string> keys;
    for (const auto& e : Corpus()) keys.push_back(e.key);
    return keys;
  });
  m.def("corpus_graph", [](const std::string& key) {
    auto g = CorpusGraph(key);
    if (!g) throw Error(ErrorCode::kInvalidArgument, "no corpus graph '" + key + "'");
    return *g;
  });
  m.def("apply_permutation",
        [](const Graph& g, std::vector<int> mapping) {
          return ApplyPermutation(g, Permutation(std::move(mapping)));
        });
  m.def("random_permutation",
        [](int n, std::uint64_t seed) { return Permutation::Random(n, seed).mapping(); });
  m.def("random_graph", &RandomGraph, py::arg("n"), py::arg("p"), py::arg("seed"),
        py::arg("name") = "");
  m.def("is_isomorphic_bruteforce", &IsIsomorphicBruteForce);
  m.def("parse_edge_list", [](const std::string& text, const std::string& name) {
    return ParseEdgeList(text, name);
  }, py::arg("text"), py::arg("name") = "");
  m.def("format_edge_list", &FormatEdgeList);
  m.def("load_graph", [](const std::string& path) { return LoadGraph(path); });
  m.def("save_graph", [](const Graph& g, const std::string& path) { SaveGraph(g, path); });

  // Spectral.
  m.def("eigendecompose",
        [](const Graph& g, std::optional<double> group_tol) {
          SpectralOptions opts;
          opts.group_tolerance = group_tol;
          const Spectrum s = Eigendecompose(g, opts);
          std::vector<std::pair<double, int>> groups;
          for (const auto& grp : s.groups) groups.emplace_back(grp.value, grp.multiplicity());
          return py::make_tuple(s.eigenvalues, s.eigenvectors, groups);
        },
        py::arg("g"), py::arg("group_tol") = py::none(),
        "Returns (eigenvalues ascending, eigenvectors, [(value, multiplicity)]).");
  m.def("eigenvector_one_products",
        [](const Graph& g) { return EigenvectorOneProducts(Eigendecompose(g)); });
  m.def("spectra_differ",
        [](const Graph& a, const Graph& b, double tol) -> py::object {
          auto w = SpectraDiffer(a, b, tol);
          if (!w) return py::none();
          return py::make_tuple(w->value, w->multiplicity1, w->multiplicity2);
        },
        py::arg("g1"), py::arg("g2"), py::arg("tol") = kDefaultSpectralTolerance);
  m.def("isolating_filter",
        [](const std::vector<double>& mus, int target) {
          return IsolatingFilter(mus, target).coeffs();
        });
  m.def("filter_matrix", [](const Graph& g, std::vector<double> h) {
    return FilterMatrix(g, FilterParams(std::move(h)));
  });
  m.def("frequency_response", [](std::vector<double> h, double lambda) {
    return FrequencyResponse(FilterParams(std::move(h)), lambda);
  });

  // WL.
  m.def("wl_refine",
        [](const Graph& g, const std::string& init) {
          const WlColoring c = WlRefine(g, ParseInit(init));
          return py::make_tuple(c.colors, c.stable_at);
        },
        py::arg("g"), py::arg("init") = "uniform",
        "Returns (colors per round, stable_at).");
  m.def("wl_distinguish", [](const Graph& a, const Graph& b) {
    return std::string(WlVerdictName(WlDistinguish(a, b)));
  });
  m.def("wl_feature_matrix", &WlFeatureMatrix);

  // GNN kernels.
  m.def("graph_filter", [](const Graph& g, std::vector<double> h, const FeatureMatrix& x) {
    return GraphFilter(g, FilterParams(std::move(h)), x);
  });
  m.def("diag_powers", &DiagPowers);
  m.def("closed_walk_count", &ClosedWalkCount);
  m.def("diagonal_module",
        [](const Graph& g, std::vector<double> h, const std::string& sigma) {
          return DiagonalModule(g, FilterParams(std::move(h)), Nonlinearity::Parse(sigma));
        },
        py::arg("g"), py::arg("h"), py::arg("sigma") = "relu");
  m.def("self_convolve", [](std::vector<double> h, double variance) {
    return SelfConvolve(FilterParams(std::move(h)), variance).coeffs();
  }, py::arg("h"), py::arg("variance") = 1.0);
  m.def("stochastic_variance",
        [](const Graph& g, std::vector<double> h, double variance, std::uint64_t samples,
           std::uint64_t seed, const std::string& distribution, unsigned threads) {
          StochasticConfig cfg;
          cfg.variance = variance;
          cfg.samples = samples;
          cfg.seed = seed;
          cfg.distribution = ParseNoise(distribution);
          cfg.threads = threads;
          VarianceEstimate r;
          {
            py::gil_scoped_release release;
            r = StochasticVariance(g, FilterParams(std::move(h)), cfg);
          }
          return py::make_tuple(r.estimate, r.standard_error);
        },
        py::arg("g"), py::arg("h"), py::arg("variance") = 1.0, py::arg("samples") = 100000,
        py::arg("seed") = 0, py::arg("distribution") = "gaussian", py::arg("threads") = 0);
  m.def("expected_variance", [](const Graph& g, std::vector<double> h, double variance) {
    return ExpectedVariance(g, FilterParams(std::move(h)), variance);
  }, py::arg("g"), py::arg("h"), py::arg("variance") = 1.0);

  // Discrimination.
  m.def("embeddings_isomorphic", &EmbeddingsIsomorphic, py::arg("y1"), py::arg("y2"),
        py::arg("tol") = kDefaultEmbeddingTolerance);
  m.def("discriminate_pair_json",
        [](const Graph& a, const Graph& b, std::optional<std::vector<double>> filter,
           const std::string& sigma, std::optional<int> condition_depth) {
          DiscriminationConfig cfg;
          if (filter) cfg.filter = FilterParams(*filter);
          cfg.sigma = Nonlinearity::Parse(sigma);
          cfg.condition_depth = condition_depth;
          return ReportToJson(DiscriminatePair(a, b, cfg)).dump();
        },
        py::arg("g1"), py::arg("g2"), py::arg("filter") = py::none(),
        py::arg("sigma") = "relu", py::arg("condition_depth") = py::none());
  m.def("csl_base_graph", &CslBaseGraph, py::arg("n"), py::arg("skip"));
  m.def("csl_score", &CslScore);
  m.def("csl_classify",
        [](int n, std::vector<int> skips, int copies, std::uint64_t seed) {
          CslSpec spec;
          spec.n = n;
          spec.skips = std::move(skips);
          spec.copies_per_class = copies;
          spec.seed = seed;
          const CslClassification c = CslClassify(CslGenerate(spec));
          return py::make_tuple(c.accuracy, c.scores, c.centroids);
        },
        py::arg("n") = 41,
        py::arg("skips") = std::vector<int>{2, 3, 4, 5, 6, 9, 11, 12, 13, 16},
        py::arg("copies_per_class") = 15, py::arg("seed") = 0,
        "Returns (accuracy, per-graph scores, per-class centroids).");
  m.def("reproduce_table", [](int table) {
    const TableReport r = ReproduceTable(table);
    std::vector<py::tuple> rows;
    for (const auto& e : r.entries) {
      rows.push_back(py::make_tuple(e.label, e.got, e.want, e.tolerance, e.ok()));
    }
    return py::make_tuple(r.match(), rows);
  });
}
