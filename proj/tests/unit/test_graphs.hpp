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


#ifndef SPECTRAWL_TESTS_TEST_GRAPHS_HPP_
#define SPECTRAWL_TESTS_TEST_GRAPHS_HPP_

#include <string>

#include "spectrawl/corpus.hpp"
#include "spectrawl/graph.hpp"

namespace spectrawl::testing {

inline Graph Named(const std::string& key) { return *CorpusGraph(key); }

inline Graph K2() { return Graph::FromEdgeList(2, {{0, 1}}, "k2"); }
inline Graph K3() { return Graph::FromEdgeList(3, {{0, 1}, {1, 2}, {0, 2}}, "k3"); }
inline Graph P3() { return Graph::FromEdgeList(3, {{0, 1}, {1, 2}}, "p3"); }

}  // namespace spectrawl::testing

#endif  // SPECTRAWL_TESTS_TEST_GRAPHS_HPP_
