// Copyright 2026 The brandt-zeta authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>
#include <vector>

#include "bz/graph.hpp"

namespace bz {

// Deterministic corpora for the property checks (fixed seeds, raw mt19937
// draws so results are identical across standard libraries).

/// Connected multigraphs with 3..8 vertices, at most 12 geometric edges and
/// minimum degree 2; loops and parallel edges occur.
std::vector<MultiGraph> random_multigraph_corpus(int count, std::uint32_t seed);

/// Connected regular graphs: circulants of various sizes plus the fixed
/// stable (triangle, K4, Petersen, the two-vertex double edge).
std::vector<MultiGraph> regular_corpus(std::uint32_t seed);

/// Random symmetric matrix with even diagonal, valid as an adjacency matrix.
IntMatrix random_even_adjacency(std::mt19937& rng, int max_m, int max_entry);

std::vector<int> random_permutation(int m, std::mt19937& rng);

/// Well-known fixed graphs used across the tests.
IntMatrix example_adjacency_with_loops();  // 4-regular, loops at vertices 0 and 3
IntMatrix petersen_adjacency();
IntMatrix complete_adjacency(int m);
IntMatrix cycle_adjacency(int m);

}  // namespace bz
