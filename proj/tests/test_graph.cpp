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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bz/corpus.hpp"
#include "bz/graph.hpp"

using namespace bz;

namespace {

IntMatrix example_laplacian() {
  IntMatrix L(4, 4);
  L << 2, -1, 0, -1,
      -1, 4, -3, 0,
       0, -3, 4, -1,
      -1, 0, -1, 2;
  return L;
}

}  // namespace

TEST_CASE("graph from adjacency and back") {
  MultiGraph G = graph_from_adjacency(example_adjacency_with_loops());
  CHECK(G.num_vertices() == 4);
  CHECK(G.loops_at(0) == 1);
  CHECK(G.loops_at(3) == 1);
  for (int v = 0; v < 4; ++v) CHECK(G.degree(v) == 4);
  CHECK(matrices_equal(adjacency_of(G), example_adjacency_with_loops()));

  StructureFlags f = structure_flags(G);
  CHECK(f.connected);
  CHECK(!f.bipartite);
  CHECK(f.regular_degree == 4);
}

TEST_CASE("adjacency validation errors name the violated condition") {
  IntMatrix odd(1, 1);
  odd << 1;
  CHECK_THROWS_AS(graph_from_adjacency(odd), OddDiagonal);

  IntMatrix asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(graph_from_adjacency(asym), AsymmetricMatrix);

  IntMatrix neg(2, 2);
  neg << 0, -1, -1, 0;
  CHECK_THROWS_AS(graph_from_adjacency(neg), NegativeEntry);

  IntMatrix rect(2, 3);
  CHECK_THROWS_AS(graph_from_adjacency(rect), NonSquare);
}

TEST_CASE("small adjacency matrices") {
  CHECK(matrices_equal(adjacency_of(graph_from_adjacency(cycle_adjacency(3))),
                       cycle_adjacency(3)));
  IntMatrix loop(1, 1);
  loop << 2;
  MultiGraph G = graph_from_adjacency(loop);
  CHECK(G.num_geometric_edges() == 1);
  CHECK(G.degree(0) == 2);
  CHECK(matrices_equal(adjacency_of(G), loop));
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(graph_from_adjacency(example_adjacency_with_loops())) == -4);

  IntMatrix path(2, 2);
  path << 0, 1, 1, 0;
  CHECK(euler_characteristic(graph_from_adjacency(path)) == 1);

  IntMatrix loop(1, 1);
  loop << 2;
  CHECK(euler_characteristic(graph_from_adjacency(loop)) == 0);
}

TEST_CASE("laplacian") {
  MultiGraph G = graph_from_adjacency(example_adjacency_with_loops());
  CHECK(matrices_equal(laplacian(G), example_laplacian()));

  IntMatrix loop(1, 1);
  loop << 2;
  CHECK(laplacian(graph_from_adjacency(loop))(0, 0) == 0);

  MultiGraph C3 = graph_from_adjacency(cycle_adjacency(3));
  IntMatrix expect = -cycle_adjacency(3);
  for (int i = 0; i < 3; ++i) expect(i, i) += 2;
  CHECK(matrices_equal(laplacian(C3), expect));
}

TEST_CASE("delete_loops matches the loopless example") {
  MultiGraph G = graph_from_adjacency(example_adjacency_with_loops());
  MultiGraph Gp = delete_loops(G);
  IntMatrix expected(4, 4);
  expected << 0, 1, 0, 1,
              1, 0, 3, 0,
              0, 3, 0, 1,
              1, 0, 1, 0;
  CHECK(matrices_equal(adjacency_of(Gp), expected));
  CHECK(matrices_equal(laplacian(Gp), laplacian(G)));
  CHECK(tree_count(Gp) == tree_count(G));

  // loopless graphs are unchanged; an all-loop vertex becomes isolated
  CHECK(matrices_equal(adjacency_of(delete_loops(Gp)), expected));
  IntMatrix two_loops(1, 1);
  two_loops << 4;
  CHECK(adjacency_of(delete_loops(graph_from_adjacency(two_loops)))(0, 0) == 0);
}

TEST_CASE("tree counts") {
  CHECK(tree_count(graph_from_adjacency(example_adjacency_with_loops())) == 10);
  CHECK(tree_count(graph_from_adjacency(complete_adjacency(4))) == 16);  // 4^2
  CHECK(tree_count(graph_from_adjacency(petersen_adjacency())) == 2000);

  IntMatrix path(3, 3);
  path << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  CHECK(tree_count(graph_from_adjacency(path)) == 1);

  IntMatrix disc = IntMatrix::Zero(2, 2);
  CHECK_THROWS_AS(tree_count(graph_from_adjacency(disc)), DisconnectedGraph);
}

TEST_CASE("structure flags") {
  StructureFlags c3 = structure_flags(graph_from_adjacency(cycle_adjacency(3)));
  CHECK(c3.connected);
  CHECK(!c3.bipartite);
  CHECK(c3.regular_degree == 2);

  IntMatrix dbl(2, 2);
  dbl << 0, 2, 2, 0;
  StructureFlags d = structure_flags(graph_from_adjacency(dbl));
  CHECK(d.connected);
  CHECK(d.bipartite);
  CHECK(d.regular_degree == 2);

  IntMatrix path(3, 3);
  path << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  StructureFlags pf = structure_flags(graph_from_adjacency(path));
  CHECK(pf.connected);
  CHECK(pf.bipartite);
  CHECK(!pf.regular_degree.has_value());
}

TEST_CASE("round trip on random adjacency matrices") {
  std::mt19937 rng(777);
  for (int t = 0; t < 60; ++t) {
    IntMatrix A = random_even_adjacency(rng, 8, 4);
    MultiGraph G = graph_from_adjacency(A);
    CHECK(matrices_equal(adjacency_of(G), A));
    IntMatrix L = laplacian(G);
    for (Eigen::Index i = 0; i < L.rows(); ++i) {
      Int row = 0;
      for (Eigen::Index j = 0; j < L.cols(); ++j) row += L(i, j);
      CHECK(row == 0);
      CHECK(L(i, i) == Int(G.degree(static_cast<int>(i)) - 2 * G.loops_at(static_cast<int>(i))));
    }
    CHECK(matrices_equal(L, laplacian(delete_loops(G))));
  }
}

TEST_CASE("regular graphs: Euler characteristic and bipartite spectral check") {
  for (const auto& G : regular_corpus(1234)) {
    StructureFlags f = structure_flags(G);
    REQUIRE(f.regular_degree.has_value());
    const long long m = G.num_vertices(), k = *f.regular_degree;
    CHECK(euler_characteristic(G) * 2 == m * (2 - k));

    // -k is an adjacency eigenvalue exactly for bipartite graphs
    IntPoly chi = charpoly_int(adjacency_of(G));
    bool has_minus_k = (chi(Int(-k)) == 0);
    CHECK(has_minus_k == f.bipartite);
  }
}
