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

#include "bz/corpus.hpp"

#include <algorithm>
#include <numeric>

namespace bz {

namespace {
std::uint32_t draw(std::mt19937& rng, std::uint32_t bound) { return rng() % bound; }
}  // namespace

std::vector<MultiGraph> random_multigraph_corpus(int count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<MultiGraph> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count) {
    const int m = 3 + static_cast<int>(draw(rng, 6));
    IntMatrix A = IntMatrix::Zero(m, m);
    std::vector<int> deg(m, 0);
    int ge = 0;
    auto add_edge = [&](int u, int v) {
      if (u == v) {
        A(u, u) += 2;
        deg[u] += 2;
      } else {
        A(u, v) += 1;
        A(v, u) += 1;
        ++deg[u];
        ++deg[v];
      }
      ++ge;
    };
    for (int v = 1; v < m; ++v) add_edge(static_cast<int>(draw(rng, v)), v);
    // lift every vertex to degree >= 2, pairing deficient vertices first
    for (int guard = 0; guard < 64 && ge < 12; ++guard) {
      int a = -1, b = -1;
      for (int v = 0; v < m; ++v)
        if (deg[v] < 2) {
          if (a < 0)
            a = v;
          else {
            b = v;
            break;
          }
        }
      if (a < 0) break;
      add_edge(a, b >= 0 ? b : static_cast<int>(draw(rng, m)));
    }
    bool deficient = std::any_of(deg.begin(), deg.end(), [](int d) { return d < 2; });
    if (deficient) continue;
    while (ge < 12 && draw(rng, 3) == 0) {
      int u = static_cast<int>(draw(rng, m));
      int v = static_cast<int>(draw(rng, m));
      add_edge(u, v);
    }
    out.push_back(MultiGraph::from_adjacency(A));
  }
  return out;
}

std::vector<MultiGraph> regular_corpus(std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<MultiGraph> out;
  out.push_back(MultiGraph::from_adjacency(cycle_adjacency(3)));
  out.push_back(MultiGraph::from_adjacency(complete_adjacency(4)));
  out.push_back(MultiGraph::from_adjacency(petersen_adjacency()));
  out.push_back(MultiGraph::from_adjacency(example_adjacency_with_loops()));
  {
    IntMatrix D(2, 2);
    D << 0, 2, 2, 0;
    out.push_back(MultiGraph::from_adjacency(D));
  }
  // random circulants; offset 1 keeps them connected
  for (int t = 0; t < 6; ++t) {
    const int m = 4 + static_cast<int>(draw(rng, 6));
    std::vector<int> offsets{1};
    for (int s = 2; s <= m / 2; ++s)
      if (draw(rng, 2) == 0) offsets.push_back(s);
    IntMatrix A = IntMatrix::Zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int s : offsets) {
        int j = (i + s) % m;
        A(i, j) += 1;
        A(j, i) += 1;
      }
    out.push_back(MultiGraph::from_adjacency(A));
  }
  return out;
}

IntMatrix random_even_adjacency(std::mt19937& rng, int max_m, int max_entry) {
  const int m = 1 + static_cast<int>(draw(rng, max_m));
  IntMatrix A = IntMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    A(i, i) = 2 * static_cast<int>(draw(rng, max_entry / 2 + 1));
    for (int j = i + 1; j < m; ++j) {
      int v = static_cast<int>(draw(rng, max_entry + 1));
      A(i, j) = v;
      A(j, i) = v;
    }
  }
  return A;
}

std::vector<int> random_permutation(int m, std::mt19937& rng) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = m - 1; i > 0; --i) std::swap(perm[i], perm[draw(rng, i + 1)]);
  return perm;
}

IntMatrix example_adjacency_with_loops() {
  IntMatrix A(4, 4);
  A << 2, 1, 0, 1,
       1, 0, 3, 0,
       0, 3, 0, 1,
       1, 0, 1, 2;
  return A;
}

IntMatrix petersen_adjacency() {
  IntMatrix A = IntMatrix::Zero(10, 10);
  auto link = [&](int u, int v) {
    A(u, v) = 1;
    A(v, u) = 1;
  };
  for (int i = 0; i < 5; ++i) {
    link(i, (i + 1) % 5);      // outer cycle
    link(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    link(i, 5 + i);            // spokes
  }
  return A;
}

IntMatrix complete_adjacency(int m) {
  IntMatrix A = IntMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) A(i, j) = 1;
  return A;
}

IntMatrix cycle_adjacency(int m) {
  IntMatrix A = IntMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    A(i, (i + 1) % m) += 1;
    A((i + 1) % m, i) += 1;
  }
  return A;
}

}  // namespace bz
