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

#include "bz/graph.hpp"

#include <queue>
#include <stdexcept>

namespace bz {

MultiGraph MultiGraph::from_adjacency(const IntMatrix& A) {
  if (A.rows() != A.cols())
    throw NonSquare("adjacency matrix is " + std::to_string(A.rows()) + "x" +
                    std::to_string(A.cols()));
  const Eigen::Index m = A.rows();
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (A(i, j) < 0)
        throw NegativeEntry("A[" + std::to_string(i) + "][" + std::to_string(j) +
                            "] = " + A(i, j).str());
      if (A(i, j) != A(j, i))
        throw AsymmetricMatrix("A[" + std::to_string(i) + "][" + std::to_string(j) +
                               "] != A[" + std::to_string(j) + "][" + std::to_string(i) + "]");
      if (A(i, j) > (1 << 20)) throw std::invalid_argument("edge multiplicity too large");
    }
    if (A(i, i) % 2 != 0)
      throw OddDiagonal("diagonal entry A[" + std::to_string(i) + "][" + std::to_string(i) +
                        "] = " + A(i, i).str() + " is odd");
  }

  MultiGraph G;
  G.m_ = static_cast<int>(m);
  G.degree_.assign(m, 0);
  G.loops_.assign(m, 0);
  for (Eigen::Index i = 0; i < m; ++i) {
    int loops = A(i, i).convert_to<int>() / 2;
    G.loops_[i] = loops;
    for (int l = 0; l < loops; ++l) {
      G.edges_.push_back({static_cast<int>(i), static_cast<int>(i)});
      G.edges_.push_back({static_cast<int>(i), static_cast<int>(i)});
    }
    for (Eigen::Index j = i + 1; j < m; ++j) {
      int mult = A(i, j).convert_to<int>();
      for (int l = 0; l < mult; ++l) {
        G.edges_.push_back({static_cast<int>(i), static_cast<int>(j)});
        G.edges_.push_back({static_cast<int>(j), static_cast<int>(i)});
      }
    }
  }
  for (const auto& e : G.edges_) ++G.degree_[e.tail];
  return G;
}

bool MultiGraph::is_connected() const {
  if (m_ == 0) return false;
  std::vector<std::vector<int>> adj(m_);
  for (const auto& e : edges_) adj[e.tail].push_back(e.head);
  std::vector<char> seen(m_, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push(w);
      }
    }
  }
  return cnt == m_;
}

MultiGraph MultiGraph::relabeled(const std::vector<int>& perm) const {
  IntMatrix A = adjacency_of(*this);
  return from_adjacency(permute_symmetric(A, perm));
}

IntMatrix adjacency_of(const MultiGraph& G) {
  const int m = G.num_vertices();
  IntMatrix A = IntMatrix::Zero(m, m);
  for (const auto& e : G.edges()) A(e.tail, e.head) += 1;
  return A;
}

long long euler_characteristic(const MultiGraph& G) {
  return static_cast<long long>(G.num_vertices()) - G.num_geometric_edges();
}

IntMatrix laplacian(const MultiGraph& G) {
  const int m = G.num_vertices();
  IntMatrix L = -adjacency_of(G);
  for (int v = 0; v < m; ++v) L(v, v) += G.degree(v);
  return L;
}

MultiGraph delete_loops(const MultiGraph& G) {
  IntMatrix A = adjacency_of(G);
  for (int v = 0; v < G.num_vertices(); ++v) A(v, v) = 0;
  return MultiGraph::from_adjacency(A);
}

Int tree_count(const MultiGraph& G) {
  if (!G.is_connected()) throw DisconnectedGraph("tree_count requires a connected graph");
  const int m = G.num_vertices();
  IntMatrix L = laplacian(G);

  // Kirchhoff via the characteristic polynomial: the product of the nonzero
  // Laplacian eigenvalues is +-(coefficient of x^1), and tau = that / m.
  IntPoly chi = charpoly_int(L);
  Int lin = chi.coeff(1);
  if (lin < 0) lin = -lin;
  if (lin % m != 0) throw InternalInconsistency("Laplacian charpoly linear term not divisible");
  Int via_charpoly = lin / m;

  Int via_minor = det_int(minor_matrix(L, 0));
  if (via_minor < 0) via_minor = -via_minor;

  if (via_charpoly != via_minor)
    throw InternalInconsistency("spanning tree counts disagree: " + via_charpoly.str() +
                                " vs " + via_minor.str());
  return via_charpoly;
}

StructureFlags structure_flags(const MultiGraph& G) {
  StructureFlags f;
  f.connected = G.is_connected();

  const int m = G.num_vertices();
  std::vector<std::vector<int>> adj(m);
  for (const auto& e : G.edges()) adj[e.tail].push_back(e.head);

  // 2-coloring; any loop breaks bipartiteness immediately
  f.bipartite = true;
  for (int v = 0; v < m && f.bipartite; ++v)
    if (G.loops_at(v) > 0) f.bipartite = false;
  std::vector<int> color(m, -1);
  for (int s = 0; s < m && f.bipartite; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && f.bipartite) {
      int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          f.bipartite = false;
          break;
        }
      }
    }
  }

  if (m > 0) {
    int k = G.degree(0);
    bool regular = true;
    for (int v = 1; v < m; ++v)
      if (G.degree(v) != k) {
        regular = false;
        break;
      }
    if (regular) f.regular_degree = k;
  }
  return f;
}

}  // namespace bz
