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

#include <optional>
#include <vector>

#include "bz/errors.hpp"
#include "bz/linalg.hpp"
#include "bz/numeric.hpp"

namespace bz {

/// Finite multigraph with oriented edges and the orientation-reversal
/// involution J.  Oriented edges are stored in partner pairs: J(e) = e ^ 1.
/// A geometric loop at x contributes two oriented edges with both endpoints
/// x, so the adjacency diagonal counts it twice.
class MultiGraph {
 public:
  struct Edge {
    int tail;
    int head;
  };

  /// The unique multigraph with adjacency matrix A: A(x, y) parallel edges
  /// between distinct x, y and A(x, x)/2 geometric loops at x.  Throws
  /// AsymmetricMatrix, NegativeEntry or OddDiagonal, naming the violated
  /// condition; NonSquare for a non-square input.
  static MultiGraph from_adjacency(const IntMatrix& A);

  int num_vertices() const { return m_; }
  int num_oriented_edges() const { return static_cast<int>(edges_.size()); }
  int num_geometric_edges() const { return num_oriented_edges() / 2; }
  int tail(int e) const { return edges_[e].tail; }
  int head(int e) const { return edges_[e].head; }
  int partner(int e) const { return e ^ 1; }
  const std::vector<Edge>& edges() const { return edges_; }

  int degree(int v) const { return degree_[v]; }
  int loops_at(int v) const { return loops_[v]; }
  bool is_connected() const;

  MultiGraph relabeled(const std::vector<int>& perm) const;

 private:
  MultiGraph() = default;
  int m_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degree_;
  std::vector<int> loops_;
};

struct StructureFlags {
  bool connected = false;
  bool bipartite = false;
  std::optional<int> regular_degree;
};

IntMatrix adjacency_of(const MultiGraph& G);

/// |V| - |GE|; for a k-regular graph this equals m(2-k)/2.
long long euler_characteristic(const MultiGraph& G);

/// Degree matrix minus adjacency ((I + Q) - A); loops cancel out.
IntMatrix laplacian(const MultiGraph& G);

MultiGraph delete_loops(const MultiGraph& G);

/// Number of spanning trees, computed two independent ways that must agree:
/// |linear coefficient of charpoly(Laplacian)| / m and the determinant of the
/// reduced Laplacian.  Throws DisconnectedGraph; InternalInconsistency if the
/// routes differ.
Int tree_count(const MultiGraph& G);

StructureFlags structure_flags(const MultiGraph& G);

inline MultiGraph graph_from_adjacency(const IntMatrix& A) {
  return MultiGraph::from_adjacency(A);
}

}  // namespace bz
