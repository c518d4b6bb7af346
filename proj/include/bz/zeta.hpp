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

#include "bz/graph.hpp"
#include "bz/intpoly.hpp"
#include "bz/sturm.hpp"

namespace bz {

/// Ihara zeta function of a connected multigraph,
///   Z(G;t) = (1-t^2)^chi / det(I - At + Qt^2),
/// kept together with its three-term determinant and Euler characteristic.
struct IharaZeta {
  RatFun value;
  IntPoly reciprocal;  // det(I - At + Qt^2)
  long long euler_char = 0;
};

IharaZeta ihara_zeta(const MultiGraph& G);  // DisconnectedGraph

/// Formal zeta of a symmetric non-negative integer matrix with constant row
/// sum k, taking Q := (k-1) I.  The diagonal-parity condition of the graph
/// bijection is not required, so 2*chi = m(2-k) may be odd; in that case the
/// closed form is not a rational function of t and value() refuses, while
/// squared() always exists.
struct FormalZeta {
  IntPoly reciprocal;   // det(I - Bt + (k-1)t^2)
  long long chi2 = 0;   // m(2-k)
  bool realizable() const { return chi2 % 2 == 0; }
  RatFun value() const;    // NotRealizable when chi2 is odd
  RatFun squared() const;  // Z^2
};

FormalZeta formal_zeta(const IntMatrix& B, long long k);

/// Non-backtracking edge adjacency: T[e][f] = 1 iff head(e) = tail(f) and
/// f != J(e); indices follow the graph's oriented-edge order.
IntMatrix hashimoto_matrix(const MultiGraph& G);

/// Independent zeta oracle 1/det(I - tT).
RatFun zeta_via_hashimoto(const MultiGraph& G);  // DisconnectedGraph

/// Number of reduced tail-less closed paths of the given length, by
/// exhaustive enumeration (paths, not cyclic classes).  Guarded by
/// BudgetExceeded for len > 12 or more than 40 oriented edges.
long long count_closed_paths(const MultiGraph& G, int len);

struct RamanujanVerdict {
  long long k = 0;
  bool is_regular = false;
  bool is_connected = false;
  bool is_bipartite = false;
  bool is_ramanujan = false;
  long long outside_window = 0;  // distinct eigenvalues beyond 2*sqrt(k-1)
};

/// Exact spectral certificate: charpoly of A, exact division by (x - k)
/// (and (x + k) when bipartite), then a Sturm count over the closed window
/// [-2*sqrt(k-1), 2*sqrt(k-1)].  No floating point anywhere.
RamanujanVerdict ramanujan_certificate(const MultiGraph& G);  // NotRegular, DisconnectedGraph

}  // namespace bz
