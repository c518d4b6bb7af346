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

#include "bz/zeta.hpp"

namespace bz {

namespace {

const IntPoly kOneMinusT2{1, 0, -1};

RatFun zeta_from_parts(const IntPoly& det3, long long chi) {
  return RatFun(IntPoly(1), det3) * RatFun(kOneMinusT2).pow(chi);
}

}  // namespace

IharaZeta ihara_zeta(const MultiGraph& G) {
  if (!G.is_connected()) throw DisconnectedGraph("ihara_zeta requires a connected graph");
  const int m = G.num_vertices();
  IntMatrix A = adjacency_of(G);
  IntMatrix I = IntMatrix::Identity(m, m);
  IntMatrix Q = IntMatrix::Zero(m, m);
  for (int v = 0; v < m; ++v) Q(v, v) = G.degree(v) - 1;
  IharaZeta z;
  z.reciprocal = det_quadratic_pencil(I, -A, Q);
  z.euler_char = euler_characteristic(G);
  z.value = zeta_from_parts(z.reciprocal, z.euler_char);
  return z;
}

FormalZeta formal_zeta(const IntMatrix& B, long long k) {
  if (B.rows() != B.cols()) throw NonSquare("formal_zeta: matrix not square");
  const Eigen::Index m = B.rows();
  for (Eigen::Index i = 0; i < m; ++i) {
    Int row = 0;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (B(i, j) < 0) throw NegativeEntry("formal_zeta: negative entry");
      if (B(i, j) != B(j, i)) throw AsymmetricMatrix("formal_zeta: matrix not symmetric");
      row += B(i, j);
    }
    if (row != k)
      throw NotRegular("row " + std::to_string(i) + " sums to " + row.str() +
                       ", expected " + std::to_string(k));
  }
  IntMatrix I = IntMatrix::Identity(m, m);
  IntMatrix Q = IntMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) Q(i, i) = k - 1;
  FormalZeta z;
  z.reciprocal = det_quadratic_pencil(I, -B, Q);
  z.chi2 = static_cast<long long>(m) * (2 - k);
  return z;
}

RatFun FormalZeta::value() const {
  if (!realizable())
    throw NotRealizable("(1-t^2) exponent " + std::to_string(chi2) +
                        "/2 is not an integer");
  return zeta_from_parts(reciprocal, chi2 / 2);
}

RatFun FormalZeta::squared() const {
  return RatFun(IntPoly(1), reciprocal * reciprocal) * RatFun(kOneMinusT2).pow(chi2);
}

IntMatrix hashimoto_matrix(const MultiGraph& G) {
  const int n = G.num_oriented_edges();
  IntMatrix T = IntMatrix::Zero(n, n);
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f)
      if (G.head(e) == G.tail(f) && f != G.partner(e)) T(e, f) = 1;
  return T;
}

RatFun zeta_via_hashimoto(const MultiGraph& G) {
  if (!G.is_connected())
    throw DisconnectedGraph("zeta_via_hashimoto requires a connected graph");
  // det(I - tT) is the reversal of charpoly(T).
  IntPoly chi = charpoly_int(hashimoto_matrix(G));
  return RatFun(IntPoly(1), chi.reversed());
}

long long count_closed_paths(const MultiGraph& G, int len) {
  if (len < 1) throw BudgetExceeded("path length must be >= 1");
  if (len > 12 || G.num_oriented_edges() > 40)
    throw BudgetExceeded("enumeration budget: length <= 12 and at most 40 oriented edges");
  const int n = G.num_oriented_edges();
  long long count = 0;
  std::vector<int> path(len);
  // depth-first extension of reduced paths; closure and tail checked at the end
  auto extend = [&](auto&& self, int depth) -> void {
    if (depth == len) {
      int first = path[0], last = path[len - 1];
      if (G.head(last) == G.tail(first) && last != G.partner(first)) ++count;
      return;
    }
    int prev = path[depth - 1];
    for (int f = 0; f < n; ++f)
      if (G.tail(f) == G.head(prev) && f != G.partner(prev)) {
        path[depth] = f;
        self(self, depth + 1);
      }
  };
  for (int e = 0; e < n; ++e) {
    path[0] = e;
    extend(extend, 1);
  }
  return count;
}

RamanujanVerdict ramanujan_certificate(const MultiGraph& G) {
  StructureFlags flags = structure_flags(G);
  if (!flags.connected)
    throw DisconnectedGraph("ramanujan_certificate requires a connected graph");
  if (!flags.regular_degree)
    throw NotRegular("ramanujan_certificate requires a regular graph");
  const int k = *flags.regular_degree;
  if (k < 2) throw NotRegular("ramanujan_certificate requires degree >= 2");

  RamanujanVerdict v;
  v.k = k;
  v.is_regular = true;
  v.is_connected = true;
  v.is_bipartite = flags.bipartite;

  IntPoly chi = charpoly_int(adjacency_of(G));
  // k is a simple eigenvalue of a connected graph; -k is one iff bipartite
  IntPoly g = divide_exact(chi, IntPoly{Int(-k), Int(1)});
  if (flags.bipartite) g = divide_exact(g, IntPoly{Int(k), Int(1)});

  if (g.degree() < 1) {
    v.is_ramanujan = true;
    return v;
  }
  long total = count_real_roots(g);
  Surd hi(Rat(0), Rat(2), Int(k - 1));
  long inside = sturm_root_count(g, -hi, hi);
  v.outside_window = total - inside;
  v.is_ramanujan = (v.outside_window == 0);
  return v;
}

}  // namespace bz
