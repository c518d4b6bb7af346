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

#include "bz/brandt.hpp"

#include <algorithm>
#include <stdexcept>

#include "bz/zeta.hpp"

namespace bz {

FqPoly hasse_polynomial(std::uint64_t N) {
  if (N == 2) throw EvenCharacteristic("Hasse polynomial needs an odd characteristic");
  Field F = Field::make(N, 1);
  const std::uint64_t m = (N - 1) / 2;
  // binom(m, i)^2 computed exactly, then reduced
  FqPoly H{F, std::vector<Fq>(m + 1, F.zero())};
  Int binom = 1;
  for (std::uint64_t i = 0; i <= m; ++i) {
    H.c[i] = F.element(binom * binom);
    if (i < m) binom = binom * Int(m - i) / Int(i + 1);
  }
  H.trim();
  return H;
}

Fq legendre_to_j(const Fq& lambda, const Field& F) {
  if (F.is_zero(lambda) || lambda == F.one())
    throw SingularLambda("lambda = " + F.str(lambda) + " gives a singular Legendre curve");
  Fq l2 = F.mul(lambda, lambda);
  Fq num = F.add(F.sub(l2, lambda), F.one());
  Fq num3 = F.mul(F.mul(num, num), num);
  num3 = F.mul(F.element(256), num3);
  Fq lm1 = F.sub(lambda, F.one());
  Fq den = F.mul(l2, F.mul(lm1, lm1));
  return F.div(num3, den);
}

SupersingularLocus supersingular_locus(std::uint64_t N) {
  if (N < 5) throw std::invalid_argument("supersingular locus needs N >= 5");
  Field FN = Field::make(N, 1);  // primality is checked here
  Field F = Field::make(N, 2);
  FqPoly H = hasse_polynomial(N);
  // evaluate H (coefficients in F_N) over all of F_{N^2}
  FqPoly H2{F, {}};
  H2.c.reserve(H.c.size());
  for (const auto& c : H.c) H2.c.push_back(Fq{c.a, 0});

  std::vector<Fq> js;
  for (std::uint64_t idx = 0; idx < F.order(); ++idx) {
    Fq lam = F.element_at(idx);
    if (F.is_zero(lam) || lam == F.one()) continue;
    if (!F.is_zero(H2.eval(lam))) continue;
    js.push_back(legendre_to_j(lam, F));
  }
  std::sort(js.begin(), js.end());
  js.erase(std::unique(js.begin(), js.end()), js.end());

  SupersingularLocus locus;
  locus.N = N;
  locus.F = F;
  locus.j = std::move(js);

  if ((N - 1) % 12 == 0) {
    const std::size_t expected = (N - 1) / 12;
    if (locus.n() != expected)
      throw MassFormulaViolation("locus size " + std::to_string(locus.n()) + " != (N-1)/12 = " +
                                 std::to_string(expected) + " for N = " + std::to_string(N));
    Fq j0 = F.zero(), j1728 = F.element(1728);
    for (const auto& j : locus.j)
      if (j == j0 || j == j1728)
        throw WeightNotOne("j = " + F.str(j) + " has extra automorphisms at N = " +
                           std::to_string(N));
  }
  return locus;
}

namespace {

IntMatrix brandt_from_modpoly(const SupersingularLocus& locus, const ModularPolynomial& phi) {
  const Field& F = locus.F;
  const std::size_t n = locus.n();
  const std::uint64_t p = phi.level();
  IntMatrix B = IntMatrix::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    FqPoly f = phi.specialize(locus.j[i], F);
    for (std::size_t jdx = 0; jdx < n; ++jdx) {
      // multiplicity of j_jdx as a root, by repeated exact deflation
      int mult = 0;
      FqPoly g = f;
      Fq rem;
      for (;;) {
        FqPoly q = g.deflate(locus.j[jdx], rem);
        if (!F.is_zero(rem)) break;
        ++mult;
        g = std::move(q);
      }
      B(i, jdx) = mult;
    }
    Int rowsum = 0;
    for (std::size_t jdx = 0; jdx < n; ++jdx) rowsum += B(i, jdx);
    if (rowsum != Int(p + 1))
      throw RowSumViolation("row " + std::to_string(i) + " of B(" + std::to_string(p) +
                            ") sums to " + rowsum.str() + ", expected " + std::to_string(p + 1));
  }
  return B;
}

void require_level_structure(std::uint64_t N, std::uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p == N) throw std::invalid_argument("p must differ from N");
  if ((N - 1) % 12 != 0)
    throw NotCongruentOneMod12("N = " + std::to_string(N) + " is not 1 mod 12");
}

}  // namespace

BrandtMatrix brandt_matrix(std::uint64_t N, std::uint64_t p, BrandtMethod method,
                           const std::string& data_dir) {
  require_level_structure(N, p);
  if (method == BrandtMethod::velu2) {
    if (p != 2) throw std::invalid_argument("the velu2 route is defined for p = 2 only");
    return brandt_via_velu2(N);
  }
  ModularPolynomial phi = load_modular_polynomial(data_dir, p);
  BrandtMatrix B;
  B.N = N;
  B.p = p;
  B.locus = supersingular_locus(N);
  B.matrix = brandt_from_modpoly(B.locus, phi);
  return B;
}

BrandtMatrix brandt_via_velu2(std::uint64_t N) {
  require_level_structure(N, 2);
  BrandtMatrix B;
  B.N = N;
  B.p = 2;
  B.locus = supersingular_locus(N);
  const Field& F = B.locus.F;
  const std::size_t n = B.locus.n();
  B.matrix = IntMatrix::Zero(n, n);

  for (std::size_t i = 0; i < n; ++i) {
    const Fq j = B.locus.j[i];
    // Weierstrass model with j-invariant j (valid since j != 0, 1728):
    //   y^2 = x^3 + ax + b,  a = 3j(1728-j), b = 2j(1728-j)^2
    Fq c = F.sub(F.element(1728), j);
    Fq a = F.mul(F.element(3), F.mul(j, c));
    Fq b = F.mul(F.element(2), F.mul(j, F.mul(c, c)));

    // the three 2-torsion subgroups are the roots of x^3 + ax + b, which
    // splits over F_{N^2} for a supersingular curve
    FqPoly cubic{F, {b, a, F.zero(), F.one()}};
    auto roots = poly_roots(cubic);
    std::size_t total = 0;
    for (const auto& [x0, mult] : roots) total += mult;
    if (roots.size() != 3 || total != 3)
      throw ModelConstructionFailure("2-division cubic does not split simply at j = " +
                                     F.str(j) + " over F_{" + std::to_string(N) + "^2}");

    for (const auto& [x0, mult] : roots) {
      // 2-isogeny with kernel (x0, 0): codomain y^2 = x^3 + (a-5t)x + (b-7w)
      // with t = 3 x0^2 + a, w = x0 t
      Fq t = F.add(F.mul(F.element(3), F.mul(x0, x0)), a);
      Fq w = F.mul(x0, t);
      Fq a2 = F.sub(a, F.mul(F.element(5), t));
      Fq b2 = F.sub(b, F.mul(F.element(7), w));
      // j' = 6912 a'^3 / (4 a'^3 + 27 b'^2)
      Fq a3 = F.mul(F.mul(a2, a2), a2);
      Fq den = F.add(F.mul(F.element(4), a3), F.mul(F.element(27), F.mul(b2, b2)));
      if (F.is_zero(den))
        throw ModelConstructionFailure("singular 2-isogeny codomain at j = " + F.str(j));
      Fq j2 = F.div(F.mul(F.element(6912), a3), den);

      auto it = std::lower_bound(B.locus.j.begin(), B.locus.j.end(), j2);
      if (it == B.locus.j.end() || !(*it == j2))
        throw InternalInconsistency("2-isogenous j-invariant " + F.str(j2) +
                                    " is not in the supersingular locus");
      B.matrix(i, it - B.locus.j.begin()) += 1;
    }
  }
  return B;
}

BrandtValidation validate_brandt(const BrandtMatrix& B) {
  BrandtValidation v;
  v.symmetric = true;
  v.even_diagonal = true;
  v.row_sums_ok = true;
  const auto n = B.matrix.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (B.matrix(i, j) != B.matrix(j, i)) {
        v.symmetric = false;
        v.witnesses.push_back("b[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                              B.matrix(i, j).str() + " != b[" + std::to_string(j) + "][" +
                              std::to_string(i) + "] = " + B.matrix(j, i).str());
      }
    }
    if (B.matrix(i, i) % 2 != 0) {
      v.even_diagonal = false;
      v.witnesses.push_back("b[" + std::to_string(i) + "][" + std::to_string(i) + "] = " +
                            B.matrix(i, i).str() + " is odd");
    }
    Int rowsum = 0;
    for (Eigen::Index j = 0; j < n; ++j) rowsum += B.matrix(i, j);
    if (rowsum != Int(B.p + 1)) {
      v.row_sums_ok = false;
      v.witnesses.push_back("row " + std::to_string(i) + " sums to " + rowsum.str() +
                            " != " + std::to_string(B.p + 1));
    }
  }
  return v;
}

MultiGraph brandt_graph(const BrandtMatrix& B) {
  BrandtValidation v = validate_brandt(B);
  if (!v.even_diagonal) {
    std::string msg = "B(" + std::to_string(B.p) + ") at N = " + std::to_string(B.N) +
                      " is not a graph adjacency matrix:";
    for (const auto& w : v.witnesses) msg += " " + w + ";";
    throw ParityObstruction(msg);
  }
  if (!v.all_ok()) throw InternalInconsistency("Brandt matrix fails validation");
  MultiGraph G = MultiGraph::from_adjacency(B.matrix);
  StructureFlags f = structure_flags(G);
  if (!f.connected || f.bipartite || !f.regular_degree ||
      *f.regular_degree != static_cast<int>(B.p) + 1)
    throw InternalInconsistency("Brandt graph is not a connected non-bipartite (p+1)-regular graph");
  return G;
}

}  // namespace bz
