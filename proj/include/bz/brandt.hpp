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

#include <cstdint>
#include <string>
#include <vector>

#include "bz/field.hpp"
#include "bz/graph.hpp"
#include "bz/modpoly.hpp"

namespace bz {

/// H_N(lambda) = sum binom(m,i)^2 lambda^i with m = (N-1)/2, over F_N.
/// A Legendre curve y^2 = x(x-1)(x-lambda) is supersingular exactly at the
/// roots.  Throws EvenCharacteristic for N = 2.
FqPoly hasse_polynomial(std::uint64_t N);

/// j = 256 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2).
/// Throws SingularLambda for lambda in {0, 1}.
Fq legendre_to_j(const Fq& lambda, const Field& F);

/// The supersingular j-invariants over F_{N^2}, sorted by the canonical
/// (a, b) coordinate order.  All weights are 1 when 12 | N-1 (no j in
/// {0, 1728}), and the count then equals (N-1)/12.
struct SupersingularLocus {
  std::uint64_t N = 0;
  Field F;  // F_{N^2}
  std::vector<Fq> j;
  std::size_t n() const { return j.size(); }
  SupersingularLocus() : F(Field::make(2, 1)) {}
};

/// Exhaustive scan of F_{N^2} against the Hasse polynomial.  Throws
/// MassFormulaViolation or WeightNotOne when 12 | N-1 and the advertised
/// structure fails; requires N >= 5.
SupersingularLocus supersingular_locus(std::uint64_t N);

enum class BrandtMethod { modpoly, velu2 };

/// B(p) for the level N: b_ij counts order-p subgroups C of E_i with
/// E_i/C isomorphic to E_j, realized as the multiplicity of j_j among the
/// roots of Phi_p(j_i, Y).
struct BrandtMatrix {
  std::uint64_t N = 0;
  std::uint64_t p = 0;
  IntMatrix matrix;
  SupersingularLocus locus;
  std::size_t n() const { return locus.n(); }
};

/// Throws NotCongruentOneMod12 unless 12 | N-1, MissingModularPolynomial
/// when the data file is absent, RowSumViolation if a row does not sum to
/// p+1.  The velu2 method is defined for p = 2 only.
BrandtMatrix brandt_matrix(std::uint64_t N, std::uint64_t p, BrandtMethod method,
                           const std::string& data_dir);

/// Independent route for p = 2: enumerate the three 2-torsion subgroups of
/// a Weierstrass model for each E_i and push them through the 2-isogeny.
BrandtMatrix brandt_via_velu2(std::uint64_t N);

struct BrandtValidation {
  bool symmetric = false;
  bool even_diagonal = false;
  bool row_sums_ok = false;
  std::vector<std::string> witnesses;
  bool all_ok() const { return symmetric && even_diagonal && row_sums_ok; }
};

/// Checks symmetry, diagonal parity and row sums, with witnesses for any
/// failure.  Violations are report data, never exceptions: the parity claim
/// in particular is verified empirically for every (N, p), not assumed.
BrandtValidation validate_brandt(const BrandtMatrix& B);

/// Geometric realization of B(p) as a (p+1)-regular multigraph.  Throws
/// ParityObstruction when a diagonal entry is odd; InternalInconsistency if
/// the result is not connected, non-bipartite and (p+1)-regular.
MultiGraph brandt_graph(const BrandtMatrix& B);

}  // namespace bz
