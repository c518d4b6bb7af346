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
#include <optional>
#include <string>
#include <vector>

#include "bz/brandt.hpp"
#include "bz/fixtures.hpp"
#include "bz/intpoly.hpp"
#include "bz/report.hpp"

namespace bz {

/// Hecke characteristic polynomial on the cusp forms of weight 2:
///   det[1 - B(p) t + p t^2] / ((1 - t)(1 - pt)),
/// exact division, degree 2(n-1), constant term 1.  An inexact division
/// signals a defective Brandt matrix (ExactDivisionFailure).
IntPoly hecke_charpoly_s2(const BrandtMatrix& B);

/// The monic h of degree m with t^m h(1/t + pt) = P for P of degree 2m with
/// P = prod (1 - a_i t + p t^2); the roots of h are the a_i.
IntPoly real_weil_poly(const IntPoly& P, std::uint64_t p);

/// Congruent zeta function of the modular curve of level N over F_p,
/// computed from the Brandt matrix through the Frobenius determinant
/// identity: numerator(t) / ((1-t)(1-pt)).
struct HasseWeilZeta {
  RatFun value;
  IntPoly numerator;
};

HasseWeilZeta hasse_weil_zeta(const BrandtMatrix& B);

/// Number of points over F_{p^m}, read off the logarithmic derivative.
Int point_count(const HasseWeilZeta& W, int m = 1);

/// Product of the p-th eigenform coefficients, mu_N(p) = det B(p) / (p+1).
Int mu(const BrandtMatrix& B);

/// n * tau through the Laplacian (p+1)I - B by the Kirchhoff product of
/// nonzero eigenvalues; works whether or not B realizes a graph.
Int n_tau_from_matrix(const BrandtMatrix& B);

/// Locus size versus (N-1)/12 and the unit-weight condition.  Claim id
/// "mass-formula"; records not-applicable when 12 does not divide N-1.
Claim eichler_mass_check(std::uint64_t N);

/// Full per-(N, p) verification: Brandt structure (prop3.1.*), Ramanujan
/// graph flags (thm3.1.1), the Weil window on the Hecke polynomial
/// (thm3.1.1-weil), zeta reciprocity (thm1.1.1), the limit formula
/// (thm1.1.2), the complexity identity (thm3.1.3), the divisibility
/// congruence (thm1.2) and the complexity bounds (cor3.1).
VerificationReport verify_theorems(std::uint64_t N, std::uint64_t p,
                                   const std::string& data_dir);

/// One row of the numerical table for level N.
struct TableRow {
  std::uint64_t p = 0;
  bool skipped = false;
  std::string skip_reason;

  Int sum_ap;  // trace B(p) - (p+1)
  Int mu;
  bool divisibility_applicable = false;  // n | p+1
  bool divisible = false;                // n | mu

  std::optional<Int> fixture_mu;        // published product row
  std::optional<Int> fixture_sum;       // sum of published a_p
  std::optional<Int> fixture_block_mu;  // product of published a_p
  enum class Match { no_fixture, match, sign_flip, mismatch };
  Match match = Match::no_fixture;
};

/// Rows for every prime p <= p_max with p != N and n | p+1 (the published
/// layout).  Missing data files make a skipped row, not an error.
std::vector<TableRow> table_report(std::uint64_t N, std::uint64_t p_max,
                                   const std::string& data_dir);

}  // namespace bz
