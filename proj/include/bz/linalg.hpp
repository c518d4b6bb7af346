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

#include "bz/intpoly.hpp"
#include "bz/numeric.hpp"

namespace bz {

/// Exact determinant by fraction-free (Bareiss) elimination.
Int det_int(const IntMatrix& M);

/// Monic characteristic polynomial det(xI - M), division-free (Berkowitz).
IntPoly charpoly_int(const IntMatrix& M);

/// Same polynomial via evaluation at dim+1 integer points and exact
/// interpolation; kept as an independent route, results are bit-identical.
IntPoly charpoly_by_interpolation(const IntMatrix& M);

/// det(A0 + A1*t + A2*t^2) for square integer matrices, by evaluation at
/// 2*dim + 1 integer points and exact interpolation.
IntPoly det_quadratic_pencil(const IntMatrix& A0, const IntMatrix& A1, const IntMatrix& A2);

/// Exact matrix product (element loops; Eigen's product kernel is not used
/// for the multiprecision scalar).
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);

/// M with row and column `idx` removed.
IntMatrix minor_matrix(const IntMatrix& M, Eigen::Index idx);

/// P * M * P^T for the permutation sending i to perm[i].
IntMatrix permute_symmetric(const IntMatrix& M, const std::vector<int>& perm);

}  // namespace bz
