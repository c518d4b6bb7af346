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

#include "bz/linalg.hpp"

#include <vector>

namespace bz {

namespace {
void require_square(const IntMatrix& M, const char* who) {
  if (M.rows() != M.cols())
    throw NonSquare(std::string(who) + ": matrix is " + std::to_string(M.rows()) + "x" +
                    std::to_string(M.cols()));
}
}  // namespace

Int det_int(const IntMatrix& M_in) {
  require_square(M_in, "det_int");
  const Eigen::Index n = M_in.rows();
  if (n == 0) return 1;
  IntMatrix M = M_in;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = k; i < n; ++i) {
      if (M(i, k) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != k) {
      M.row(piv).swap(M.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        M(i, j) = (M(k, k) * M(i, j) - M(i, k) * M(k, j)) / prev;  // exact by Bareiss
    prev = M(k, k);
  }
  return sign < 0 ? Int(-M(n - 1, n - 1)) : M(n - 1, n - 1);
}

IntPoly charpoly_int(const IntMatrix& A) {
  require_square(A, "charpoly_int");
  const Eigen::Index n = A.rows();
  // Berkowitz: fold one row/column at a time through Toeplitz products.
  std::vector<Int> c{1};  // highest degree first
  for (Eigen::Index r = 1; r <= n; ++r) {
    const Eigen::Index m = r - 1;
    std::vector<Int> col(r + 1);
    col[0] = 1;
    col[1] = -A(m, m);
    if (m > 0) {
      std::vector<Int> w(m), tmp(m);
      for (Eigen::Index i = 0; i < m; ++i) w[i] = A(i, m);
      for (Eigen::Index k = 1; k <= m; ++k) {
        Int dot = 0;
        for (Eigen::Index i = 0; i < m; ++i) dot += A(m, i) * w[i];
        col[k + 1] = -dot;
        if (k < m) {
          for (Eigen::Index i = 0; i < m; ++i) {
            Int s = 0;
            for (Eigen::Index j = 0; j < m; ++j) s += A(i, j) * w[j];
            tmp[i] = s;
          }
          w.swap(tmp);
        }
      }
    }
    std::vector<Int> nc(r + 1);
    for (Eigen::Index i = 0; i <= r; ++i) {
      Int s = 0;
      for (Eigen::Index j = 0; j < r && j <= i; ++j) s += col[i - j] * c[j];
      nc[i] = s;
    }
    c = std::move(nc);
  }
  std::vector<Int> lowest_first(c.rbegin(), c.rend());
  return IntPoly(std::move(lowest_first));
}

IntPoly charpoly_by_interpolation(const IntMatrix& M) {
  require_square(M, "charpoly_by_interpolation");
  const Eigen::Index n = M.rows();
  std::vector<Int> xs, ys;
  xs.reserve(n + 1);
  ys.reserve(n + 1);
  IntMatrix T = -M;
  for (Eigen::Index k = 0; k <= n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) T(i, i) = Int(k) - M(i, i);
    xs.emplace_back(k);
    ys.push_back(det_int(T));
  }
  return interpolate_integer(xs, ys);
}

IntPoly det_quadratic_pencil(const IntMatrix& A0, const IntMatrix& A1, const IntMatrix& A2) {
  require_square(A0, "det_quadratic_pencil");
  if (A1.rows() != A0.rows() || A2.rows() != A0.rows() || A1.cols() != A0.cols() ||
      A2.cols() != A0.cols())
    throw NonSquare("det_quadratic_pencil: mismatched pencil dimensions");
  const Eigen::Index n = A0.rows();
  if (n == 0) return IntPoly(1);
  const long deg = 2 * static_cast<long>(n);
  std::vector<Int> xs, ys;
  xs.reserve(deg + 1);
  ys.reserve(deg + 1);
  IntMatrix M(n, n);
  for (long k = -static_cast<long>(n); k <= static_cast<long>(n); ++k) {
    Int t(k), t2 = t * t;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) M(i, j) = A0(i, j) + t * A1(i, j) + t2 * A2(i, j);
    xs.push_back(t);
    ys.push_back(det_int(M));
  }
  return interpolate_integer(xs, ys);
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw NonSquare("mat_mul: inner dimensions differ");
  IntMatrix r = IntMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

IntMatrix minor_matrix(const IntMatrix& M, Eigen::Index idx) {
  IntMatrix R(M.rows() - 1, M.cols() - 1);
  for (Eigen::Index i = 0, ri = 0; i < M.rows(); ++i) {
    if (i == idx) continue;
    for (Eigen::Index j = 0, rj = 0; j < M.cols(); ++j) {
      if (j == idx) continue;
      R(ri, rj) = M(i, j);
      ++rj;
    }
    ++ri;
  }
  return R;
}

IntMatrix permute_symmetric(const IntMatrix& M, const std::vector<int>& perm) {
  IntMatrix R(M.rows(), M.cols());
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j) R(perm[i], perm[j]) = M(i, j);
  return R;
}

}  // namespace bz
