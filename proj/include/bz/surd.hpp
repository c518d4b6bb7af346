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

#include <string>

#include "bz/intpoly.hpp"
#include "bz/numeric.hpp"

namespace bz {

/// Quadratic irrational a + b*sqrt(d) with a, b rational and d a
/// non-negative integer.  The sign of any such value is decided exactly by
/// comparing a^2 against b^2 d with sign bookkeeping, so interval endpoints
/// like +-2*sqrt(k-1) never require floating point.
///
/// Values with b == 0 (or d in {0, 1}) are folded to rationals; arithmetic
/// between two genuinely irrational values requires the same radicand.
class Surd {
 public:
  Surd() = default;
  Surd(const Rat& a) : a_(a) {}
  Surd(int a) : a_(a) {}
  Surd(const Rat& a, const Rat& b, const Int& d);

  const Rat& rational_part() const { return a_; }
  const Rat& surd_coefficient() const { return b_; }
  const Int& radicand() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  int sgn() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend Surd operator+(const Surd& x, const Surd& y);
  friend Surd operator-(const Surd& x, const Surd& y);
  friend Surd operator*(const Surd& x, const Surd& y);
  Surd operator-() const;

  /// Three-way exact comparison: sign of (*this - o).
  int compare(const Surd& o) const { return (*this - o).sgn(); }
  bool operator==(const Surd& o) const { return compare(o) == 0; }

  std::string str() const;

 private:
  static Int common_radicand(const Surd& x, const Surd& y);
  Rat a_ = 0;
  Rat b_ = 0;
  Int d_ = 0;
};

/// Exact evaluation of f at a quadratic irrational (Horner in Q(sqrt(d))).
Surd evaluate_at(const IntPoly& f, const Surd& x);

}  // namespace bz
