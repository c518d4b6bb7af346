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
#include <utility>
#include <vector>

#include "bz/errors.hpp"
#include "bz/intpoly.hpp"
#include "bz/numeric.hpp"

namespace bz {

/// Element of F_N or F_{N^2}, stored as the pair (a, b) meaning a + b*g
/// where g generates the quadratic extension.  The default comparison is
/// lexicographic on (a, b), which is the canonical element ordering.
struct Fq {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  auto operator<=>(const Fq&) const = default;
};

/// F_N (degree 1) or F_{N^2} = F_N[g]/(g^2 - d) with d the least positive
/// quadratic non-residue mod N (degree 2).  Plain value type; elements are
/// bare coordinate pairs and all arithmetic goes through the field.
class Field {
 public:
  /// Throws CompositeModulus if N is not prime.  Degree must be 1 or 2;
  /// degree 2 requires odd N.
  static Field make(std::uint64_t N, int degree);

  std::uint64_t characteristic() const { return N_; }
  int degree() const { return deg_; }
  std::uint64_t nonresidue() const { return nonres_; }
  std::uint64_t order() const { return deg_ == 2 ? N_ * N_ : N_; }
  bool operator==(const Field&) const = default;

  Fq zero() const { return {}; }
  Fq one() const { return {1, 0}; }
  /// Embeds arbitrary integers, reducing mod N (negative values included).
  Fq element(const Int& a, const Int& b = 0) const;
  Fq element_at(std::uint64_t index) const;  // enumeration by (a, b) pairs
  bool is_zero(const Fq& x) const { return x.a == 0 && x.b == 0; }

  Fq add(const Fq& x, const Fq& y) const;
  Fq sub(const Fq& x, const Fq& y) const;
  Fq neg(const Fq& x) const;
  Fq mul(const Fq& x, const Fq& y) const;
  Fq inv(const Fq& x) const;  // ZeroDenominator on 0
  Fq div(const Fq& x, const Fq& y) const { return mul(x, inv(y)); }
  Fq pow(Fq base, std::uint64_t e) const;

  std::string str(const Fq& x) const;

 private:
  Field(std::uint64_t N, int deg, std::uint64_t nonres) : N_(N), deg_(deg), nonres_(nonres) {}
  std::uint64_t mod_mul(std::uint64_t x, std::uint64_t y) const { return x * y % N_; }
  std::uint64_t N_ = 2;
  int deg_ = 1;
  std::uint64_t nonres_ = 0;
};

/// make_field per the library surface: prime check plus non-residue scan.
inline Field make_field(std::uint64_t N, int degree) { return Field::make(N, degree); }

/// Polynomial over a Field, coefficients lowest degree first.
struct FqPoly {
  Field F;
  std::vector<Fq> c;

  static FqPoly from_intpoly(const IntPoly& p, const Field& F);

  int degree() const;
  bool is_zero() const { return degree() < 0; }
  void trim();
  Fq eval(const Fq& x) const;
  /// Quotient by (x - r); remainder returned through `rem`.
  FqPoly deflate(const Fq& r, Fq& rem) const;
  std::string str(const std::string& var = "x") const;
};

/// All roots with multiplicities, found by exhaustive evaluation over the
/// field and repeated deflation; sorted by the canonical (a, b) order.
/// Throws ZeroPolynomial on the zero polynomial.
std::vector<std::pair<Fq, int>> poly_roots(const FqPoly& f);

}  // namespace bz
