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

#include <initializer_list>
#include <string>
#include <vector>

#include "bz/errors.hpp"
#include "bz/numeric.hpp"

namespace bz {

/// Univariate polynomial over Z, coefficients lowest degree first.
/// Canonical form: no trailing zero coefficient; the zero polynomial is the
/// empty coefficient sequence (degree -1).
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(int c) : IntPoly(Int(c)) {}
  IntPoly(const Int& c);
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<Int> coeffs);

  static IntPoly variable();                       // t
  static IntPoly monomial(int deg, const Int& c);  // c * t^deg

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of t^i (zero outside the stored range).
  const Int& coeff(int i) const;
  const Int& leading() const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Int& s, const IntPoly& a);
  bool operator==(const IntPoly& o) const = default;

  Int operator()(const Int& x) const;
  Rat operator()(const Rat& x) const;

  IntPoly derivative() const;
  IntPoly pow(unsigned e) const;
  /// t^degree * f(1/t); trailing zeros of the result are trimmed.
  IntPoly reversed() const;

  /// gcd of the coefficients, non-negative; 0 for the zero polynomial.
  Int content() const;
  IntPoly primitive_part() const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Int> c_;
};

/// gcd in Z[t], normalized with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Exact quotient a/b; throws ExactDivisionFailure when b does not divide a
/// over Z[t].
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// f / gcd(f, f'), primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

/// Unique interpolating polynomial through (xs[i], ys[i]); the xs must be
/// distinct and the result must have integer coefficients.
IntPoly interpolate_integer(const std::vector<Int>& xs, const std::vector<Int>& ys);

/// Coefficients s_1..s_m of the power series t*f'(t)/f(t); requires f(0) != 0.
std::vector<Rat> log_derivative_series(const IntPoly& f, int m);

/// Univariate polynomial over Q; a support type for exact division, gcd and
/// Sturm chains.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  explicit RatPoly(const IntPoly& p);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int i) const;
  const Rat& leading() const;

  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator*(const Rat& s, RatPoly a);

  /// Division with remainder: a = q*b + r, deg r < deg b.
  static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);

  bool is_integral() const;
  IntPoly to_intpoly() const;  // requires is_integral()
  /// Integer multiple with coprime coefficients and positive leading sign.
  IntPoly primitive_intpoly() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

/// Quotient of integer polynomials in canonical form: gcd(num, den) is
/// constant +-1 content included, and the denominator has positive leading
/// coefficient.  Equality of values is structural equality.
class RatFun {
 public:
  RatFun() : num_(0), den_(1) {}               // 0/1
  RatFun(IntPoly num, IntPoly den);            // normalizes; ZeroDenominator
  RatFun(const IntPoly& num) : RatFun(num, IntPoly(1)) {}

  static RatFun one() { return RatFun(IntPoly(1)); }

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  RatFun inverse() const;                      // ZeroDenominator on 0
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun pow(long e) const;                    // negative exponents invert
  bool operator==(const RatFun& o) const = default;

  /// Evaluate at a rational point where the denominator does not vanish.
  Rat operator()(const Rat& t) const;

  std::string str(const std::string& var = "t") const;

 private:
  IntPoly num_, den_;
};

/// Coefficients s_1..s_m of t*Z'(t)/Z(t); requires Z(0) != 0, infinity-free.
std::vector<Rat> log_derivative_series(const RatFun& Z, int m);

/// Canonical form of num/den; afterwards equality of values is structural.
inline RatFun ratfun_normalize(IntPoly num, IntPoly den) {
  return RatFun(std::move(num), std::move(den));
}

}  // namespace bz
