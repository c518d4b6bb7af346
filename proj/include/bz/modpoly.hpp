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
#include <filesystem>
#include <map>
#include <string>
#include <utility>

#include "bz/field.hpp"
#include "bz/numeric.hpp"

namespace bz {

/// Classical modular polynomial Phi_p(X, Y): symmetric bivariate, monic of
/// degree p+1 in each variable.  Coefficients are kept exact over Z and
/// reduced modulo the working characteristic at use time, since one loaded
/// level serves every N.
class ModularPolynomial {
 public:
  /// Text format: header "p <prime>", then lines "<a> <b> <coefficient>"
  /// with a >= b by convention (either order is accepted; conflicting
  /// duplicates are a SymmetryViolation).  Unlisted pairs are zero.
  /// Throws ParseError, LevelMismatch, SymmetryViolation.
  static ModularPolynomial load(const std::filesystem::path& file, std::uint64_t p);

  std::uint64_t level() const { return p_; }
  /// Stored coefficients keyed by (a, b) with a >= b.
  const std::map<std::pair<int, int>, Int>& coefficients() const { return c_; }
  Int coefficient(int a, int b) const;

  /// Phi_p(j, Y) as a univariate polynomial over the field of j.
  FqPoly specialize(const Fq& j, const Field& F) const;

  /// Kronecker congruence Phi_p(X,Y) == (X^p - Y)(X - Y^p) mod p.
  bool kronecker_congruence_ok() const;

 private:
  std::uint64_t p_ = 0;
  std::map<std::pair<int, int>, Int> c_;
};

/// File <data_dir>/phi_<p>.txt.
std::filesystem::path modpoly_path(const std::string& data_dir, std::uint64_t p);

/// Loads the shipped data file for level p; throws MissingModularPolynomial
/// when the file does not exist.
ModularPolynomial load_modular_polynomial(const std::string& data_dir, std::uint64_t p);

}  // namespace bz
