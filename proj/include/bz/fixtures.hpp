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
#include <vector>

#include "bz/intpoly.hpp"

namespace bz {

/// Published Hecke eigenvalue data for the levels 37, 61 and 73: the p-th
/// coefficients a_p(f_i) of the weight-2 eigenforms, stored per Galois orbit
/// as the monic integer polynomial whose roots are the orbit's a_p values.
/// Irrational orbits (over Q(sqrt(5)), Q(sqrt(13)) and the cubic field of
/// x^3 - x^2 - 3x + 1) are represented exactly this way; only symmetric
/// functions of the a_p are ever consumed.
///
/// `printed_mu` is the published value of the eigenvalue product; it is
/// compared against computed results, never substituted for them (two table
/// rows are internally inconsistent and are surfaced as discrepancies).
struct EigenformFixture {
  std::uint64_t N = 0;
  std::uint64_t p = 0;
  std::vector<IntPoly> blocks;
  std::optional<Int> printed_mu;

  int dimension() const;                 // sum of block degrees = n - 1
  Int sum_ap() const;                    // sum of all a_p(f_i)
  Int prod_ap() const;                   // product of all a_p(f_i)
  Int prod_one_plus_p_minus_ap() const;  // prod (1 + p - a_p(f_i))
};

std::optional<EigenformFixture> eigenform_fixture(std::uint64_t N, std::uint64_t p);

/// Levels carrying fixture data.
std::vector<std::uint64_t> fixture_levels();

/// Primes with fixture rows at the given level.
std::vector<std::uint64_t> fixture_primes(std::uint64_t N);

}  // namespace bz
