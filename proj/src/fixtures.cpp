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

#include "bz/fixtures.hpp"

#include <algorithm>

namespace bz {

namespace {

IntPoly lin(long a) { return IntPoly{Int(-a), Int(1)}; }  // x - a

struct Row {
  std::uint64_t N;
  std::uint64_t p;
  std::vector<IntPoly> blocks;
  long printed_mu;
};

// Orbit polynomials for the irrational eigenvalue families; the quadratic
// and cubic blocks are the characteristic polynomials of the published
// expressions in the generators of their coefficient fields.
const std::vector<Row>& rows() {
  static const std::vector<Row> data = [] {
    std::vector<Row> r;

    // level 37: two rational eigenforms
    r.push_back({37, 5, {lin(-2), lin(0)}, 0});
    r.push_back({37, 11, {lin(-5), lin(3)}, -15});
    r.push_back({37, 17, {lin(0), lin(6)}, 0});
    r.push_back({37, 23, {lin(2), lin(6)}, 12});
    r.push_back({37, 29, {lin(6), lin(-6)}, 36});
    r.push_back({37, 41, {lin(-9), lin(-9)}, 81});
    r.push_back({37, 47, {lin(-9), lin(3)}, -27});

    // level 61: one rational eigenform plus a cubic orbit
    r.push_back({61, 19, {lin(4), IntPoly{34, 78, 18, 1}}, 80});
    r.push_back({61, 29, {lin(-6), IntPoly{20, -4, -4, 1}}, 120});
    r.push_back({61, 59, {lin(9), IntPoly{-325, 231, -29, 1}}, 2925});
    r.push_back({61, 79, {lin(3), IntPoly{625, -51, -13, 1}}, -1875});
    r.push_back({61, 89, {lin(-4), IntPoly{80, -56, 4, 1}}, 320});

    // level 73: one rational eigenform plus two quadratic orbits
    r.push_back({73, 5, {lin(2), IntPoly{1, 3, 1}, IntPoly{-3, 1, 1}}, -6});
    r.push_back({73, 11, {lin(-2), IntPoly{1, 3, 1}, IntPoly{9, -7, 1}}, -18});
    r.push_back({73, 17, {lin(2), IntPoly{-45, 0, 1}, IntPoly{-9, 4, 1}}, 810});
    r.push_back({73, 23, {lin(4), IntPoly{55, 15, 1}, IntPoly{39, -13, 1}}, 8580});
    r.push_back({73, 29, {lin(2), IntPoly{-11, -6, 1}, IntPoly{-51, -2, 1}}, 1122});
    r.push_back({73, 41, {lin(6), IntPoly{-20, 0, 1}, IntPoly{36, 12, 1}}, 720});
    r.push_back({73, 47, {lin(6), IntPoly{-11, 6, 1}, IntPoly{81, -18, 1}}, 396});
    r.push_back({73, 53, {lin(10), IntPoly{-71, -6, 1}, IntPoly{-51, 2, 1}}, 36210});
    return r;
  }();
  return data;
}

}  // namespace

int EigenformFixture::dimension() const {
  int d = 0;
  for (const auto& b : blocks) d += b.degree();
  return d;
}

Int EigenformFixture::sum_ap() const {
  Int s = 0;
  for (const auto& b : blocks) s -= b.coeff(b.degree() - 1);
  return s;
}

Int EigenformFixture::prod_ap() const {
  Int s = 1;
  for (const auto& b : blocks) {
    Int c = b.coeff(0);
    if (b.degree() % 2 != 0) c = -c;
    s *= c;
  }
  return s;
}

Int EigenformFixture::prod_one_plus_p_minus_ap() const {
  Int s = 1;
  for (const auto& b : blocks) s *= b(Int(1 + p));
  return s;
}

std::optional<EigenformFixture> eigenform_fixture(std::uint64_t N, std::uint64_t p) {
  for (const auto& r : rows()) {
    if (r.N == N && r.p == p) {
      EigenformFixture f;
      f.N = N;
      f.p = p;
      f.blocks = r.blocks;
      f.printed_mu = Int(r.printed_mu);
      return f;
    }
  }
  return std::nullopt;
}

std::vector<std::uint64_t> fixture_levels() { return {37, 61, 73}; }

std::vector<std::uint64_t> fixture_primes(std::uint64_t N) {
  std::vector<std::uint64_t> out;
  for (const auto& r : rows())
    if (r.N == N) out.push_back(r.p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bz
