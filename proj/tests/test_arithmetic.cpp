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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "bz/brandt.hpp"
#include "bz/corpus.hpp"
#include "bz/linalg.hpp"
#include "bz/sturm.hpp"

using namespace bz;

static const std::string kData = BZ_DATA_DIR;

TEST_CASE("hasse polynomial coefficients") {
  FqPoly h13 = hasse_polynomial(13);
  REQUIRE(h13.degree() == 6);
  std::vector<std::uint64_t> expect{1, 10, 4, 10, 4, 10, 1};
  for (int i = 0; i <= 6; ++i) CHECK(h13.c[i].a == expect[i]);

  FqPoly h5 = hasse_polynomial(5);  // 1 + 4x + x^2
  REQUIRE(h5.degree() == 2);
  CHECK(h5.c[0].a == 1);
  CHECK(h5.c[1].a == 4);
  CHECK(h5.c[2].a == 1);

  FqPoly h3 = hasse_polynomial(3);  // 1 + x
  REQUIRE(h3.degree() == 1);
  CHECK(h3.c[0].a == 1);
  CHECK(h3.c[1].a == 1);

  CHECK_THROWS_AS(hasse_polynomial(2), EvenCharacteristic);
}

TEST_CASE("legendre to j") {
  Field F = make_field(13, 2);
  CHECK(legendre_to_j(F.element(-1), F) == F.element(1728));  // = 12 mod 13
  CHECK(legendre_to_j(F.element(2), F) == F.element(1728));
  CHECK_THROWS_AS(legendre_to_j(F.zero(), F), SingularLambda);
  CHECK_THROWS_AS(legendre_to_j(F.one(), F), SingularLambda);
}

TEST_CASE("supersingular locus sizes and membership") {
  SupersingularLocus l13 = supersingular_locus(13);
  REQUIRE(l13.n() == 1);
  CHECK(l13.j[0] == Fq{5, 0});

  CHECK(supersingular_locus(37).n() == 3);
  CHECK(supersingular_locus(61).n() == 5);
  CHECK(supersingular_locus(73).n() == 6);
  CHECK(supersingular_locus(97).n() == 8);
  CHECK(supersingular_locus(109).n() == 9);

  // every reported j has a supersingular Legendre preimage
  for (std::uint64_t N : {13, 37, 61}) {
    SupersingularLocus locus = supersingular_locus(N);
    const Field& F = locus.F;
    FqPoly H = hasse_polynomial(N);
    FqPoly H2{F, {}};
    for (const auto& c : H.c) H2.c.push_back(Fq{c.a, 0});
    for (const auto& j : locus.j) {
      bool found = false;
      for (std::uint64_t idx = 0; idx < F.order() && !found; ++idx) {
        Fq lam = F.element_at(idx);
        if (F.is_zero(lam) || lam == F.one()) continue;
        if (!F.is_zero(H2.eval(lam))) continue;
        found = (legendre_to_j(lam, F) == j);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("modular polynomial loading and validation") {
  ModularPolynomial phi2 = load_modular_polynomial(kData, 2);
  CHECK(phi2.coefficient(3, 0) == 1);
  CHECK(phi2.coefficient(2, 2) == -1);
  CHECK(phi2.coefficient(0, 3) == 1);  // symmetric completion

  ModularPolynomial phi3 = load_modular_polynomial(kData, 3);
  CHECK(phi3.coefficient(4, 0) == 1);
  CHECK(phi3.coefficient(3, 3) == -1);

  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29})
    CHECK(load_modular_polynomial(kData, p).kronecker_congruence_ok());

  CHECK_THROWS_AS(load_modular_polynomial(kData, 31), MissingModularPolynomial);
  CHECK_THROWS_AS(ModularPolynomial::load(modpoly_path(kData, 2), 3), LevelMismatch);
}

TEST_CASE("modular polynomial file error paths") {
  auto write_tmp = [](const std::string& name, const std::string& body) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << body;
    return path;
  };
  std::string bad_sym = write_tmp("bz_badsym.txt", "p 2\n3 0 1\n2 1 7\n1 2 8\n");
  CHECK_THROWS_AS(ModularPolynomial::load(bad_sym, 2), SymmetryViolation);

  std::string garbled = write_tmp("bz_garbled.txt", "p 2\n3 zero 1\n");
  CHECK_THROWS_AS(ModularPolynomial::load(garbled, 2), ParseError);

  std::string not_monic = write_tmp("bz_notmonic.txt", "p 2\n3 0 2\n");
  CHECK_THROWS_AS(ModularPolynomial::load(not_monic, 2), ParseError);

  std::string no_header = write_tmp("bz_nohead.txt", "3 0 1\n");
  CHECK_THROWS_AS(ModularPolynomial::load(no_header, 2), ParseError);
}

TEST_CASE("brandt matrices at N = 13") {
  BrandtMatrix b2 = brandt_matrix(13, 2, BrandtMethod::modpoly, kData);
  REQUIRE(b2.n() == 1);
  CHECK(b2.matrix(0, 0) == 3);  // Phi_2(5, Y) has 5 as a triple root mod 13

  BrandtMatrix b3 = brandt_matrix(13, 3, BrandtMethod::modpoly, kData);
  CHECK(b3.matrix(0, 0) == 4);
  for (std::uint64_t p : {5, 7, 11}) {
    BrandtMatrix bp = brandt_matrix(13, p, BrandtMethod::modpoly, kData);
    CHECK(bp.matrix(0, 0) == Int(p + 1));
  }
}

TEST_CASE("brandt validation records parity findings") {
  BrandtMatrix b2 = brandt_matrix(13, 2, BrandtMethod::modpoly, kData);
  BrandtValidation v2 = validate_brandt(b2);
  CHECK(v2.symmetric);
  CHECK(v2.row_sums_ok);
  CHECK(!v2.even_diagonal);
  REQUIRE(!v2.witnesses.empty());
  CHECK(v2.witnesses[0].find("b[0][0] = 3") != std::string::npos);

  BrandtValidation v3 = validate_brandt(brandt_matrix(13, 3, BrandtMethod::modpoly, kData));
  CHECK(v3.all_ok());
}

TEST_CASE("brandt structure at N = 37") {
  BrandtMatrix B = brandt_matrix(37, 2, BrandtMethod::modpoly, kData);
  REQUIRE(B.n() == 3);
  BrandtValidation v = validate_brandt(B);
  CHECK(v.symmetric);
  CHECK(v.row_sums_ok);

  // eigenvalue p+1 splits off exactly
  IntPoly chi = charpoly_int(B.matrix);
  IntPoly g = divide_exact(chi, IntPoly{-3, 1});
  CHECK(g.degree() == 2);

  // remaining spectrum sits inside the Weil window [-2 sqrt p, 2 sqrt p]
  Surd w(Rat(0), Rat(2), Int(2));
  CHECK(sturm_root_count(g, -w, w) == count_real_roots(g));
}

TEST_CASE("velu 2-isogeny route agrees with the modular polynomial route") {
  for (std::uint64_t N : {13, 37, 61, 73}) {
    BrandtMatrix a = brandt_matrix(N, 2, BrandtMethod::modpoly, kData);
    BrandtMatrix b = brandt_via_velu2(N);
    CHECK(matrices_equal(a.matrix, b.matrix));
    Int rowsum = 0;
    for (Eigen::Index j = 0; j < b.matrix.cols(); ++j) rowsum += b.matrix(0, j);
    CHECK(rowsum == 3);
  }
  CHECK(brandt_via_velu2(13).matrix(0, 0) == 3);
}

TEST_CASE("brandt charpoly is basis independent") {
  std::mt19937 rng(4040);
  BrandtMatrix B = brandt_matrix(73, 5, BrandtMethod::modpoly, kData);
  IntPoly chi = charpoly_int(B.matrix);
  for (int t = 0; t < 5; ++t) {
    auto perm = random_permutation(static_cast<int>(B.n()), rng);
    CHECK(charpoly_int(permute_symmetric(B.matrix, perm)) == chi);
  }
}

TEST_CASE("brandt graphs") {
  BrandtMatrix b3 = brandt_matrix(13, 3, BrandtMethod::modpoly, kData);
  MultiGraph G = brandt_graph(b3);
  CHECK(G.num_vertices() == 1);
  CHECK(G.loops_at(0) == 2);

  CHECK_THROWS_AS(brandt_graph(brandt_matrix(13, 2, BrandtMethod::modpoly, kData)),
                  ParityObstruction);

  // the diagonal of B(5) at level 37 is (1, 1, 2): realization obstructed
  CHECK_THROWS_AS(brandt_graph(brandt_matrix(37, 5, BrandtMethod::modpoly, kData)),
                  ParityObstruction);

  MultiGraph G37 = brandt_graph(brandt_matrix(37, 11, BrandtMethod::modpoly, kData));
  StructureFlags f = structure_flags(G37);
  CHECK(f.connected);
  CHECK(!f.bipartite);
  CHECK(f.regular_degree == 12);
}

TEST_CASE("level structure preconditions") {
  CHECK_THROWS_AS(brandt_matrix(11, 2, BrandtMethod::modpoly, kData), NotCongruentOneMod12);
  CHECK_THROWS_AS(brandt_matrix(13, 13, BrandtMethod::modpoly, kData), std::invalid_argument);
  CHECK_THROWS_AS(brandt_matrix(13, 4, BrandtMethod::modpoly, kData), std::invalid_argument);
  CHECK_THROWS_AS(brandt_matrix(13, 3, BrandtMethod::velu2, kData), std::invalid_argument);
}
