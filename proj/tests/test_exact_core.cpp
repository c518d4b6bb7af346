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

#include <random>

#include "bz/corpus.hpp"
#include "bz/field.hpp"
#include "bz/intpoly.hpp"
#include "bz/linalg.hpp"
#include "bz/sturm.hpp"

using namespace bz;

TEST_CASE("field construction") {
  Field F13 = make_field(13, 1);
  CHECK(F13.add(F13.element(5), F13.element(9)) == F13.element(1));

  Field F169 = make_field(13, 2);
  CHECK(F169.nonresidue() == 2);  // squares mod 13 are {1,3,4,9,10,12}

  CHECK_THROWS_AS(make_field(12, 1), CompositeModulus);
  CHECK_THROWS_AS(make_field(1, 1), CompositeModulus);
}

TEST_CASE("field arithmetic round trips") {
  Field F = make_field(13, 2);
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    Fq x = F.element_at(rng() % F.order());
    Fq y = F.element_at(rng() % F.order());
    CHECK(F.sub(F.add(x, y), y) == x);
    if (!F.is_zero(y)) CHECK(F.mul(F.div(x, y), y) == x);
    CHECK(F.pow(x, F.order()) == x);  // Frobenius fixed field of F_{q}
  }
}

TEST_CASE("poly_roots by exhaustive scan") {
  Field F = make_field(13, 1);
  FqPoly f = FqPoly::from_intpoly(IntPoly{1, 0, 1}, F);  // x^2 + 1
  auto roots = poly_roots(f);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == std::pair<Fq, int>{Fq{5, 0}, 1});
  CHECK(roots[1] == std::pair<Fq, int>{Fq{8, 0}, 1});

  FqPoly sq = FqPoly::from_intpoly(IntPoly{0, 0, 1}, F);  // x^2
  auto r2 = poly_roots(sq);
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].first == Fq{0, 0});
  CHECK(r2[0].second == 2);

  // 2 is a non-residue mod 13, so x^2 - 2 has no roots in the prime field
  FqPoly nr = FqPoly::from_intpoly(IntPoly{-2, 0, 1}, F);
  CHECK(poly_roots(nr).empty());

  CHECK_THROWS_AS(poly_roots(FqPoly{F, {}}), ZeroPolynomial);
}

TEST_CASE("poly_roots multiplicities divide exactly") {
  // random products of linear factors over F_7 and F_9
  for (int deg2 : {1, 2}) {
    Field F = make_field(7, deg2);
    std::mt19937 rng(900 + deg2);
    for (int t = 0; t < 20; ++t) {
      int nfac = 1 + rng() % 4;
      FqPoly f{F, {F.one()}};
      std::vector<Fq> used;
      for (int i = 0; i < nfac; ++i) {
        Fq r = F.element_at(rng() % F.order());
        used.push_back(r);
        // multiply by (x - r)
        FqPoly g{F, std::vector<Fq>(f.c.size() + 1, F.zero())};
        for (std::size_t k = 0; k < f.c.size(); ++k) {
          g.c[k + 1] = F.add(g.c[k + 1], f.c[k]);
          g.c[k] = F.sub(g.c[k], F.mul(f.c[k], r));
        }
        f = g;
      }
      auto roots = poly_roots(f);
      int total = 0;
      for (auto& [r, m] : roots) total += m;
      CHECK(total == nfac);
      for (auto& [r, m] : roots) {
        // deflating m times is exact, one more time is not
        FqPoly g = f;
        Fq rem;
        for (int i = 0; i < m; ++i) {
          g = g.deflate(r, rem);
          CHECK(F.is_zero(rem));
        }
        if (g.degree() >= 0) {
          CHECK(!F.is_zero(g.eval(r)));
        }
      }
    }
  }
}

TEST_CASE("charpoly on fixed matrices") {
  IntMatrix S(2, 2);
  S << 0, 1, 1, 0;
  CHECK(charpoly_int(S) == IntPoly{-1, 0, 1});

  CHECK(charpoly_int(IntMatrix::Zero(3, 3)) == IntPoly::monomial(3, 1));

  // adjacency of the 4-regular loop example: (x-4)(x-2)(x^2+2x-4)
  IntPoly expected = IntPoly{-4, 1} * IntPoly{-2, 1} * IntPoly{-4, 2, 1};
  CHECK(charpoly_int(example_adjacency_with_loops()) == expected);

  IntMatrix bad(2, 3);
  CHECK_THROWS_AS(charpoly_int(bad), NonSquare);
}

TEST_CASE("determinants") {
  IntMatrix R(3, 3);
  R << 4, -3, 0, -3, 4, -1, 0, -1, 2;  // reduced Laplacian of the loop example
  CHECK(det_int(R) == 10);

  CHECK(det_int(IntMatrix::Identity(4, 4)) == 1);

  IntMatrix rep(3, 3);
  rep << 1, 2, 3, 1, 2, 3, 4, 5, 6;
  CHECK(det_int(rep) == 0);

  IntMatrix bad(2, 3);
  CHECK_THROWS_AS(det_int(bad), NonSquare);
}

TEST_CASE("charpoly methods are bit-identical and det-consistent") {
  std::mt19937 rng(123);
  for (int t = 0; t < 60; ++t) {
    int n = 1 + rng() % 6;
    IntMatrix M(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = Int(static_cast<long>(rng() % 11)) - 5;
    IntPoly a = charpoly_int(M);
    IntPoly b = charpoly_by_interpolation(M);
    CHECK(a == b);
    CHECK(a.leading() == 1);
    Int at0 = a(Int(0));
    Int expected = det_int(M);
    if (n % 2 == 1) expected = -expected;
    CHECK(at0 == expected);  // charpoly(0) = (-1)^n det
  }
}

TEST_CASE("quadratic pencil determinant") {
  IntMatrix A = cycle_adjacency(3);
  IntMatrix I = IntMatrix::Identity(3, 3);
  IntPoly d = det_quadratic_pencil(I, -A, I);
  CHECK(d == IntPoly{1, 0, 0, -1} * IntPoly{1, 0, 0, -1});  // (1-t^3)^2
}

TEST_CASE("sturm root counts") {
  // roots -1 +- sqrt(5), both inside [-2 sqrt 3, 2 sqrt 3]
  IntPoly f{-4, 2, 1};
  Surd b(Rat(0), Rat(2), Int(3));
  CHECK(sturm_root_count(f, -b, b) == 2);

  IntPoly g{-1, 0, 1};
  CHECK(sturm_root_count(g, Surd(Rat(-1, 2)), Surd(Rat(1, 2))) == 0);
  CHECK(sturm_root_count(g, Surd(Rat(-2)), Surd(Rat(2))) == 2);

  CHECK_THROWS_AS(sturm_root_count(g, Surd(Rat(1)), Surd(Rat(-1))), InvalidInterval);
  CHECK_THROWS_AS(sturm_root_count(IntPoly(), Surd(Rat(0)), Surd(Rat(1))), ZeroPolynomial);

  // endpoint roots are counted once, surd endpoints included
  CHECK(sturm_root_count(g, Surd(Rat(-1)), Surd(Rat(1))) == 2);
  CHECK(sturm_root_count(g, Surd(Rat(1)), Surd(Rat(1))) == 1);
  IntPoly h{-3, 0, 1};  // roots +- sqrt(3)
  Surd s3(Rat(0), Rat(1), Int(3));
  CHECK(sturm_root_count(h, -s3, s3) == 2);
  CHECK(sturm_root_count(h, Surd(Rat(0)), s3) == 1);
  CHECK(count_real_roots(IntPoly{1, 0, 1}) == 0);
}

TEST_CASE("sturm full-window count equals distinct real roots") {
  std::mt19937 rng(321);
  for (int t = 0; t < 40; ++t) {
    // all-real-rooted products with repetitions
    int nfac = 1 + rng() % 6;
    IntPoly f(1);
    std::vector<long> roots;
    for (int i = 0; i < nfac; ++i) {
      long r = static_cast<long>(rng() % 9) - 4;
      roots.push_back(r);
      f = f * IntPoly{Int(-r), Int(1)};
    }
    std::sort(roots.begin(), roots.end());
    long distinct = std::unique(roots.begin(), roots.end()) - roots.begin();
    // Cauchy bound
    Int bound = 1;
    for (const auto& c : f.coeffs())
      if (abs(c) > bound) bound = abs(c);
    bound += 1;
    Surd B((Rat(bound)));
    CHECK(sturm_root_count(f, -B, B) == distinct);
    CHECK(count_real_roots(f) == distinct);
    CHECK(squarefree_part(f).degree() == distinct);
  }
}

TEST_CASE("rational function canonical form") {
  // (1-t^2)^2 / (1-t) reduces to (1-t)(1+t)^2
  IntPoly num = IntPoly{1, 0, -1} * IntPoly{1, 0, -1};
  RatFun z(num, IntPoly{1, -1});
  CHECK(z == RatFun(IntPoly{1, -1} * IntPoly{1, 1} * IntPoly{1, 1}));
  CHECK(z.den() == IntPoly(1));

  CHECK(RatFun(IntPoly(), IntPoly{1, -1}) == RatFun());
  CHECK(RatFun(IntPoly{2, -2}, IntPoly{4, -4}) == RatFun(IntPoly(1), IntPoly(2)));

  CHECK_THROWS_AS(RatFun(IntPoly(1), IntPoly()), ZeroDenominator);
}

TEST_CASE("rational function equality is scaling invariant") {
  std::mt19937 rng(555);
  for (int t = 0; t < 30; ++t) {
    auto rand_poly = [&](int maxdeg) {
      std::vector<Int> c(1 + rng() % (maxdeg + 1));
      for (auto& x : c) x = Int(static_cast<long>(rng() % 9)) - 4;
      return IntPoly(std::move(c));
    };
    IntPoly n = rand_poly(4), d = rand_poly(4), s = rand_poly(3);
    if (d.is_zero()) continue;
    if (s.is_zero()) s = IntPoly(3);
    RatFun a(n, d);
    RatFun b(n * s, d * s);
    CHECK(a == b);
    CHECK(a == a);
  }
}

TEST_CASE("exact division failures are detected") {
  CHECK_THROWS_AS(divide_exact(IntPoly{1, 1}, IntPoly{0, 1}), ExactDivisionFailure);
  CHECK(divide_exact(IntPoly{-1, 0, 1}, IntPoly{1, 1}) == IntPoly{-1, 1});
}

TEST_CASE("surd signs") {
  CHECK(Surd(Rat(0), Rat(2), Int(3)).sgn() == 1);
  CHECK(Surd(Rat(-4), Rat(2), Int(3)).sgn() == -1);   // 2 sqrt 3 = 3.46 < 4
  CHECK(Surd(Rat(-3), Rat(2), Int(3)).sgn() == 1);    // 3.46 > 3
  CHECK(Surd(Rat(-2), Rat(1), Int(4)).sgn() == 0);    // perfect square folds
  CHECK(Surd(Rat(5), Rat(-3), Int(2)).sgn() == 1);    // 3 sqrt 2 = 4.24 < 5
  CHECK(Surd(Rat(4), Rat(-3), Int(2)).sgn() == -1);
  CHECK(evaluate_at(IntPoly{-4, 2, 1}, Surd(Rat(-1), Rat(1), Int(5))).sgn() == 0);
}

TEST_CASE("log derivative series of a polynomial") {
  // 1/(1-t)^2: t Z'/Z of Z = 1/(1-t)^2 gives 2 at every order
  RatFun z(IntPoly(1), IntPoly{1, -1} * IntPoly{1, -1});
  auto s = log_derivative_series(z, 5);
  for (const auto& v : s) CHECK(v == 2);
}
