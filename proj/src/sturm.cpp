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

#include "bz/sturm.hpp"

namespace bz {

namespace {

long sign_variations(const std::vector<int>& signs) {
  long v = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

long variations_at(const std::vector<IntPoly>& chain, const Surd& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(evaluate_at(p, x).sgn());
  return sign_variations(signs);
}

long variations_at_infinity(const std::vector<IntPoly>& chain, int dir) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) {
    int s = sgn(p.leading());
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return sign_variations(signs);
}

/// Minimal polynomial of a quadratic irrational (or rational) point over Z.
IntPoly minimal_polynomial(const Surd& x) {
  if (x.is_rational()) {
    // q*t - p for x = p/q
    Int p = rat_num(x.rational_part()), q = rat_den(x.rational_part());
    return IntPoly{-p, q};
  }
  // t^2 - 2a t + (a^2 - b^2 d), denominators cleared
  Rat a = x.rational_part(), b = x.surd_coefficient();
  RatPoly m(std::vector<Rat>{a * a - b * b * Rat(x.radicand()), -2 * a, 1});
  return m.primitive_intpoly();
}

/// The conjugate a - b*sqrt(d).
Surd conjugate(const Surd& x) {
  return Surd(x.rational_part(), -x.surd_coefficient(), x.radicand());
}

}  // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& squarefree) {
  std::vector<IntPoly> chain;
  chain.push_back(squarefree);
  if (squarefree.degree() < 1) return chain;
  chain.push_back(squarefree.derivative());
  while (chain.back().degree() >= 1) {
    RatPoly q, r;
    RatPoly::divmod(RatPoly(chain[chain.size() - 2]), RatPoly(chain.back()), q, r);
    if (r.is_zero()) break;  // cannot happen for squarefree input
    IntPoly next = r.primitive_intpoly();
    if (r.leading() > 0) next = -next;  // keep the sign of -remainder
    chain.push_back(std::move(next));
  }
  return chain;
}

long count_real_roots(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("count_real_roots(0)");
  if (f.degree() == 0) return 0;
  auto chain = sturm_chain(squarefree_part(f));
  return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

long sturm_root_count(const IntPoly& f, const Surd& lo, const Surd& hi) {
  if (f.is_zero()) throw ZeroPolynomial("sturm_root_count(0)");
  if (lo.compare(hi) > 0)
    throw InvalidInterval("empty interval [" + lo.str() + ", " + hi.str() + "]");
  if (f.degree() == 0) return 0;

  IntPoly sf = squarefree_part(f);
  long count = 0;

  // Deflate endpoint roots so the Sturm walk below never evaluates to zero
  // at either end.  Removing the minimal polynomial of an endpoint may also
  // remove its conjugate; count the conjugate if it lies in the interval.
  for (const Surd* end : {&lo, &hi}) {
    if (sf.degree() < 1) break;
    if (evaluate_at(sf, *end).sgn() != 0) continue;
    IntPoly m = minimal_polynomial(*end);
    RatPoly q, r;
    RatPoly::divmod(RatPoly(sf), RatPoly(m), q, r);
    if (!r.is_zero())
      throw InternalInconsistency("endpoint minimal polynomial does not divide");
    sf = q.primitive_intpoly();
    ++count;
    if (!end->is_rational()) {
      Surd c = conjugate(*end);
      if (c.compare(lo) >= 0 && c.compare(hi) <= 0) ++count;
    }
  }

  if (sf.degree() >= 1) {
    auto chain = sturm_chain(sf);
    count += variations_at(chain, lo) - variations_at(chain, hi);
  }
  return count;
}

}  // namespace bz
