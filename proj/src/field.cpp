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

#include "bz/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace bz {

namespace {
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1u) r = r * b % m;
    b = b * b % m;
    e >>= 1u;
  }
  return r;
}
}  // namespace

Field Field::make(std::uint64_t N, int degree) {
  if (!is_prime_u64(N)) throw CompositeModulus(std::to_string(N) + " is not prime");
  if (N >= (1ull << 31)) throw std::invalid_argument("modulus too large");
  if (degree != 1 && degree != 2) throw std::invalid_argument("degree must be 1 or 2");
  std::uint64_t nonres = 0;
  if (degree == 2) {
    if (N == 2) throw std::invalid_argument("no quadratic non-residue mod 2");
    for (std::uint64_t c = 2; c < N; ++c) {
      if (pow_mod(c, (N - 1) / 2, N) == N - 1) {
        nonres = c;
        break;
      }
    }
  }
  return Field(N, degree, nonres);
}

Fq Field::element(const Int& a, const Int& b) const {
  Int am = a % Int(N_);
  if (am < 0) am += Int(N_);
  Int bm = b % Int(N_);
  if (bm < 0) bm += Int(N_);
  if (deg_ == 1 && bm != 0) throw std::invalid_argument("degree-1 field has no g component");
  return {am.convert_to<std::uint64_t>(), bm.convert_to<std::uint64_t>()};
}

Fq Field::element_at(std::uint64_t index) const { return {index % N_, index / N_}; }

Fq Field::add(const Fq& x, const Fq& y) const { return {(x.a + y.a) % N_, (x.b + y.b) % N_}; }

Fq Field::sub(const Fq& x, const Fq& y) const {
  return {(x.a + N_ - y.a) % N_, (x.b + N_ - y.b) % N_};
}

Fq Field::neg(const Fq& x) const { return {(N_ - x.a) % N_, (N_ - x.b) % N_}; }

Fq Field::mul(const Fq& x, const Fq& y) const {
  // (a + bg)(c + dg) = ac + bd g^2 + (ad + bc) g,  g^2 = nonresidue
  std::uint64_t ac = mod_mul(x.a, y.a);
  if (deg_ == 1) return {ac, 0};
  std::uint64_t bd = mod_mul(x.b, y.b);
  std::uint64_t re = (ac + mod_mul(bd, nonres_)) % N_;
  std::uint64_t im = (mod_mul(x.a, y.b) + mod_mul(x.b, y.a)) % N_;
  return {re, im};
}

Fq Field::inv(const Fq& x) const {
  if (is_zero(x)) throw ZeroDenominator("inverse of zero field element");
  if (deg_ == 1 || x.b == 0) {
    return {pow_mod(x.a, N_ - 2, N_), 0};
  }
  // (a + bg)^{-1} = (a - bg) / (a^2 - nonres b^2)
  std::uint64_t norm = (mod_mul(x.a, x.a) + N_ - mod_mul(mod_mul(x.b, x.b), nonres_) % N_) % N_;
  std::uint64_t ni = pow_mod(norm, N_ - 2, N_);
  return {mod_mul(x.a, ni), mod_mul((N_ - x.b) % N_, ni)};
}

Fq Field::pow(Fq base, std::uint64_t e) const {
  Fq r = one();
  while (e) {
    if (e & 1u) r = mul(r, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return r;
}

std::string Field::str(const Fq& x) const {
  if (deg_ == 1 || x.b == 0) return std::to_string(x.a);
  return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
}

FqPoly FqPoly::from_intpoly(const IntPoly& p, const Field& F) {
  FqPoly r{F, {}};
  r.c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) r.c.push_back(F.element(x));
  r.trim();
  return r;
}

int FqPoly::degree() const {
  int d = static_cast<int>(c.size()) - 1;
  while (d >= 0 && F.is_zero(c[d])) --d;
  return d;
}

void FqPoly::trim() {
  while (!c.empty() && F.is_zero(c.back())) c.pop_back();
}

Fq FqPoly::eval(const Fq& x) const {
  Fq acc = F.zero();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

FqPoly FqPoly::deflate(const Fq& r, Fq& rem) const {
  // synthetic division by (x - r)
  FqPoly q{F, {}};
  if (c.empty()) {
    rem = F.zero();
    return q;
  }
  q.c.assign(c.size() - 1, F.zero());
  Fq carry = F.zero();
  for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i) {
    carry = F.add(c[i], F.mul(carry, r));
    q.c[i - 1] = carry;
  }
  rem = F.add(c[0], F.mul(carry, r));
  return q;
}

std::string FqPoly::str(const std::string& var) const {
  if (degree() < 0) return "0";
  std::string s;
  for (int i = 0; i <= degree(); ++i) {
    if (F.is_zero(c[i])) continue;
    if (!s.empty()) s += " + ";
    s += F.str(c[i]);
    if (i >= 1) s += "*" + var;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

std::vector<std::pair<Fq, int>> poly_roots(const FqPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("poly_roots of the zero polynomial");
  std::vector<std::pair<Fq, int>> roots;
  const Field& F = f.F;
  for (std::uint64_t idx = 0; idx < F.order(); ++idx) {
    Fq x = F.element_at(idx);
    if (!F.is_zero(f.eval(x))) continue;
    int mult = 0;
    FqPoly g = f;
    Fq rem;
    for (;;) {
      FqPoly q = g.deflate(x, rem);
      if (!F.is_zero(rem)) break;
      ++mult;
      g = std::move(q);
    }
    roots.emplace_back(x, mult);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace bz
