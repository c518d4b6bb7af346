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

#include "bz/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace bz {

namespace {
const Int kZeroInt = 0;
const Rat kZeroRat = 0;
}  // namespace

// ---------------------------------------------------------------------------
// IntPoly
// ---------------------------------------------------------------------------

IntPoly::IntPoly(const Int& c) {
  if (c != 0) c_.push_back(c);
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

IntPoly IntPoly::variable() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(int deg, const Int& c) {
  if (c == 0) return {};
  std::vector<Int> v(deg + 1);
  v[deg] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroInt;
  return c_[i];
}

const Int& IntPoly::leading() const {
  if (c_.empty()) return kZeroInt;
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly operator*(const Int& s, const IntPoly& a) {
  if (s == 0) return {};
  IntPoly r = a;
  for (auto& x : r.c_) x *= s;
  return r;
}

Int IntPoly::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Int> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Int(i) * c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly base = *this, acc(1);
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return acc;
}

IntPoly IntPoly::reversed() const {
  std::vector<Int> r(c_.rbegin(), c_.rend());
  return IntPoly(std::move(r));
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Int g = content();
  IntPoly r = *this;
  for (auto& x : r.c_) x /= g;
  return r;
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const Int& c = c_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (i == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  Int cg = boost::multiprecision::gcd(a.content(), b.content());
  RatPoly A(a.primitive_part()), B(b.primitive_part()), q, r;
  while (!B.is_zero()) {
    RatPoly::divmod(A, B, q, r);
    A = B;
    B = r;
  }
  return cg * A.primitive_intpoly();
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw ExactDivisionFailure("division by the zero polynomial");
  RatPoly q, r;
  RatPoly::divmod(RatPoly(a), RatPoly(b), q, r);
  if (!r.is_zero())
    throw ExactDivisionFailure("remainder is nonzero: (" + a.str() + ") / (" + b.str() + ")");
  if (!q.is_integral())
    throw ExactDivisionFailure("quotient is not integral: (" + a.str() + ") / (" + b.str() + ")");
  return q.to_intpoly();
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw ZeroPolynomial("squarefree part of the zero polynomial");
  if (f.degree() == 0) return IntPoly(1);
  IntPoly g = gcd(f, f.derivative());
  RatPoly q, r;
  RatPoly::divmod(RatPoly(f), RatPoly(g), q, r);
  return q.primitive_intpoly();
}

IntPoly interpolate_integer(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  // Newton's divided differences over Q, then integrality check.
  const std::size_t n = xs.size();
  std::vector<Rat> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = Rat(ys[i]);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rat(xs[i] - xs[i - level]);

  std::vector<Rat> acc;  // polynomial, lowest first
  std::vector<Rat> basis{1};
  for (std::size_t i = 0; i < n; ++i) {
    if (acc.size() < basis.size()) acc.resize(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) acc[k] += dd[i] * basis[k];
    if (i + 1 < n) {
      // basis *= (t - xs[i])
      basis.push_back(0);
      for (std::size_t k = basis.size() - 1; k > 0; --k)
        basis[k] = basis[k - 1] - Rat(xs[i]) * basis[k];
      basis[0] = -Rat(xs[i]) * basis[0];
    }
  }
  RatPoly p(std::move(acc));
  if (!p.is_integral())
    throw ExactDivisionFailure("interpolation produced non-integer coefficients");
  return p.to_intpoly();
}

std::vector<Rat> log_derivative_series(const IntPoly& f, int m) {
  if (f.coeff(0) == 0)
    throw ZeroDenominator("log derivative series needs a nonzero constant term");
  // s * f = t * f'  gives the recurrence  s_m = (m f_m - sum s_j f_{m-j}) / f_0.
  std::vector<Rat> s(m + 1);
  for (int k = 1; k <= m; ++k) {
    Rat acc = Rat(k) * Rat(f.coeff(k));
    for (int j = 1; j < k; ++j) acc -= s[j] * Rat(f.coeff(k - j));
    s[k] = acc / Rat(f.coeff(0));
  }
  return {s.begin() + 1, s.end()};
}

std::vector<Rat> log_derivative_series(const RatFun& Z, int m) {
  auto sn = log_derivative_series(Z.num().is_zero() ? IntPoly(1) : Z.num(), m);
  auto sd = log_derivative_series(Z.den(), m);
  for (int i = 0; i < m; ++i) sn[i] -= sd[i];
  return sn;
}

// ---------------------------------------------------------------------------
// RatPoly
// ---------------------------------------------------------------------------

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
  c_.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c_.emplace_back(x);
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroRat;
  return c_[i];
}

const Rat& RatPoly::leading() const {
  if (c_.empty()) return kZeroRat;
  return c_.back();
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly operator*(const Rat& s, RatPoly a) {
  for (auto& x : a.c_) x *= s;
  a.trim();
  return a;
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  r = a;
  std::vector<Rat> qc;
  if (a.degree() >= b.degree()) qc.resize(a.degree() - b.degree() + 1);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rat f = r.leading() / b.leading();
    qc[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) r.c_[i + shift] -= f * b.c_[i];
    r.trim();
  }
  q = RatPoly(std::move(qc));
}

bool RatPoly::is_integral() const {
  for (const auto& x : c_)
    if (rat_den(x) != 1) return false;
  return true;
}

IntPoly RatPoly::to_intpoly() const {
  std::vector<Int> v;
  v.reserve(c_.size());
  for (const auto& x : c_) v.push_back(rat_num(x));
  return IntPoly(std::move(v));
}

IntPoly RatPoly::primitive_intpoly() const {
  if (is_zero()) return {};
  Int lcm = 1;
  for (const auto& x : c_) lcm = boost::multiprecision::lcm(lcm, rat_den(x));
  std::vector<Int> v;
  v.reserve(c_.size());
  for (const auto& x : c_) v.push_back(rat_num(x) * (lcm / rat_den(x)));
  IntPoly p = IntPoly(std::move(v)).primitive_part();
  return p.leading() < 0 ? -p : p;
}

// ---------------------------------------------------------------------------
// RatFun
// ---------------------------------------------------------------------------

RatFun::RatFun(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  IntPoly g = gcd(num_, den_);
  num_ = divide_exact(num_, g);
  den_ = divide_exact(den_, g);
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool RatFun::is_one() const { return num_ == IntPoly(1) && den_ == IntPoly(1); }

RatFun RatFun::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of the zero rational function");
  return RatFun(den_, num_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return RatFun();
  // cross-cancellation keeps the gcds small
  IntPoly g1 = gcd(a.num_, b.den_);
  IntPoly g2 = gcd(b.num_, a.den_);
  IntPoly n = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
  IntPoly d = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
  return RatFun(std::move(n), std::move(d));
}

RatFun operator/(const RatFun& a, const RatFun& b) { return a * b.inverse(); }

RatFun RatFun::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun base = *this, acc = RatFun::one();
  while (e) {
    if (e & 1l) acc = acc * base;
    e >>= 1l;
    if (e) base = base * base;
  }
  return acc;
}

Rat RatFun::operator()(const Rat& t) const {
  Rat d = den_(t);
  if (d == 0) throw ZeroDenominator("evaluation at a pole");
  return num_(t) / d;
}

std::string RatFun::str(const std::string& var) const {
  if (den_ == IntPoly(1)) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace bz
