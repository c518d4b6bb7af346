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

#include "bz/surd.hpp"

#include <stdexcept>

namespace bz {

namespace {
Int isqrt_floor(const Int& n) { return boost::multiprecision::sqrt(n); }
}  // namespace

Surd::Surd(const Rat& a, const Rat& b, const Int& d) : a_(a), b_(b), d_(d) {
  if (d_ < 0) throw std::invalid_argument("negative radicand");
  if (d_ == 0) {
    b_ = 0;
  } else if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  } else {
    Int r = isqrt_floor(d_);
    if (r * r == d_) {  // perfect square folds to a rational
      a_ += b_ * Rat(r);
      b_ = 0;
    }
  }
  if (b_ == 0) d_ = 0;
}

int Surd::sgn() const {
  if (b_ == 0) return bz::sgn(a_);
  if (a_ == 0) return bz::sgn(b_);
  int sa = bz::sgn(a_), sb = bz::sgn(b_);
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 d
  Rat lhs = a_ * a_, rhs = b_ * b_ * Rat(d_);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

Int Surd::common_radicand(const Surd& x, const Surd& y) {
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0) return x.d_;
  if (x.d_ != y.d_)
    throw std::invalid_argument("mixed radicands: sqrt(" + x.d_.str() + ") vs sqrt(" +
                                y.d_.str() + ")");
  return x.d_;
}

Surd operator+(const Surd& x, const Surd& y) {
  Int d = Surd::common_radicand(x, y);
  return Surd(x.a_ + y.a_, x.b_ + y.b_, d);
}

Surd operator-(const Surd& x, const Surd& y) {
  Int d = Surd::common_radicand(x, y);
  return Surd(x.a_ - y.a_, x.b_ - y.b_, d);
}

Surd operator*(const Surd& x, const Surd& y) {
  Int d = Surd::common_radicand(x, y);
  return Surd(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

Surd Surd::operator-() const {
  Surd r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

std::string Surd::str() const {
  if (b_ == 0) return to_string(a_);
  std::string s = to_string(a_);
  s += (b_ > 0 ? " + " : " - ");
  Rat ab = b_ > 0 ? b_ : Rat(-b_);
  if (ab != 1) s += to_string(ab) + "*";
  s += "sqrt(" + d_.str() + ")";
  return s;
}

Surd evaluate_at(const IntPoly& f, const Surd& x) {
  Surd acc(0);
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * x + Surd(Rat(f.coeff(i)));
  }
  return acc;
}

}  // namespace bz
