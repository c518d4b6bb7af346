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

#include "bz/modpoly.hpp"

#include <fstream>
#include <sstream>

#include "bz/errors.hpp"

namespace bz {

ModularPolynomial ModularPolynomial::load(const std::filesystem::path& file, std::uint64_t p) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open " + file.string());

  std::string line;
  if (!std::getline(in, line)) throw ParseError(file.string() + ": empty file");
  {
    std::istringstream hs(line);
    std::string tag;
    std::uint64_t declared = 0;
    if (!(hs >> tag >> declared) || tag != "p")
      throw ParseError(file.string() + ": bad header '" + line + "'");
    if (declared != p)
      throw LevelMismatch(file.string() + " declares level " + std::to_string(declared) +
                          ", expected " + std::to_string(p));
  }

  ModularPolynomial mp;
  mp.p_ = p;
  const int dmax = static_cast<int>(p) + 1;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    long long a = 0, b = 0;
    std::string cs;
    if (!(ls >> a >> b >> cs))
      throw ParseError(file.string() + ":" + std::to_string(lineno) + ": bad line");
    if (a < 0 || b < 0 || a > dmax || b > dmax)
      throw ParseError(file.string() + ":" + std::to_string(lineno) + ": exponent out of range");
    Int c;
    try {
      c = Int(cs);
    } catch (const std::exception&) {
      throw ParseError(file.string() + ":" + std::to_string(lineno) + ": bad coefficient");
    }
    auto key = std::make_pair(static_cast<int>(std::max(a, b)), static_cast<int>(std::min(a, b)));
    auto [it, inserted] = mp.c_.emplace(key, c);
    if (!inserted && it->second != c)
      throw SymmetryViolation(file.string() + ": conflicting values for X^" +
                              std::to_string(a) + " Y^" + std::to_string(b));
  }
  if (mp.coefficient(dmax, 0) != 1)
    throw ParseError(file.string() + ": not monic of degree " + std::to_string(dmax));
  return mp;
}

Int ModularPolynomial::coefficient(int a, int b) const {
  if (a < b) std::swap(a, b);
  auto it = c_.find({a, b});
  return it == c_.end() ? Int(0) : it->second;
}

FqPoly ModularPolynomial::specialize(const Fq& j, const Field& F) const {
  const int d = static_cast<int>(p_) + 1;
  // powers of j up to degree p+1
  std::vector<Fq> jp(d + 1);
  jp[0] = F.one();
  for (int a = 1; a <= d; ++a) jp[a] = F.mul(jp[a - 1], j);

  FqPoly out{F, std::vector<Fq>(d + 1, F.zero())};
  for (const auto& [key, c] : c_) {
    auto [a, b] = key;
    Fq cf = F.element(c);
    if (F.is_zero(cf)) continue;
    out.c[b] = F.add(out.c[b], F.mul(cf, jp[a]));
    if (a != b) out.c[a] = F.add(out.c[a], F.mul(cf, jp[b]));
  }
  out.trim();
  return out;
}

bool ModularPolynomial::kronecker_congruence_ok() const {
  // reference terms of (X^p - Y)(X - Y^p)
  const int d = static_cast<int>(p_) + 1;
  const Int P(p_);
  auto ref = [&](int a, int b) -> Int {
    if (a == d && b == 0) return 1;
    if (a == static_cast<int>(p_) && b == static_cast<int>(p_)) return -1;
    if (a == 1 && b == 1) return -1;
    return 0;
  };
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= a; ++b)
      if ((coefficient(a, b) - ref(a, b)) % P != 0) return false;
  return true;
}

std::filesystem::path modpoly_path(const std::string& data_dir, std::uint64_t p) {
  return std::filesystem::path(data_dir) / ("phi_" + std::to_string(p) + ".txt");
}

ModularPolynomial load_modular_polynomial(const std::string& data_dir, std::uint64_t p) {
  auto path = modpoly_path(data_dir, p);
  if (!std::filesystem::exists(path))
    throw MissingModularPolynomial("no modular polynomial data for p = " + std::to_string(p) +
                                   " (looked for " + path.string() + ")");
  return ModularPolynomial::load(path, p);
}

}  // namespace bz
