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

#include <vector>

#include "bz/intpoly.hpp"
#include "bz/surd.hpp"

namespace bz {

/// Sturm chain of a squarefree polynomial.  Every element is an integer
/// polynomial equal to the canonical chain element times a positive rational,
/// which leaves all sign sequences intact.
std::vector<IntPoly> sturm_chain(const IntPoly& squarefree);

/// Number of distinct real roots of f.
long count_real_roots(const IntPoly& f);

/// Number of distinct real roots of f in the closed interval [lo, hi].
/// Endpoints may be quadratic irrationals; endpoint roots are counted once.
/// Throws InvalidInterval when lo > hi and ZeroPolynomial when f == 0.
long sturm_root_count(const IntPoly& f, const Surd& lo, const Surd& hi);

}  // namespace bz
