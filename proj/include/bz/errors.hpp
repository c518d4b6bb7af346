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

#include <stdexcept>
#include <string>

namespace bz {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define BZ_DEFINE_ERROR(Name)                                \
  class Name : public Error {                                \
   public:                                                   \
    explicit Name(const std::string& what) : Error(what) {}  \
  }

// exact arithmetic
BZ_DEFINE_ERROR(CompositeModulus);
BZ_DEFINE_ERROR(EvenCharacteristic);
BZ_DEFINE_ERROR(ZeroPolynomial);
BZ_DEFINE_ERROR(NonSquare);
BZ_DEFINE_ERROR(InvalidInterval);
BZ_DEFINE_ERROR(ZeroDenominator);
BZ_DEFINE_ERROR(ExactDivisionFailure);

// graphs
BZ_DEFINE_ERROR(AsymmetricMatrix);
BZ_DEFINE_ERROR(NegativeEntry);
BZ_DEFINE_ERROR(OddDiagonal);
BZ_DEFINE_ERROR(DisconnectedGraph);
BZ_DEFINE_ERROR(NotRegular);
BZ_DEFINE_ERROR(BudgetExceeded);
BZ_DEFINE_ERROR(InternalInconsistency);
BZ_DEFINE_ERROR(NotRealizable);

// supersingular locus / Brandt matrices
BZ_DEFINE_ERROR(MassFormulaViolation);
BZ_DEFINE_ERROR(WeightNotOne);
BZ_DEFINE_ERROR(SingularLambda);
BZ_DEFINE_ERROR(ParseError);
BZ_DEFINE_ERROR(LevelMismatch);
BZ_DEFINE_ERROR(SymmetryViolation);
BZ_DEFINE_ERROR(MissingModularPolynomial);
BZ_DEFINE_ERROR(RowSumViolation);
BZ_DEFINE_ERROR(NotCongruentOneMod12);
BZ_DEFINE_ERROR(ModelConstructionFailure);
BZ_DEFINE_ERROR(ParityObstruction);

#undef BZ_DEFINE_ERROR

}  // namespace bz
