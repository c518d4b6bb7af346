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

#include <cstdint>
#include <string>
#include <vector>

namespace bz {

enum class ClaimStatus { pass, fail, skip };

std::string to_string(ClaimStatus s);

/// One verified statement: a stable claim id (each id names exactly one
/// theorem or proposition), the outcome, and the computed/expected witnesses.
struct Claim {
  std::string id;
  ClaimStatus status = ClaimStatus::skip;
  std::string computed;
  std::string expected;
  std::string note;
};

struct VerificationReport {
  std::uint64_t N = 0;
  std::uint64_t p = 0;
  std::vector<Claim> claims;

  /// True when every non-skipped claim passes.
  bool all_pass() const;
  const Claim* find(const std::string& id) const;
};

}  // namespace bz
