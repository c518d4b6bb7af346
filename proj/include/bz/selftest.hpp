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

#include <string>
#include <vector>

namespace bz {

struct SelfTestResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The full property corpus (graph round-trips, zeta oracle agreement,
/// Brandt cross-oracles) plus the verification matrix.  One result per
/// check; CI runs exactly this.
std::vector<SelfTestResult> run_selftest(const std::string& data_dir);

}  // namespace bz
