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

#include "bz/brandt.hpp"
#include "bz/correspondence.hpp"
#include "bz/graph.hpp"
#include "bz/intpoly.hpp"
#include "bz/report.hpp"

namespace bz {

// Emitters write canonical, byte-stable JSON.  Integer coefficients are
// emitted as bare JSON numbers of arbitrary size (valid JSON; readers that
// cap integers at 64 bits should parse the zeta payloads as big integers).

std::string graph_to_json(const MultiGraph& G);
MultiGraph graph_from_json(const std::string& text);  // ParseError
std::string graph_to_dot(const MultiGraph& G);

/// {"numerator": [...], "denominator": [...]}, lowest degree first.
std::string ratfun_to_json(const RatFun& f);

std::string brandt_to_json(const BrandtMatrix& B);
std::string validation_to_json(const BrandtMatrix& B, const BrandtValidation& v);
std::string validation_to_text(const BrandtMatrix& B, const BrandtValidation& v);

std::string report_to_json(const VerificationReport& rep);
std::string report_to_text(const VerificationReport& rep);

std::string table_to_csv(std::uint64_t N, const std::vector<TableRow>& rows);
std::string table_to_text(std::uint64_t N, const std::vector<TableRow>& rows);

std::string locus_to_json(const SupersingularLocus& locus);
std::string locus_to_text(const SupersingularLocus& locus);

}  // namespace bz
