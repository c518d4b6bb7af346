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

#include "bz/io.hpp"

#include <sstream>

#include <json.hpp>

namespace bz {

namespace {

std::string int_array(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + "]";
}

std::string poly_array(const IntPoly& p) {
  if (p.is_zero()) return "[0]";
  return int_array(p.coeffs());
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string graph_to_json(const MultiGraph& G) {
  IntMatrix A = adjacency_of(G);
  std::string s = "{\"vertices\": " + std::to_string(G.num_vertices()) + ", \"adjacency\": [";
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (j) s += ",";
      s += A(i, j).str();
    }
    s += "]";
  }
  return s + "]}\n";
}

MultiGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  if (!j.contains("vertices") || !j.contains("adjacency"))
    throw ParseError("graph JSON needs 'vertices' and 'adjacency'");
  const auto m = j["vertices"].get<std::int64_t>();
  const auto& adj = j["adjacency"];
  if (!adj.is_array() || static_cast<std::int64_t>(adj.size()) != m)
    throw ParseError("adjacency has wrong row count");
  IntMatrix A(m, m);
  for (std::int64_t i = 0; i < m; ++i) {
    if (!adj[i].is_array() || static_cast<std::int64_t>(adj[i].size()) != m)
      throw ParseError("adjacency row " + std::to_string(i) + " has wrong length");
    for (std::int64_t k = 0; k < m; ++k) A(i, k) = Int(adj[i][k].get<std::int64_t>());
  }
  return MultiGraph::from_adjacency(A);
}

std::string graph_to_dot(const MultiGraph& G) {
  IntMatrix A = adjacency_of(G);
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < G.num_vertices(); ++v) os << "  " << v << ";\n";
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (long l = 0; l < A(i, i).convert_to<long>() / 2; ++l)
      os << "  " << i << " -- " << i << ";\n";
    for (Eigen::Index j = i + 1; j < A.cols(); ++j)
      for (long l = 0; l < A(i, j).convert_to<long>(); ++l)
        os << "  " << i << " -- " << j << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string ratfun_to_json(const RatFun& f) {
  return "{\"numerator\": " + poly_array(f.num()) + ", \"denominator\": " + poly_array(f.den()) +
         "}\n";
}

std::string brandt_to_json(const BrandtMatrix& B) {
  std::string s = "{\"N\": " + std::to_string(B.N) + ", \"p\": " + std::to_string(B.p) +
                  ", \"j_invariants\": [";
  for (std::size_t i = 0; i < B.locus.j.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(B.locus.j[i].a) + "," + std::to_string(B.locus.j[i].b) + "]";
  }
  s += "], \"matrix\": [";
  for (Eigen::Index i = 0; i < B.matrix.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (Eigen::Index j = 0; j < B.matrix.cols(); ++j) {
      if (j) s += ",";
      s += B.matrix(i, j).str();
    }
    s += "]";
  }
  return s + "]}\n";
}

std::string validation_to_json(const BrandtMatrix& B, const BrandtValidation& v) {
  std::string s = "{\"N\": " + std::to_string(B.N) + ", \"p\": " + std::to_string(B.p) +
                  ", \"symmetric\": " + (v.symmetric ? "true" : "false") +
                  ", \"even_diagonal\": " + (v.even_diagonal ? "true" : "false") +
                  ", \"row_sums_ok\": " + (v.row_sums_ok ? "true" : "false") + ", \"witnesses\": [";
  for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
    if (i) s += ",";
    s += "\"" + json_escape(v.witnesses[i]) + "\"";
  }
  return s + "]}\n";
}

std::string validation_to_text(const BrandtMatrix& B, const BrandtValidation& v) {
  std::ostringstream os;
  os << "B(" << B.p << ") at N = " << B.N << " (n = " << B.n() << ")\n";
  os << "  symmetric:     " << (v.symmetric ? "yes" : "NO") << "\n";
  os << "  even diagonal: " << (v.even_diagonal ? "yes" : "NO") << "\n";
  os << "  row sums p+1:  " << (v.row_sums_ok ? "yes" : "NO") << "\n";
  for (const auto& w : v.witnesses) os << "    " << w << "\n";
  return os.str();
}

std::string report_to_json(const VerificationReport& rep) {
  std::string s = "{\"N\": " + std::to_string(rep.N) + ", \"p\": " + std::to_string(rep.p) +
                  ", \"all_pass\": " + (rep.all_pass() ? "true" : "false") + ", \"claims\": [";
  for (std::size_t i = 0; i < rep.claims.size(); ++i) {
    const Claim& c = rep.claims[i];
    if (i) s += ",";
    s += "{\"id\": \"" + json_escape(c.id) + "\", \"status\": \"" + to_string(c.status) +
         "\", \"computed\": \"" + json_escape(c.computed) + "\", \"expected\": \"" +
         json_escape(c.expected) + "\", \"note\": \"" + json_escape(c.note) + "\"}";
  }
  return s + "]}\n";
}

std::string report_to_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "verification of N = " << rep.N << ", p = " << rep.p << "\n";
  for (const auto& c : rep.claims) {
    os << "  [" << to_string(c.status) << "] " << c.id;
    if (!c.computed.empty()) os << ": " << c.computed;
    if (!c.expected.empty()) os << " (expect " << c.expected << ")";
    if (!c.note.empty()) os << " -- " << c.note;
    os << "\n";
  }
  os << (rep.all_pass() ? "all claims pass" : "CLAIM FAILURES PRESENT") << "\n";
  return os.str();
}

namespace {

std::string match_str(TableRow::Match m) {
  switch (m) {
    case TableRow::Match::no_fixture: return "";
    case TableRow::Match::match: return "match";
    case TableRow::Match::sign_flip: return "SIGN-DISCREPANCY";
    case TableRow::Match::mismatch: return "VALUE-DISCREPANCY";
  }
  return "";
}

}  // namespace

std::string table_to_csv(std::uint64_t N, const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "N,p,sum_ap,mu,n_divides_mu,published_mu,fixture_check\n";
  for (const auto& r : rows) {
    os << N << "," << r.p << ",";
    if (r.skipped) {
      os << ",,,," << "skipped\n";
      continue;
    }
    os << r.sum_ap.str() << "," << r.mu.str() << "," << (r.divisible ? "yes" : "NO") << ",";
    if (r.fixture_mu) os << r.fixture_mu->str();
    os << "," << match_str(r.match) << "\n";
  }
  return os.str();
}

std::string table_to_text(std::uint64_t N, const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "level N = " << N << " (n = " << (N - 1) / 12 << ")\n";
  os << "   p   sum a_p        mu   n|mu   published   check\n";
  for (const auto& r : rows) {
    os.width(4);
    os << r.p;
    if (r.skipped) {
      os << "   skipped: " << r.skip_reason << "\n";
      continue;
    }
    os << "  ";
    os.width(8);
    os << r.sum_ap.str();
    os << "  ";
    os.width(8);
    os << r.mu.str();
    os << "   " << (r.divisible ? "yes " : "NO  ");
    os << "  ";
    os.width(9);
    os << (r.fixture_mu ? r.fixture_mu->str() : "-");
    std::string m = match_str(r.match);
    if (!m.empty()) {
      os << "   " << m;
      if (r.match != TableRow::Match::match && r.fixture_block_mu)
        os << " (published eigenvalue rows give " << r.fixture_block_mu->str() << ")";
    }
    os << "\n";
  }
  return os.str();
}

std::string locus_to_json(const SupersingularLocus& locus) {
  std::string s = "{\"N\": " + std::to_string(locus.N) + ", \"count\": " +
                  std::to_string(locus.n()) + ", \"j_invariants\": [";
  for (std::size_t i = 0; i < locus.j.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(locus.j[i].a) + "," + std::to_string(locus.j[i].b) + "]";
  }
  return s + "]}\n";
}

std::string locus_to_text(const SupersingularLocus& locus) {
  std::ostringstream os;
  os << "supersingular j-invariants over F_{" << locus.N << "^2} (as a + b*g):\n";
  for (const auto& j : locus.j) os << "  (" << j.a << ", " << j.b << ")\n";
  os << "count: " << locus.n();
  if ((locus.N - 1) % 12 == 0)
    os << "  [(N-1)/12 = " << (locus.N - 1) / 12 << ", all weights 1]";
  os << "\n";
  return os.str();
}

}  // namespace bz
