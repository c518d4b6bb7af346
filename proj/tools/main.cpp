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

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bz/correspondence.hpp"
#include "bz/io.hpp"
#include "bz/selftest.hpp"
#include "bz/zeta.hpp"

namespace {

// exit codes: 0 pass, 1 usage, 2 claim failure, 3 missing data,
//             4 realization obstruction
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kClaimFailure = 2;
constexpr int kMissingData = 3;
constexpr int kObstruction = 4;

struct Options {
  std::uint64_t N = 0;
  std::uint64_t p = 0;
  std::uint64_t p_max = 29;
  std::string method = "modpoly";
  std::string data_dir;
  std::string format;
  std::string out;
  std::string in;
  std::string kind;
};

std::string resolved_data_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("BRANDT_ZETA_DATA"); env && *env) return env;
  return "data/modpoly";
}

std::string default_format() { return isatty(STDOUT_FILENO) ? "text" : "json"; }

void write_output(const Options& opt, const std::string& payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + opt.out);
  out << payload;
}

void require_prime(std::uint64_t v, const std::string& name) {
  if (!bz::is_prime_u64(v)) throw std::invalid_argument(name + " = " + std::to_string(v) +
                                                        " is not prime");
}

bz::BrandtMethod parse_method(const std::string& m) {
  if (m == "modpoly") return bz::BrandtMethod::modpoly;
  if (m == "velu2") return bz::BrandtMethod::velu2;
  throw std::invalid_argument("unknown method " + m);
}

int run_ss_enum(const Options& opt) {
  require_prime(opt.N, "N");
  bz::SupersingularLocus locus = bz::supersingular_locus(opt.N);
  std::string fmt = opt.format.empty() ? default_format() : opt.format;
  write_output(opt, fmt == "json" ? bz::locus_to_json(locus) : bz::locus_to_text(locus));
  return kOk;
}

int run_brandt_validate(const Options& opt) {
  require_prime(opt.N, "N");
  require_prime(opt.p, "p");
  bz::BrandtMatrix B =
      bz::brandt_matrix(opt.N, opt.p, parse_method(opt.method), resolved_data_dir(opt.data_dir));
  bz::BrandtValidation v = bz::validate_brandt(B);
  std::string fmt = opt.format.empty() ? default_format() : opt.format;
  write_output(opt, fmt == "json" ? bz::validation_to_json(B, v) : bz::validation_to_text(B, v));
  return v.all_ok() ? kOk : kClaimFailure;
}

int run_verify(const Options& opt) {
  require_prime(opt.N, "N");
  require_prime(opt.p, "p");
  if (opt.p == opt.N) throw std::invalid_argument("p must differ from N");
  bz::VerificationReport rep =
      bz::verify_theorems(opt.N, opt.p, resolved_data_dir(opt.data_dir));
  std::string fmt = opt.format.empty() ? default_format() : opt.format;
  write_output(opt, fmt == "json" ? bz::report_to_json(rep) : bz::report_to_text(rep));
  return rep.all_pass() ? kOk : kClaimFailure;
}

int run_table(const Options& opt) {
  require_prime(opt.N, "N");
  auto rows = bz::table_report(opt.N, opt.p_max, resolved_data_dir(opt.data_dir));
  std::string fmt = opt.format.empty() ? (isatty(STDOUT_FILENO) ? "text" : "csv") : opt.format;
  write_output(opt, fmt == "csv" ? bz::table_to_csv(opt.N, rows) : bz::table_to_text(opt.N, rows));
  return kOk;
}

int run_zeta(const Options& opt) {
  std::string fmt = opt.format.empty() ? default_format() : opt.format;
  bz::RatFun z;
  if (!opt.in.empty()) {
    std::ifstream in(opt.in);
    if (!in) throw std::invalid_argument("cannot read " + opt.in);
    std::stringstream buf;
    buf << in.rdbuf();
    bz::MultiGraph G = bz::graph_from_json(buf.str());
    z = bz::ihara_zeta(G).value;
  } else {
    require_prime(opt.N, "N");
    require_prime(opt.p, "p");
    bz::BrandtMatrix B = bz::brandt_matrix(opt.N, opt.p, parse_method(opt.method),
                                           resolved_data_dir(opt.data_dir));
    z = bz::formal_zeta(B.matrix, static_cast<long long>(opt.p) + 1).value();
  }
  write_output(opt, fmt == "text" ? ("Z(t) = " + z.str() + "\n") : bz::ratfun_to_json(z));
  return kOk;
}

int run_emit(const Options& opt) {
  require_prime(opt.N, "N");
  require_prime(opt.p, "p");
  const std::string dir = resolved_data_dir(opt.data_dir);
  bz::BrandtMatrix B = bz::brandt_matrix(opt.N, opt.p, parse_method(opt.method), dir);
  std::string fmt = opt.format.empty() ? "json" : opt.format;

  if (opt.kind == "brandt") {
    write_output(opt, bz::brandt_to_json(B));
  } else if (opt.kind == "graph") {
    bz::MultiGraph G = bz::brandt_graph(B);  // ParityObstruction -> exit 4
    write_output(opt, fmt == "dot" ? bz::graph_to_dot(G) : bz::graph_to_json(G));
  } else if (opt.kind == "zeta") {
    bz::RatFun z = bz::formal_zeta(B.matrix, static_cast<long long>(opt.p) + 1).value();
    write_output(opt, fmt == "text" ? ("Z(t) = " + z.str() + "\n") : bz::ratfun_to_json(z));
  } else if (opt.kind == "hasse-weil") {
    bz::HasseWeilZeta W = bz::hasse_weil_zeta(B);
    write_output(opt, fmt == "text" ? ("W(t) = " + W.value.str() + "\n")
                                    : bz::ratfun_to_json(W.value));
  } else {
    throw std::invalid_argument("unknown emit kind " + opt.kind);
  }
  return kOk;
}

int run_selftest_cmd(const Options& opt) {
  auto results = bz::run_selftest(resolved_data_dir(opt.data_dir));
  bool ok = true;
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) os << " -- " << r.detail;
    os << "\n";
    ok = ok && r.pass;
  }
  os << (ok ? "selftest: all checks passed\n" : "selftest: FAILURES\n");
  write_output(opt, os.str());
  return ok ? kOk : kClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact zeta functions of Brandt-matrix graphs and modular curves"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool needs_p) {
    cmd->add_option("--N", opt.N, "level (prime)")->required();
    if (needs_p) cmd->add_option("--p", opt.p, "prime different from N")->required();
    cmd->add_option("--data-dir", opt.data_dir,
                    "modular polynomial directory (default: $BRANDT_ZETA_DATA or data/modpoly)");
    cmd->add_option("--format", opt.format, "output format");
    cmd->add_option("--out", opt.out, "output file (default: stdout)");
  };

  auto* ss = app.add_subcommand("ss-enum", "enumerate the supersingular locus");
  add_common(ss, false);

  auto* bv = app.add_subcommand("brandt-validate", "check symmetry, parity and row sums of B(p)");
  add_common(bv, true);
  bv->add_option("--method", opt.method, "modpoly or velu2 (p = 2 only)");

  auto* ve = app.add_subcommand("verify", "verify the zeta, complexity and congruence claims");
  add_common(ve, true);

  auto* ta = app.add_subcommand("table", "reproduce the numerical tables");
  ta->add_option("--N", opt.N, "level (prime)")->required();
  ta->add_option("--p-max", opt.p_max, "largest prime to include (default 29)");
  ta->add_option("--data-dir", opt.data_dir, "modular polynomial directory");
  ta->add_option("--format", opt.format, "csv or text");
  ta->add_option("--out", opt.out, "output file");

  auto* ze = app.add_subcommand("zeta", "Ihara zeta function of a graph or of the Brandt graph");
  ze->add_option("--in", opt.in, "graph JSON file ({\"vertices\": m, \"adjacency\": [[..]]})");
  ze->add_option("--N", opt.N, "level (prime), with --p");
  ze->add_option("--p", opt.p, "prime different from N");
  ze->add_option("--method", opt.method, "modpoly or velu2");
  ze->add_option("--data-dir", opt.data_dir, "modular polynomial directory");
  ze->add_option("--format", opt.format, "json or text");
  ze->add_option("--out", opt.out, "output file");

  auto* em = app.add_subcommand("emit", "write brandt | graph | zeta | hasse-weil payloads");
  em->add_option("kind", opt.kind, "brandt | graph | zeta | hasse-weil")->required();
  add_common(em, true);
  em->add_option("--method", opt.method, "modpoly or velu2");

  auto* st = app.add_subcommand("selftest", "run the property corpus and verification matrix");
  st->add_option("--data-dir", opt.data_dir, "modular polynomial directory");
  st->add_option("--out", opt.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (ss->parsed()) return run_ss_enum(opt);
    if (bv->parsed()) return run_brandt_validate(opt);
    if (ve->parsed()) return run_verify(opt);
    if (ta->parsed()) return run_table(opt);
    if (ze->parsed()) return run_zeta(opt);
    if (em->parsed()) return run_emit(opt);
    if (st->parsed()) return run_selftest_cmd(opt);
  } catch (const bz::ParityObstruction& e) {
    std::cerr << "realization obstruction: " << e.what() << "\n";
    return kObstruction;
  } catch (const bz::NotRealizable& e) {
    std::cerr << "realization obstruction: " << e.what() << "\n";
    return kObstruction;
  } catch (const bz::MissingModularPolynomial& e) {
    std::cerr << "missing data: " << e.what() << "\n";
    return kMissingData;
  } catch (const bz::MassFormulaViolation& e) {
    std::cerr << "claim failure: " << e.what() << "\n";
    return kClaimFailure;
  } catch (const bz::WeightNotOne& e) {
    std::cerr << "claim failure: " << e.what() << "\n";
    return kClaimFailure;
  } catch (const bz::CompositeModulus& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const bz::NotCongruentOneMod12& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const bz::DisconnectedGraph& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const bz::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const bz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kClaimFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kClaimFailure;
  }
  return kUsage;
}
