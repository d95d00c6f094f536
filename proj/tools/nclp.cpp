// Copyright 2026 The nclp Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// nclp: JSON in, JSON out.
//
// Exit codes: 0 success, 1 malformed input or usage, 2 precondition or
// domain error, 3 optimizer did not converge, 4 a verify suite failed.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nclp/nclp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitNotConverged = 3;
constexpr int kExitVerifyFailed = 4;

struct Options {
  std::string input = "-";
  std::string out;
  std::string p = "2";
  int n = 0;
  int m = 1;
  std::uint64_t seed = 1;
  int restarts = 8;
  int iters = 2000;
  double rel_tol = 1e-3;
  int max_m = 0;
  std::string suite = "all";
  bool no_gate = false;
};

double parse_p(const std::string& s) {
  if (s == "inf" || s == "INF" || s == "infinity") return nclp::kInf;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw nclp::structural_error("--p: expected a number or 'inf', got '" + s + "'");
  return v;
}

nclp::SolverConfig solver_config(const Options& o) {
  nclp::SolverConfig c;
  c.seed = o.seed;
  c.restarts = o.restarts;
  c.iters = o.iters;
  c.rel_tol = o.rel_tol;
  c.max_m = o.max_m;
  return c;
}

nclp::json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw nclp::structural_error("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return nclp::parse_json(text);
}

void write_output(const Options& o, const nclp::json& j) {
  if (o.out.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw nclp::structural_error("cannot write '" + o.out + "'");
  out << j.dump(2) << "\n";
}

int cmd_norm(const Options& o) {
  const nclp::Element x = nclp::element_from_json(read_input(o.input));
  write_output(o, {{"value", nclp::lp_norm(x, parse_p(o.p))}});
  return kExitOk;
}

int cmd_s1norm(const Options& o) {
  const nclp::GridElement x = nclp::grid_from_json(read_input(o.input));
  const nclp::S1Result r = nclp::s1_norm(x, parse_p(o.p), solver_config(o));
  nclp::json j = {{"upper", r.upper},
                  {"lower", r.lower},
                  {"oracle", r.oracle},
                  {"status", r.converged ? "CONVERGED" : "NOT_CONVERGED"},
                  {"factorization", nclp::to_json(r.factorization)}};
  write_output(o, j);
  return r.converged ? kExitOk : kExitNotConverged;
}

int cmd_opnorm(const Options& o) {
  const nclp::LpMap t = nclp::map_from_json(read_input(o.input));
  const double p = parse_p(o.p);
  nclp::json j = {{"p", p}, {"m", o.m}};
  if (o.m <= 1) {
    const nclp::NormEstimate e = nclp::op_norm(t, p, solver_config(o));
    j["lower"] = e.value;
    j["exact"] = e.exact;
    j["witness"] = nclp::to_json(e.witness);
  } else {
    const nclp::AmplifiedEstimate e = nclp::amplified_norm(t, p, o.m, solver_config(o));
    j["lower"] = e.value;
    j["chain"] = e.chain;
    j["witness"] = nclp::to_json(e.witness);
  }
  write_output(o, j);
  return kExitOk;
}

int cmd_separating(const Options& o) {
  const nclp::LpMap t = nclp::map_from_json(read_input(o.input));
  const nclp::Extraction ex = nclp::extract_triple(t, parse_p(o.p), solver_config(o));
  nclp::json j = nclp::to_json(ex);
  j.erase("triple");
  write_output(o, j);
  return kExitOk;
}

int cmd_yeadon(const Options& o) {
  const nclp::LpMap t = nclp::map_from_json(read_input(o.input));
  const double p = parse_p(o.p);
  const nclp::SolverConfig cfg = solver_config(o);
  nclp::json j = nclp::to_json(nclp::extract_triple(t, p, cfg));
  if (!o.no_gate && j["separating"].get<bool>() && nclp::is_isometry(t, p, nclp::IsometryMethod::kSample, cfg, 1e-7)) {
    const nclp::json g = nclp::to_json(nclp::theorem_gate(t, p, cfg));
    for (const char* key : {"s1_2", "amp2", "assertions"}) j[key] = g[key];
    j["gate_pass"] = g["pass"];
  }
  write_output(o, j);
  return kExitOk;
}

int cmd_classify(const Options& o) {
  const nclp::LpMap t = nclp::map_from_json(read_input(o.input));
  write_output(o, {{"verdict", std::string(nclp::to_string(nclp::classify(t, parse_p(o.p), solver_config(o))))}});
  return kExitOk;
}

int cmd_verify(const Options& o, bool p_given, bool n_given) {
  nclp::VerifyOptions v;
  v.seed = o.seed;
  v.config = solver_config(o);
  if (p_given) v.p = parse_p(o.p);
  if (n_given) v.n = o.n;
  const nclp::VerifyReport r = nclp::run_suite(o.suite, v);
  write_output(o, nclp::to_json(r));
  return r.pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nclp: noncommutative Lp norms, map norms and Yeadon triples"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_input) {
    if (with_input) sub->add_option("input", o.input, "JSON input file, '-' for stdin");
    sub->add_option("--p", o.p, "Schatten exponent (number >= 1 or 'inf')");
    sub->add_option("--seed", o.seed, "root random seed");
    sub->add_option("--restarts", o.restarts, "optimizer restarts");
    sub->add_option("--iters", o.iters, "iterations per restart");
    sub->add_option("--rel-tol", o.rel_tol, "accepted relative gap");
    sub->add_option("--max-m", o.max_m, "cap on the inner factorization size (>= n, 0: none)");
    sub->add_option("--out", o.out, "write JSON here instead of stdout");
  };
  CLI::App* norm = app.add_subcommand("norm", "weighted Schatten norm of an element");
  CLI::App* s1 = app.add_subcommand("s1norm", "S^1_n-valued norm of a grid");
  CLI::App* op = app.add_subcommand("opnorm", "operator norm lower bound (amplified with --m)");
  CLI::App* sep = app.add_subcommand("separating", "separating-map test with a disjointness witness");
  CLI::App* yea = app.add_subcommand("yeadon", "Yeadon triple, verdict and, for isometries, 2-level gates");
  CLI::App* cls = app.add_subcommand("classify", "direct / anti-direct / mixed / not-separating");
  CLI::App* ver = app.add_subcommand("verify", "run a reproduction suite");
  for (CLI::App* sub : {norm, s1, op, sep, yea, cls}) common(sub, true);
  common(ver, false);
  op->add_option("--m", o.m, "amplification size")->check(CLI::PositiveNumber);
  yea->add_flag("--no-gate", o.no_gate, "skip the 2-level gates");
  CLI::Option* n_opt = ver->add_option("--n", o.n, "restrict size sweeps to this n (2 or 3)");
  ver->add_option("--suite", o.suite, "transpose|oracles|cp|roundtrip|gates|counterexample|corner|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (norm->parsed()) return cmd_norm(o);
    if (s1->parsed()) return cmd_s1norm(o);
    if (op->parsed()) return cmd_opnorm(o);
    if (sep->parsed()) return cmd_separating(o);
    if (yea->parsed()) return cmd_yeadon(o);
    if (cls->parsed()) return cmd_classify(o);
    if (ver->parsed()) return cmd_verify(o, ver->count("--p") > 0, n_opt->count() > 0);
  } catch (const nclp::precondition_error& e) {
    std::cerr << "nclp: precondition failed: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const nclp::domain_error& e) {
    std::cerr << "nclp: domain error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const nclp::structural_error& e) {
    std::cerr << "nclp: invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "nclp: error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
