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

// Reproduction suites: each check compares computed values with a closed
// form, an exact oracle or a property, and records one case per instance.

#ifndef NCLP_VERIFY_HPP_
#define NCLP_VERIFY_HPP_

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nclp/json_io.hpp"
#include "nclp/maps.hpp"
#include "nclp/random.hpp"
#include "nclp/vector_valued.hpp"
#include "nclp/yeadon.hpp"

namespace nclp {

// Where an expected value comes from.
inline constexpr const char* kAnalytic = "analytic";        // closed-form value
inline constexpr const char* kOracle = "exact-oracle";      // exact formula evaluated numerically
inline constexpr const char* kProperty = "property";        // identity or inequality on random instances
inline constexpr const char* kClassification = "known-construction";  // verdict fixed by construction

struct VerifyCase {
  std::string name;
  json inputs;
  json expected;
  std::string provenance;
  json computed;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  SolverConfig config;
  std::optional<double> p;  // restricts suites that sweep p
  std::optional<int> n;     // restricts suites that sweep n
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerifyCase> cases;
  double seconds = 0.0;
  bool pass = true;
};

inline json to_json(const VerifyCase& c) {
  return {{"name", c.name},       {"inputs", c.inputs},       {"expected", c.expected},
          {"provenance", c.provenance}, {"computed", c.computed}, {"tolerance", c.tolerance},
          {"pass", c.pass}};
}

inline json to_json(const VerifyReport& r) {
  json cases = json::array();
  std::size_t passed = 0;
  for (const VerifyCase& c : r.cases) {
    cases.push_back(to_json(c));
    passed += c.pass ? 1 : 0;
  }
  return {{"suite", r.suite},        {"seed", r.seed},   {"cases", std::move(cases)},
          {"passed", passed},        {"total", r.cases.size()}, {"pass", r.pass},
          {"wall_clock_seconds", r.seconds}};
}

namespace detail {

inline std::vector<double> sweep(const std::optional<double>& only, std::vector<double> values) {
  if (only) return {*only};
  return values;
}

inline std::vector<int> sweep(const std::optional<int>& only, std::vector<int> values) {
  if (only) {
    if (*only < 2 || *only > 3) throw precondition_error("verify: n must be 2 or 3");
    return {*only};
  }
  return values;
}

inline double cb_transpose(int n, double p) { return std::pow(double(n), 2.0 * std::abs(0.5 - 1.0 / p)); }

}  // namespace detail

// Amplified transposition norms: lower bound in [v (1 - 1e-2), v + 1e-6]
// for v = n^{2|1/2 - 1/p|}.
inline std::vector<VerifyCase> check_transpose_amplified(const VerifyOptions& o) {
  std::vector<VerifyCase> out;
  for (int n : detail::sweep(o.n, {2, 3}))
    for (double p : detail::sweep(o.p, {1.0, 4.0 / 3.0, 4.0})) {
      const double v = detail::cb_transpose(n, p);
      const double got = amplified_norm(transpose_map(n), p, n, o.config).value;
      out.push_back({"amplified transpose norm", {{"n", n}, {"p", p}}, v, kAnalytic, got, 1e-2,
                     got >= v * (1.0 - 1e-2) && got <= v + 1e-6});
    }
  return out;
}

// ||sum E_ij (x) E_ij||_p = n and ||sum E_ij (x) E_ji||_p = n^{2/p} by SVD.
inline std::vector<VerifyCase> check_transpose_constants(const VerifyOptions& o) {
  std::vector<VerifyCase> out;
  for (int n : detail::sweep(o.n, {2, 3}))
    for (double p : detail::sweep(o.p, {1.0, 2.0, 4.0})) {
      const Algebra mn = Algebra::matrices(n);
      const Element units = to_tensor_element(matrix_unit_grid(mn, n));
      const Element swap = amplify_sp(transpose_map(n), n).apply(units);
      const double a = lp_norm(units, p), b = lp_norm(swap, p);
      out.push_back({"norm of assembled [E_ij]", {{"n", n}, {"p", p}}, double(n), kAnalytic, a, 1e-10,
                     std::abs(a - n) <= 1e-10});
      const double sw = std::pow(double(n), 2.0 / p);
      out.push_back({"norm of the swap", {{"n", n}, {"p", p}}, sw, kAnalytic, b, 1e-10, std::abs(b - sw) <= 1e-10});
    }
  return out;
}

// S^1_n-valued norms of [E_ij] and [E_ji] and the S^1 norm of transposition.
inline std::vector<VerifyCase> check_transpose_s1(const VerifyOptions& o) {
  std::vector<VerifyCase> out;
  for (int n : detail::sweep(o.n, {2, 3}))
    for (double p : detail::sweep(o.p, {1.0, 2.0, 4.0})) {
      const Algebra mn = Algebra::matrices(n);
      const json in = {{"n", n}, {"p", p}};
      const double pos = s1_norm_positive(matrix_unit_grid(mn, n), p);
      const double vp = std::pow(double(n), 1.0 / p);
      out.push_back({"s1 norm of [E_ij] (positive cone)", in, vp, kAnalytic, pos, 1e-12,
                     std::abs(pos - vp) <= 1e-12 * vp});
      const Factorization seed = transpose_witness(mn, n);
      const S1Result r = s1_norm_opt(matrix_unit_grid(mn, n, true), p, o.config, std::span(&seed, 1));
      const double vt = std::pow(double(n), 1.0 + 1.0 / p);
      out.push_back({"s1 norm of [E_ji] (seeded optimizer)", in, vt, kAnalytic,
                     {{"upper", r.upper}, {"lower", r.lower}}, 1e-2, std::abs(r.upper - vt) <= 1e-2 * vt});
      const double s1 = s1_map_norm(transpose_map(n), p, n, o.config).value;
      out.push_back({"s1 norm of transposition", in, double(n), kAnalytic, s1, 2e-2, s1 >= n * (1.0 - 2e-2)});
    }
  return out;
}

// p = 1: optimizer against the trace norm of the tensor element.
inline std::vector<VerifyCase> check_p1_oracle(const VerifyOptions& o) {
  std::vector<VerifyCase> out;
  SolverConfig cfg = o.config;
  cfg.structured_seeds = false;
  Rng rng(split_seed(o.seed, 11));
  const Algebra m2 = Algebra::matrices(2);
  for (int i = 0; i < 25; ++i) {
    const GridElement x = random_grid(m2, 2, rng);
    cfg.seed = split_seed(o.seed, 100 + std::uint64_t(i));
    const double exact = s1_norm_p1(x);
    const double got = s1_norm_opt(x, 1.0, cfg).upper;
    out.push_back({"p=1 optimizer vs trace norm", {{"trial", i}}, exact, kOracle, got, 1e-2,
                   std::abs(got - exact) <= 1e-2 * exact});
  }
  return out;
}

// Positive grids: optimizer against ||sum x_ii||_p, never below it.
inline std::vector<VerifyCase> check_positive_cone(const VerifyOptions& o) {
  std::vector<VerifyCase> out;
  SolverConfig cfg = o.config;
  cfg.structured_seeds = false;
  Rng rng(split_seed(o.seed, 12));
  const Algebra m2 = Algebra::matrices(2);
  const std::vector<double> ps = o.p ? std::vector<double>{*o.p} : std::vector<double>{2.0, 3.0};
  for (int i = 0; i < 25; ++i) {
    const double p = ps[std::size_t(i) % ps.size()];
    const GridElement x = random_positive_grid(m2, 2, rng);
    cfg.seed = split_seed(o.seed, 200 + std::uint64_t(i));
    const double exact = diagonal_bound(x, p);
    const double got = s1_norm_opt(x, p, cfg).upper;
    out.push_back({"positive grid optimizer vs ||sum x_ii||_p", {{"trial", i}, {"p", p}}, exact, kOracle, got, 1e-2,
                   std::abs(got - exact) <= 1e-2 * exact && got >= exact - 1e-8});
  }
  return out;
}

// Completely positive maps: ||T||_{S^1_2} lower bound within 1e-2 of ||T||.
inline std::vector<VerifyCase> check_cp_s1(const VerifyOptions& o) {
  std::vector<VerifyCase> out;
  Rng rng(split_seed(o.seed, 13));
  const Algebra m2 = Algebra::matrices(2);
  for (int i = 0; i < 20; ++i) {
    const LpMap t = random_cp_map(m2, m2, rng);
    for (double p : detail::sweep(o.p, {1.0, 3.0})) {
      const double op = op_norm(t, p, o.config).value;
      const double s1 = s1_map_norm(t, p, 2, o.config).value;
      out.push_back({"CP map: s1_2 lower bound vs op_norm", {{"map", i}, {"p", p}}, op, kProperty, s1, 1e-2,
                     s1 <= op * (1.0 + 1e-2) && s1 >= op * (1.0 - 1e-2)});
    }
  }
  return out;
}

namespace detail {

inline Element random_positive_b(const Algebra& a, Rng& rng) {
  Element b = random_positive(a, rng);
  return b + 0.1 * Element::identity(a);
}

}  // namespace detail

// Generated isometries: extract_triple recovers (w, B, J) and the verdict.
inline std::vector<VerifyCase> check_roundtrip(const VerifyOptions& o) {
  std::vector<VerifyCase> out;
  Rng rng(split_seed(o.seed, 14));
  const std::vector<Algebra> doms{Algebra::matrices(2), Algebra({{2, 1.0}, {1, 2.0}}), Algebra::matrices(3)};
  const std::vector<Algebra> fibers{Algebra::matrices(1), Algebra::matrices(2), Algebra({{1, 1.0}, {1, 0.5}})};
  const double ps[] = {1.0, 2.0, 3.0};
  for (int i = 0; i < 30; ++i) {
    const int kind = i % 3;  // 0 direct, 1 anti-direct, 2 mixed
    const double p = ps[(i / 3) % 3];
    IsometrySpec spec;
    spec.dom = doms[std::size_t(i / 9) % doms.size()];
    spec.p = p;
    const Algebra& fa = fibers[std::size_t(i) % fibers.size()];
    const Algebra& fb = fibers[std::size_t(i + 1) % fibers.size()];
    if (kind == 0) {
      spec.parts.push_back({false, detail::random_positive_b(fa, rng)});
    } else if (kind == 1) {
      spec.parts.push_back({true, detail::random_positive_b(fa, rng)});
    } else {
      spec.parts.push_back({false, detail::random_positive_b(fa, rng)});
      spec.parts.push_back({true, detail::random_positive_b(fb, rng)});
    }
    const GeneratedIsometry g = [&] {
      GeneratedIsometry first = generate_isometry(spec);
      if (i % 4 == 0) spec.unitary = random_unitary(first.map.cod(), rng);
      return spec.unitary ? generate_isometry(spec) : first;
    }();
    SolverConfig cfg = o.config;
    cfg.seed = split_seed(o.seed, 300 + std::uint64_t(i));
    const Extraction ex = extract_triple(g.map, p, cfg);
    double dw = 1.0, db = 1.0, dj = 1.0;
    std::string verdict = "not-separating";
    if (ex.triple) {
      dw = distance(ex.triple->w, g.w);
      db = distance(ex.triple->b, g.b);
      dj = (ex.triple->j.matrix() - g.j.matrix()).cwiseAbs().maxCoeff();
      verdict = std::string(to_string(ex.triple->verdict));
    }
    const double worst = std::max({dw, db, dj});
    const std::string expected(to_string(g.verdict));
    out.push_back({"isometry triple round trip",
                   {{"trial", i}, {"p", p}, {"dom", to_json(spec.dom)}, {"parts", spec.parts.size()},
                    {"unitary", spec.unitary.has_value()}},
                   {{"verdict", expected}, {"triple_error", 0.0}},
                   kClassification,
                   {{"verdict", verdict}, {"triple_error", worst}, {"falsifier_consistent", ex.consistent}},
                   1e-8,
                   worst <= 1e-8 && verdict == expected && ex.consistent});
  }
  return out;
}

namespace detail {

inline GeneratedIsometry tensor_isometry(bool anti, double p) {
  IsometrySpec spec;
  spec.dom = Algebra::matrices(2);
  spec.p = p;
  Mat b = Mat::Zero(2, 2);
  b(0, 0) = 1.0;
  b(1, 1) = 2.0;
  spec.parts.push_back({anti, Element::from_matrix(b)});
  return generate_isometry(spec);
}

}  // namespace detail

// 2-level gates for the isometries x -> x (x) b and x -> t(x) (x) b.
inline std::vector<VerifyCase> check_gates(const VerifyOptions& o) {
  std::vector<VerifyCase> out;
  for (double p : detail::sweep(o.p, {1.0, 2.0, 3.0})) {
    const GateReport d = theorem_gate(detail::tensor_isometry(false, p).map, p, o.config);
    out.push_back({"direct isometry: s1_2 <= 1 + 1e-2", {{"p", p}, {"map", "x (x) b"}}, 1.0, kAnalytic, d.s1_2, 1e-2,
                   d.s1_2 <= 1.0 + 1e-2 && d.verdict == Verdict::kDirect});
    out.push_back({"direct isometry: amp2 <= 1 + 1e-2", {{"p", p}, {"map", "x (x) b"}}, 1.0, kAnalytic, d.amp2, 1e-2,
                   d.amp2 <= 1.0 + 1e-2});
    const GateReport a = theorem_gate(detail::tensor_isometry(true, p).map, p, o.config);
    out.push_back({"anti-direct isometry: s1_2 >= 2 - 0.05", {{"p", p}, {"map", "t(x) (x) b"}}, 2.0, kAnalytic, a.s1_2,
                   0.05, a.s1_2 >= 2.0 - 0.05 && a.verdict == Verdict::kAntiDirect});
    if (p == 2.0) {
      out.push_back({"anti-direct isometry at p=2: amp2 <= 1 + 1e-2", {{"p", p}, {"map", "t(x) (x) b"}}, 1.0,
                     kAnalytic, a.amp2, 1e-2, a.amp2 <= 1.0 + 1e-2});
    } else {
      const double v = detail::cb_transpose(2, p);
      out.push_back({"anti-direct isometry: amp2 >= 2^{2|1/2-1/p|} - 0.05", {{"p", p}, {"map", "t(x) (x) b"}}, v,
                     kAnalytic, a.amp2, 0.05, a.amp2 >= v - 0.05});
    }
  }
  return out;
}

// T(x, y) = (x, n^{-1/p} t(x)) on S^p_n + S^p_n.
inline LpMap transpose_pair_map(int n, double p) {
  const Algebra mn = Algebra::matrices(n);
  const Algebra sum = direct_sum(mn, mn);
  const LpMap first = summand_projection(sum, 0, 1);
  const LpMap inner = stack_maps(identity_map(mn), scale(std::pow(double(n), -1.0 / p), transpose_map(n)));
  return compose(inner, first);
}

// The non-isometric separating map T(x, y) = (x, n^{-1/p} t(x)): norm,
// verdict, and every 2-level lower bound against the norm.
inline std::vector<VerifyCase> check_counterexample(const VerifyOptions& o) {
  std::vector<VerifyCase> out;
  const double p = o.p.value_or(1.0);
  const int n = o.n.value_or(2);
  if (n < 2 || n > 3) throw precondition_error("verify: n must be 2 or 3");
  const LpMap t = transpose_pair_map(n, p);
  const json in = {{"n", n}, {"p", p}};
  const double expected = std::pow(1.0 + 1.0 / n, 1.0 / p);
  const double op = op_norm(t, p, o.config).value;
  out.push_back({"norm of (x, n^{-1/p} t(x))", in, expected, kAnalytic, op, 1e-3,
                 std::abs(op - expected) <= 1e-3 * expected});
  const std::string v(to_string(classify(t, p, o.config)));
  out.push_back({"verdict of (x, n^{-1/p} t(x))", in, "mixed", kClassification, v, 0.0, v == "mixed"});
  const double amp = amplified_norm(t, p, 2, o.config).value;
  out.push_back({"amplified lower bound (m=2) <= norm (1 + 1e-2)", in, op, kProperty, amp, 1e-2,
                 amp <= op * (1.0 + 1e-2)});
  const double s1 = s1_map_norm(t, p, 2, o.config).value;
  out.push_back({"s1_2 lower bound <= norm (1 + 1e-2)", in, op, kProperty, s1, 1e-2, s1 <= op * (1.0 + 1e-2)});
  return out;
}

// Grids supported in eMe for a rank-2 projection e of M_4: the value over
// the corner algebra equals the value over M_4.
inline std::vector<VerifyCase> check_corner(const VerifyOptions& o) {
  std::vector<VerifyCase> out;
  Rng rng(split_seed(o.seed, 15));
  const Algebra m4 = Algebra::matrices(4);
  const double p = o.p.value_or(3.0);
  for (int i = 0; i < 10; ++i) {
    const Mat u = random_unitary_matrix(4, rng);
    const Element e = Element::from_matrix(Mat(u.leftCols(2) * u.leftCols(2).adjoint()));
    GridElement x = random_grid(m4, 2, rng);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) x(r, c) = e * x(r, c) * e;
    SolverConfig cfg = o.config;
    cfg.seed = split_seed(o.seed, 400 + std::uint64_t(i));
    const auto [inner, outer] = s1_corner_check(x, e, p, cfg);
    out.push_back({"corner value vs ambient value", {{"trial", i}, {"p", p}}, inner, kProperty, outer, 2e-2,
                   std::abs(inner - outer) <= 2e-2 * std::max(inner, outer)});
  }
  return out;
}

struct Criterion {
  int index;
  const char* suite;
  const char* title;
  std::function<std::vector<VerifyCase>(const VerifyOptions&)> run;
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "transpose", "amplified transposition norms n^{2|1/2-1/p|}", check_transpose_amplified},
      {2, "transpose", "exact norms of [E_ij] and the swap", check_transpose_constants},
      {3, "transpose", "S^1-valued norms of [E_ij], [E_ji] and transposition", check_transpose_s1},
      {4, "oracles", "p=1 optimizer matches the trace norm", check_p1_oracle},
      {5, "oracles", "positive-cone optimizer matches ||sum x_ii||_p", check_positive_cone},
      {6, "cp", "completely positive maps: s1 norm equals the norm", check_cp_s1},
      {7, "roundtrip", "isometry triple round trip and classification", check_roundtrip},
      {8, "gates", "2-level gates for direct and anti-direct isometries", check_gates},
      {9, "counterexample", "non-isometric mixed map: lower bounds stay below the norm", check_counterexample},
      {10, "corner", "corner values equal ambient values", check_corner},
  };
  return all;
}

inline std::vector<std::string> suite_names() {
  return {"transpose", "oracles", "cp", "roundtrip", "gates", "counterexample", "corner", "all"};
}

// Runs every criterion of the suite ("all" runs everything). Throws
// structural_error for an unknown suite.
inline VerifyReport run_suite(const std::string& suite, const VerifyOptions& o) {
  bool known = false;
  for (const std::string& s : suite_names()) known = known || s == suite;
  if (!known) throw structural_error("unknown suite '" + suite + "'");
  VerifyReport rep;
  rep.suite = suite;
  rep.seed = o.seed;
  const auto t0 = std::chrono::steady_clock::now();
  for (const Criterion& c : criteria()) {
    if (suite != "all" && suite != c.suite) continue;
    for (VerifyCase& vc : c.run(o)) {
      rep.pass = rep.pass && vc.pass;
      rep.cases.push_back(std::move(vc));
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace nclp

#endif  // NCLP_VERIFY_HPP_
