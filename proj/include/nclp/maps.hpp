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

// Norm estimates and positivity tests for LpMap.
//
// Every map norm here is a lower bound carried by a witness. op_norm runs
// the power iteration x <- J_{p'}(T^t J_p(T x)), where J_p is the norming
// functional; ||T x||_p never decreases along it. At p = 2 the value is the
// exact top singular value of the trace-weighted matrix.

#ifndef NCLP_MAPS_HPP_
#define NCLP_MAPS_HPP_

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nclp/algebra.hpp"
#include "nclp/config.hpp"
#include "nclp/grid.hpp"
#include "nclp/lp_map.hpp"
#include "nclp/random.hpp"
#include "nclp/schatten.hpp"
#include "nclp/vector_valued.hpp"

namespace nclp {

struct NormEstimate {
  double value = 0.0;  // ||T x||_p / ||x||_p for the witness
  Element witness;     // normalized, ||x||_p = 1
  bool exact = false;
};

namespace detail {

inline void require_map_exponent(double p, const char* what) {
  require_exponent(p);
  if (std::isinf(p)) throw domain_error(std::string(what) + ": p must be finite");
}

inline RealVec weight_coords(const Algebra& a) {
  RealVec w(a.coord_dim());
  for (std::size_t k = 0; k < a.num_blocks(); ++k)
    w.segment(a.coord_offset(k), Eigen::Index(a.dim(k)) * a.dim(k)).setConstant(a.weight(k));
  return w;
}

inline NormEstimate op_norm_p2(const LpMap& t) {
  const RealVec wd = weight_coords(t.dom()), wc = weight_coords(t.cod());
  const Mat m = wc.cwiseSqrt().cast<cplx>().asDiagonal() * t.matrix() *
                wd.cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal();
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeThinV);
  const Vec v = wd.cwiseSqrt().cwiseInverse().cast<cplx>().asDiagonal() * svd.matrixV().col(0);
  Element x = Element::from_coords(t.dom(), v);
  x *= cplx(1.0 / lp_norm(x, 2.0));
  return {svd.singularValues()(0), std::move(x), true};
}

// Power iteration from x; returns the best normalized iterate.
inline NormEstimate power_iterate(const LpMap& t, double p, Element x, int iters) {
  const double q = conjugate_exponent(p);
  NormEstimate best{0.0, x, false};
  const double nx = lp_norm(x, p);
  if (nx == 0.0) return best;
  x *= cplx(1.0 / nx);
  double last = -1.0;
  for (int it = 0; it < iters; ++it) {
    const Element y = t.apply(x);
    const double ny = lp_norm(y, p);
    if (ny > best.value) best = {ny, x, false};
    if (ny == 0.0 || ny <= last * (1.0 + 1e-13)) break;
    last = ny;
    // tau(T(u) g) = tau(u h) with h = (T^dagger g*)*.
    const Element h = t.dual_apply(norming_functional(y, p).adjoint()).adjoint();
    x = norming_functional(h, q);
    if (x.frobenius() == 0.0) break;
  }
  return best;
}

}  // namespace detail

// Lower bound on ||T: L^p(M) -> L^p(N)|| from the power iteration started
// at each seed, the identity and config.restarts Gaussian points.
inline NormEstimate op_norm(const LpMap& t, double p, const SolverConfig& config = {},
                            std::span<const Element> seeds = {}) {
  detail::require_map_exponent(p, "op_norm");
  if (p == 2.0) return detail::op_norm_p2(t);
  std::vector<Element> starts;
  for (const Element& s : seeds) {
    if (!(s.algebra() == t.dom())) throw structural_error("op_norm: seed outside the domain");
    starts.push_back(s);
  }
  starts.push_back(Element::identity(t.dom()));
  for (int r = 0; r < config.restarts; ++r) {
    Rng rng(split_seed(config.seed, 1000 + static_cast<std::uint64_t>(r)));
    starts.push_back(random_element(t.dom(), rng));
  }
  std::vector<NormEstimate> found(starts.size());
  const int iters = std::min(config.iters, 500);
  parallel_for(static_cast<int>(starts.size()), [&](int i) {
    found[std::size_t(i)] = detail::power_iterate(t, p, starts[std::size_t(i)], iters);
  });
  NormEstimate best{0.0, Element::identity(t.dom()), false};
  best.witness *= cplx(1.0 / lp_norm(best.witness, p));
  for (const NormEstimate& f : found)
    if (f.value > best.value) best = f;
  return best;
}

// g placed in the top-left corner of an m x m grid.
inline GridElement embed_grid(const GridElement& g, int m) {
  if (m < g.n()) throw structural_error("embed_grid: target grid is smaller");
  GridElement out = GridElement::zero(g.algebra(), m);
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) out(i, j) = g(i, j);
  return out;
}

struct AmplifiedEstimate {
  double value = 0.0;  // lower bound on ||I_{S^p_m} (x) T||
  GridElement witness;
  std::vector<double> chain;  // values for m' = 1..m, nondecreasing
};

// Lower bound on ||I_{S^p_m} (x) T||. Each size m' is seeded with the
// previous witness embedded in the corner, E_11 (x) x for the op_norm
// witness x, and the matrix-unit grids [E_ij], [E_ji] of every block large
// enough to hold them.
inline AmplifiedEstimate amplified_norm(const LpMap& t, double p, int m, const SolverConfig& config = {}) {
  detail::require_map_exponent(p, "amplified_norm");
  if (m < 1) throw structural_error("amplified_norm: m must be >= 1");
  const Algebra& dom = t.dom();
  const NormEstimate base = op_norm(t, p, config);
  AmplifiedEstimate out;
  out.witness = GridElement::zero(dom, 1);
  out.witness(0, 0) = base.witness;
  out.value = base.value;
  out.chain.push_back(base.value);
  for (int mm = 2; mm <= m; ++mm) {
    const LpMap big = amplify_sp(t, mm);
    std::vector<Element> seeds{to_tensor_element(embed_grid(out.witness, mm))};
    for (std::size_t k = 0; k < dom.num_blocks(); ++k) {
      if (dom.dim(k) < mm) continue;
      seeds.push_back(to_tensor_element(matrix_unit_grid(dom, mm, false, k)));
      seeds.push_back(to_tensor_element(matrix_unit_grid(dom, mm, true, k)));
    }
    const NormEstimate e = op_norm(big, p, config, seeds);
    if (e.value >= out.value) {
      out.value = e.value;
      out.witness = from_tensor_element(e.witness, dom, mm);
    } else {
      out.witness = embed_grid(out.witness, mm);
    }
    out.chain.push_back(out.value);
  }
  return out;
}

struct S1MapEstimate {
  double value = 0.0;  // lower bound on ||T (x) I_{S^1_n}||
  GridElement witness;
};

// Certified ratio for one grid: a lower bound for the image over an upper
// bound for the grid.
inline double s1_ratio(const LpMap& t, const GridElement& x, double p, const SolverConfig& config = {}) {
  const double den = s1_norm(x, p, config).upper;
  if (den == 0.0) return 0.0;
  const GridElement tx = x.map(t.cod(), [&](const Element& e) { return t.apply(e); });
  return s1_norm(tx, p, config).lower / den;
}

// Lower bound on the S^1_n-valued norm of T. Trial grids: the diagonal
// witness x (x) E_11, matrix-unit grids and Gaussian grids; the best one is
// then improved by random perturbation with a shrinking step.
inline S1MapEstimate s1_map_norm(const LpMap& t, double p, int n, const SolverConfig& config = {}) {
  detail::require_map_exponent(p, "s1_map_norm");
  if (n < 1) throw structural_error("s1_map_norm: n must be >= 1");
  const Algebra& dom = t.dom();
  std::vector<GridElement> trials;
  GridElement diag = GridElement::zero(dom, n);
  diag(0, 0) = op_norm(t, p, config).witness;
  trials.push_back(diag);
  for (std::size_t k = 0; k < dom.num_blocks(); ++k) {
    if (n < 2 || dom.dim(k) < n) continue;
    trials.push_back(matrix_unit_grid(dom, n, false, k));
    trials.push_back(matrix_unit_grid(dom, n, true, k));
  }
  Rng rng(split_seed(config.seed, 2000));
  for (int r = 0; r < std::min(config.restarts, 4); ++r) trials.push_back(random_grid(dom, n, rng));

  S1MapEstimate best{-1.0, trials.front()};
  for (const GridElement& x : trials) {
    const double v = s1_ratio(t, x, p, config);
    if (v > best.value) best = {v, x};
  }
  double size = 0.0;
  for (const Element& e : best.witness.entries()) size = std::max(size, e.frobenius());
  double step = 0.3 * std::max(size, 1e-12);
  for (int s = 0; s < config.ascent_steps; ++s) {
    GridElement cand = random_grid(dom, n, rng);
    double cs = 0.0;
    for (const Element& e : cand.entries()) cs = std::max(cs, e.frobenius());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cand(i, j) = best.witness(i, j) + (step / cs) * cand(i, j);
    const double v = s1_ratio(t, cand, p, config);
    if (v > best.value) {
      best = {v, std::move(cand)};
    } else {
      step *= 0.7;
    }
  }
  best.value = std::max(best.value, 0.0);
  return best;
}

struct CpCertificate {
  bool completely_positive = false;
  double min_eigenvalue = 0.0;  // smallest Choi eigenvalue over all block pairs
  std::vector<Mat> choi;        // per (dom block k, cod block l), k-major
};

// Choi matrix sum_ij E_ij (x) T(E_ij) for every pair of blocks.
inline CpCertificate is_completely_positive(const LpMap& t, double tol = kIdentityTol) {
  const Algebra& dom = t.dom();
  const Algebra& cod = t.cod();
  CpCertificate c;
  c.min_eigenvalue = kInf;
  bool ok = true;
  for (std::size_t k = 0; k < dom.num_blocks(); ++k) {
    const int d = dom.dim(k);
    std::vector<Element> images;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) images.push_back(t.apply(Element::unit(dom, k, i, j)));
    for (std::size_t l = 0; l < cod.num_blocks(); ++l) {
      const int e = cod.dim(l);
      Mat ch = Mat::Zero(d * e, d * e);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) ch.block(i * e, j * e, e, e) = images[std::size_t(i * d + j)].block(l);
      const double herm = (ch - ch.adjoint()).norm();
      Eigen::SelfAdjointEigenSolver<Mat> es(Mat(0.5 * (ch + ch.adjoint())), Eigen::EigenvaluesOnly);
      const double lo = es.eigenvalues().minCoeff();
      const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
      c.min_eigenvalue = std::min(c.min_eigenvalue, lo);
      ok = ok && herm <= tol * scale && lo >= -tol * scale;
      c.choi.push_back(std::move(ch));
    }
  }
  c.completely_positive = ok;
  return c;
}

// The positive-completion transport of a factorization of X into one of
// (T (x) I) X: with c = [a; b*] and z = c c* >= 0, the square root
// [[alpha, beta], [beta*, delta]] of T_{2n}(z) gives a' = [alpha beta] and
// b' = [beta; delta]. For CP T its value is at most ||T|| value(f).
inline Factorization transport_factorization(const LpMap& t, const Factorization& f) {
  const int n = f.n, m = f.m;
  const Algebra& a = f.a.front().algebra();
  GridElement c = GridElement::zero(a, std::max(2 * n, m));
  const int size = c.n();
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < n; ++i) c(i, k) = f.a_at(i, k);
    for (int j = 0; j < n; ++j) c(n + j, k) = f.b_at(k, j).adjoint();
  }
  const Element cz = to_tensor_element(c);
  const Element z = cz * cz.adjoint();
  const LpMap big = amplify_sp(t, size);
  Element tz = big.apply(z);
  tz = 0.5 * (tz + tz.adjoint());
  std::vector<Mat> clipped;
  for (const auto& blk : detail::eigen_blocks(tz)) {
    const RealVec ev = blk.values.cwiseMax(0.0);
    clipped.push_back(blk.vectors * ev.cwiseSqrt().cast<cplx>().asDiagonal() * blk.vectors.adjoint());
  }
  const GridElement s = from_tensor_element(Element(tz.algebra(), std::move(clipped)), t.cod(), size);
  Factorization out{n, 2 * n, {}, {}};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < 2 * n; ++k) out.a.push_back(s(i, k));
  for (int k = 0; k < 2 * n; ++k)
    for (int j = 0; j < n; ++j) out.b.push_back(s(k, n + j));
  return out;
}

struct CpS1Row {
  int n = 0;
  double s1_lower = 0.0;
  double transport_ratio = 0.0;  // value(f') / value(f) on the witness grid
  double transport_residual = 0.0;
  bool pass = false;
};

struct CpS1Report {
  double op_norm = 0.0;
  std::vector<CpS1Row> rows;
  bool pass = false;
};

// For CP T: the S^1_n lower bound never exceeds ||T|| (1 + tol) for
// n <= n_max, it meets ||T|| at n = 1, and the transported factorization of
// the witness grid reproduces (T (x) I) X with ratio at most ||T|| (1 + tol).
inline CpS1Report cp_s1_equality_test(const LpMap& t, double p, int n_max, const SolverConfig& config = {},
                                      double tol = 1e-2) {
  detail::require_map_exponent(p, "cp_s1_equality_test");
  if (!is_completely_positive(t, 1e-8).completely_positive)
    throw precondition_error("cp_s1_equality_test: map is not completely positive");
  CpS1Report rep;
  rep.op_norm = op_norm(t, p, config).value;
  rep.pass = true;
  for (int n = 1; n <= n_max; ++n) {
    CpS1Row row;
    row.n = n;
    const S1MapEstimate est = s1_map_norm(t, p, n, config);
    row.s1_lower = est.value;
    const Factorization f = s1_norm(est.witness, p, config).factorization;
    const Factorization g = transport_factorization(t, f);
    const GridElement tx = est.witness.map(t.cod(), [&](const Element& e) { return t.apply(e); });
    row.transport_residual = g.residual(tx);
    const double fv = f.value(p);
    row.transport_ratio = fv > 0.0 ? g.value(p) / fv : 0.0;
    row.pass = row.s1_lower <= rep.op_norm * (1.0 + tol) && row.transport_residual <= 1e-7 &&
               row.transport_ratio <= rep.op_norm * (1.0 + tol);
    if (n == 1) row.pass = row.pass && std::abs(row.s1_lower - rep.op_norm) <= tol * rep.op_norm;
    rep.pass = rep.pass && row.pass;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace nclp

#endif  // NCLP_MAPS_HPP_
