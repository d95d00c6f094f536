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

// Weighted Schatten norms ||x||_p = tau(|x|^p)^{1/p}.

#ifndef NCLP_SCHATTEN_HPP_
#define NCLP_SCHATTEN_HPP_

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "nclp/algebra.hpp"

namespace nclp {

inline void require_exponent(double p) {
  if (!(p >= 1.0)) throw domain_error("Schatten exponent must satisfy p >= 1, got " + std::to_string(p));
}

// Conjugate exponent, 1 <-> inf.
inline double conjugate_exponent(double p) {
  require_exponent(p);
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

// Singular values of each block, descending.
inline std::vector<RealVec> singular_values(const Element& x) {
  std::vector<RealVec> out;
  out.reserve(x.num_blocks());
  for (const Mat& b : x.blocks()) out.push_back(Eigen::JacobiSVD<Mat>(b).singularValues());
  return out;
}

namespace detail {

// (sum_k w_k sum_i s_{k,i}^p)^{1/p}, evaluated relative to the largest entry.
inline double weighted_lp(const std::vector<RealVec>& values, const Algebra& a, double p) {
  double smax = 0.0;
  for (const RealVec& s : values)
    if (s.size() > 0) smax = std::max(smax, s.cwiseAbs().maxCoeff());
  if (smax == 0.0) return 0.0;
  if (std::isinf(p)) return smax;
  double acc = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    double blk = 0.0;
    for (Eigen::Index i = 0; i < values[k].size(); ++i) blk += std::pow(std::abs(values[k](i)) / smax, p);
    acc += a.weight(k) * blk;
  }
  return smax * std::pow(acc, 1.0 / p);
}

}  // namespace detail

// ||x||_p; p = kInf gives the operator norm (weights play no role there).
inline double lp_norm(const Element& x, double p) {
  require_exponent(p);
  return detail::weighted_lp(singular_values(x), x.algebra(), p);
}

// The element y with ||y||_{p'} = 1 and tau(x y) = ||x||_p: built from the
// SVD x = U S V* as ||x||_p^{1-p} V S^{p-1} U*. For p = 1 this is the adjoint
// of the polar isometry; for p = inf it is a normalized rank-one v u*/w_k
// sitting on a top singular pair. Returns 0 for x = 0.
inline Element norming_functional(const Element& x, double p) {
  require_exponent(p);
  const Algebra& a = x.algebra();
  Element y = Element::zero(a);
  const double nx = lp_norm(x, p);
  if (nx == 0.0) return y;
  std::vector<Eigen::JacobiSVD<Mat>> svds;
  for (const Mat& b : x.blocks()) svds.emplace_back(b, Eigen::ComputeFullU | Eigen::ComputeFullV);

  if (std::isinf(p)) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < svds.size(); ++k)
      if (svds[k].singularValues()(0) > svds[best].singularValues()(0)) best = k;
    y.block(best) = svds[best].matrixV().col(0) * svds[best].matrixU().col(0).adjoint() / a.weight(best);
    return y;
  }
  const double cut = kRankTol * nx;
  for (std::size_t k = 0; k < svds.size(); ++k) {
    const auto& s = svds[k];
    Eigen::VectorXcd d = Eigen::VectorXcd::Zero(s.singularValues().size());
    for (Eigen::Index i = 0; i < d.size(); ++i) {
      const double sv = s.singularValues()(i);
      if (sv > cut) d(i) = (p == 1.0) ? 1.0 : std::pow(sv / nx, p - 1.0);
    }
    y.block(k) = s.matrixV() * d.asDiagonal() * s.matrixU().adjoint();
  }
  return y;
}

// Hoelder: ||xy||_r <= ||x||_p ||y||_q with 1/r = 1/p + 1/q. Only r >= 1 is
// accepted. Returns whether the inequality holds up to tol * rhs.
inline bool holder_check(const Element& x, const Element& y, double p, double q, double tol = kIdentityTol) {
  x.check_same(y);
  require_exponent(p);
  require_exponent(q);
  const double inv_r = (std::isinf(p) ? 0.0 : 1.0 / p) + (std::isinf(q) ? 0.0 : 1.0 / q);
  if (inv_r > 1.0 + 1e-15) throw domain_error("holder_check: 1/p + 1/q must be <= 1");
  const double r = inv_r == 0.0 ? kInf : 1.0 / inv_r;
  const double lhs = lp_norm(x * y, std::max(1.0, r));
  const double rhs = lp_norm(x, p) * lp_norm(y, q);
  return lhs <= rhs + tol * std::max(1.0, rhs);
}

// (||x (x) y||_p, ||x||_p ||y||_p) over the tensor-product algebra.
inline std::pair<double, double> tensor_norm_identity(const Element& x, const Element& y, double p) {
  return {lp_norm(tensor(x, y), p), lp_norm(x, p) * lp_norm(y, p)};
}

// (||x1||^p + ||x2||^p)^{1/p}: the norm of (x1, x2) in the p-direct sum.
inline double direct_sum_norm(const Element& x1, const Element& x2, double p) {
  require_exponent(p);
  const double a = lp_norm(x1, p), b = lp_norm(x2, p);
  if (std::isinf(p)) return std::max(a, b);
  const double m = std::max(a, b);
  if (m == 0.0) return 0.0;
  return m * std::pow(std::pow(a / m, p) + std::pow(b / m, p), 1.0 / p);
}

}  // namespace nclp

#endif  // NCLP_SCHATTEN_HPP_
