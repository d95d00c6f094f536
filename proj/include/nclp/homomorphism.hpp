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

// *-homomorphisms out of M_n: matrix-unit standardization and the M_2
// corner embedding.

#ifndef NCLP_HOMOMORPHISM_HPP_
#define NCLP_HOMOMORPHISM_HPP_

#include <optional>

#include "nclp/algebra.hpp"
#include "nclp/lp_map.hpp"

namespace nclp {

// Largest relative defect of T(xy) = T(x)T(y) (or T(y)T(x) when anti) over
// all basis pairs.
inline double multiplicativity_defect(const LpMap& t, bool anti = false) {
  const auto b = basis(t.dom());
  std::vector<Element> images;
  images.reserve(b.size());
  for (const Element& e : b) images.push_back(t.apply(e));
  double scale = 1.0;
  for (const Element& y : images) scale = std::max(scale, y.frobenius());
  double worst = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Element lhs = t.apply(b[i] * b[j]);
      const Element rhs = anti ? images[j] * images[i] : images[i] * images[j];
      worst = std::max(worst, distance(lhs, rhs) / (scale * scale));
    }
  return worst;
}

inline double adjoint_defect(const LpMap& t) {
  double worst = 0.0;
  for (const Element& e : basis(t.dom()))
    worst = std::max(worst, distance(t.apply(e.adjoint()), t.apply(e).adjoint()));
  return worst / std::max(1.0, t.matrix().norm());
}

inline bool is_unital(const LpMap& t, double tol = kIdentityTol) {
  return approx_equal(t.apply(Element::identity(t.dom())), Element::identity(t.cod()), tol);
}

inline bool is_trace_preserving(const LpMap& t, double tol = kIdentityTol) {
  for (const Element& e : basis(t.dom()))
    if (std::abs(trace(t.apply(e)) - trace(e)) > tol * std::max(1.0, std::abs(trace(e)))) return false;
  return true;
}

struct StandardForm {
  Element e;    // theta(E_11), a projection in M
  Corner unit;  // eMe realized as a standalone algebra
  LpMap rho;    // M -> M_n (x) eMe, rho(theta(a)) = a (x) 1
};

// For a unital *-homomorphism theta: M_n -> M, the isomorphism
// rho(x) = sum_ij E_ij (x) theta(E_1i) x theta(E_j1), read in the corner
// algebra of e = theta(E_11). rho is a trace-preserving bijective
// *-homomorphism with (rho o theta)(a) = a (x) e.
inline StandardForm standardize_representation(const LpMap& theta, double tol = kIdentityTol) {
  if (theta.dom().num_blocks() != 1) throw structural_error("standardize_representation: domain must be M_n");
  const int n = theta.dom().dim(0);
  if (!is_unital(theta, tol)) throw precondition_error("standardize_representation: theta is not unital");
  if (multiplicativity_defect(theta) > tol || adjoint_defect(theta) > tol)
    throw precondition_error("standardize_representation: theta is not a *-homomorphism");

  const Algebra& m = theta.cod();
  auto unit = [&](int i, int j) { return theta.apply(Element::unit(theta.dom(), 0, i, j)); };
  StandardForm out;
  out.e = unit(0, 0);
  out.unit = corner(out.e);
  const Corner& c = out.unit;
  std::vector<Element> left, right;
  for (int i = 0; i < n; ++i) {
    left.push_back(unit(0, i));
    right.push_back(unit(i, 0));
  }
  const Algebra target = amplify(c.algebra, n);
  out.rho = LpMap::from_function(m, target, [&](const Element& x) {
    GridElement g = GridElement::zero(c.algebra, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = c.compress(left[std::size_t(i)] * x * right[std::size_t(j)]);
    return to_tensor_element(g);
  });
  if (out.rho.matrix().rows() != out.rho.matrix().cols() ||
      Eigen::FullPivLU<Mat>(out.rho.matrix()).rank() != out.rho.matrix().cols())
    throw internal_error("standardize_representation: rho is not bijective");
  if (!is_trace_preserving(out.rho, 1e-8) || multiplicativity_defect(out.rho) > 1e-8)
    throw internal_error("standardize_representation: rho failed the homomorphism checks");
  return out;
}

// A nonzero *-homomorphism M_2 -> M placing a in the top-left 2x2 corner
// of the first block of dimension >= 2; empty when M is abelian.
inline std::optional<LpMap> embed_m2(const Algebra& m) {
  for (std::size_t k = 0; k < m.num_blocks(); ++k) {
    if (m.dim(k) < 2) continue;
    return LpMap::from_function(Algebra::matrices(2), m, [&](const Element& a) {
      Element x = Element::zero(m);
      x.block(k).topLeftCorner(2, 2) = a.block(0);
      return x;
    });
  }
  return std::nullopt;
}

}  // namespace nclp

#endif  // NCLP_HOMOMORPHISM_HPP_
