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

// Complex-linear maps between finite-dimensional Lp spaces, stored as
// matrices on the row-major block coordinates of Element::coords().

#ifndef NCLP_LP_MAP_HPP_
#define NCLP_LP_MAP_HPP_

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "nclp/algebra.hpp"
#include "nclp/grid.hpp"

namespace nclp {

enum class Provenance {
  kNone,
  kIdentity,
  kTranspose,
  kConjugation,
  kTensorEmbed,
  kDirectSum,
  kComposition,
  kScalarMultiple,
  kAmplification,
  kStack,
  kProjection,
  kMultiplication,
  kSum,
};

inline constexpr std::array<std::pair<Provenance, std::string_view>, 13> kProvenanceNames{{
    {Provenance::kNone, "none"},
    {Provenance::kIdentity, "identity"},
    {Provenance::kTranspose, "transpose"},
    {Provenance::kConjugation, "conjugation"},
    {Provenance::kTensorEmbed, "tensor-embed"},
    {Provenance::kDirectSum, "direct-sum"},
    {Provenance::kComposition, "composition"},
    {Provenance::kScalarMultiple, "scalar-multiple"},
    {Provenance::kAmplification, "amplification"},
    {Provenance::kStack, "stack"},
    {Provenance::kProjection, "projection"},
    {Provenance::kMultiplication, "multiplication"},
    {Provenance::kSum, "sum"},
}};

inline std::string_view to_string(Provenance p) {
  for (const auto& [k, v] : kProvenanceNames)
    if (k == p) return v;
  return "none";
}

inline Provenance provenance_from_string(std::string_view s) {
  for (const auto& [k, v] : kProvenanceNames)
    if (v == s) return k;
  throw structural_error("unknown provenance '" + std::string(s) + "'");
}

class LpMap {
 public:
  LpMap() = default;

  LpMap(Algebra dom, Algebra cod, Mat matrix, Provenance provenance = Provenance::kNone)
      : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(matrix)), provenance_(provenance) {
    if (matrix_.rows() != cod_.coord_dim() || matrix_.cols() != dom_.coord_dim())
      throw structural_error("map matrix is " + std::to_string(matrix_.rows()) + "x" +
                             std::to_string(matrix_.cols()) + ", expected " +
                             std::to_string(cod_.coord_dim()) + "x" + std::to_string(dom_.coord_dim()));
  }

  // Tabulates f on the matrix-unit basis of dom.
  template <typename F>
  static LpMap from_function(const Algebra& dom, const Algebra& cod, F f, Provenance provenance = Provenance::kNone) {
    Mat m(cod.coord_dim(), dom.coord_dim());
    Eigen::Index col = 0;
    for (const Element& e : basis(dom)) {
      const Element y = f(e);
      if (!(y.algebra() == cod)) throw structural_error("from_function: image outside the codomain");
      m.col(col++) = y.coords();
    }
    return LpMap(dom, cod, std::move(m), provenance);
  }

  const Algebra& dom() const { return dom_; }
  const Algebra& cod() const { return cod_; }
  const Mat& matrix() const { return matrix_; }
  Provenance provenance() const { return provenance_; }
  LpMap with_provenance(Provenance p) const { return LpMap(dom_, cod_, matrix_, p); }

  Element apply(const Element& x) const {
    if (!(x.algebra() == dom_)) throw structural_error("apply: argument outside the domain");
    return Element::from_coords(cod_, matrix_ * x.coords());
  }
  Element operator()(const Element& x) const { return apply(x); }

  // The adjoint for the trace pairings <x, y> = tau(x* y) on both sides:
  // tau_N(g* T x) = tau_M((T^dagger g)* x).
  Element dual_apply(const Element& g) const {
    if (!(g.algebra() == cod_)) throw structural_error("dual_apply: argument outside the codomain");
    Vec v = g.coords();
    scale_coords(cod_, v, false);
    Vec u = matrix_.adjoint() * v;
    scale_coords(dom_, u, true);
    return Element::from_coords(dom_, u);
  }

  bool is_zero(double tol = kIdentityTol) const { return matrix_.norm() <= tol; }

 private:
  static void scale_coords(const Algebra& a, Vec& v, bool inverse) {
    for (std::size_t k = 0; k < a.num_blocks(); ++k) {
      const double w = inverse ? 1.0 / a.weight(k) : a.weight(k);
      v.segment(a.coord_offset(k), Eigen::Index(a.dim(k)) * a.dim(k)) *= w;
    }
  }

  Algebra dom_;
  Algebra cod_;
  Mat matrix_;
  Provenance provenance_ = Provenance::kNone;
};

inline LpMap identity_map(const Algebra& a) {
  return LpMap(a, a, Mat::Identity(a.coord_dim(), a.coord_dim()), Provenance::kIdentity);
}

// Blockwise transposition on any algebra.
inline LpMap transpose_map(const Algebra& a) {
  return LpMap::from_function(
      a, a,
      [](const Element& x) {
        std::vector<Mat> out;
        for (const Mat& b : x.blocks()) out.push_back(b.transpose());
        return Element(x.algebra(), std::move(out));
      },
      Provenance::kTranspose);
}

// t: S^p_n -> S^p_n.
inline LpMap transpose_map(int n) { return transpose_map(Algebra::matrices(n)); }

// x -> a x b.
inline LpMap conjugation_map(const Element& a, const Element& b) {
  a.check_same(b);
  return LpMap::from_function(
      a.algebra(), a.algebra(), [&](const Element& x) { return a * x * b; }, Provenance::kConjugation);
}

// x -> x (x) b, from M into M (x) N.
inline LpMap embed_tensor(const Algebra& m, const Element& b) {
  return LpMap::from_function(
      m, tensor(m, b.algebra()), [&](const Element& x) { return tensor(x, b); }, Provenance::kTensorEmbed);
}

// (x1, x2) -> (T1 x1, T2 x2).
inline LpMap direct_sum_map(const LpMap& t1, const LpMap& t2) {
  Mat m = Mat::Zero(t1.matrix().rows() + t2.matrix().rows(), t1.matrix().cols() + t2.matrix().cols());
  m.topLeftCorner(t1.matrix().rows(), t1.matrix().cols()) = t1.matrix();
  m.bottomRightCorner(t2.matrix().rows(), t2.matrix().cols()) = t2.matrix();
  return LpMap(direct_sum(t1.dom(), t2.dom()), direct_sum(t1.cod(), t2.cod()), std::move(m), Provenance::kDirectSum);
}

// x -> (T1 x, T2 x).
inline LpMap stack_maps(const LpMap& t1, const LpMap& t2) {
  if (!(t1.dom() == t2.dom())) throw structural_error("stack_maps: domains differ");
  Mat m(t1.matrix().rows() + t2.matrix().rows(), t1.matrix().cols());
  m << t1.matrix(), t2.matrix();
  return LpMap(t1.dom(), direct_sum(t1.cod(), t2.cod()), std::move(m), Provenance::kStack);
}

// S o T.
inline LpMap compose(const LpMap& s, const LpMap& t) {
  if (!(t.cod() == s.dom())) throw structural_error("compose: codomain of the inner map is not the outer domain");
  return LpMap(t.dom(), s.cod(), s.matrix() * t.matrix(), Provenance::kComposition);
}

inline LpMap scale(cplx c, const LpMap& t) {
  return LpMap(t.dom(), t.cod(), c * t.matrix(), Provenance::kScalarMultiple);
}

inline LpMap operator+(const LpMap& s, const LpMap& t) {
  if (!(s.dom() == t.dom()) || !(s.cod() == t.cod())) throw structural_error("map sum: algebras differ");
  return LpMap(s.dom(), s.cod(), s.matrix() + t.matrix(), Provenance::kSum);
}

// Restriction of a direct sum to the blocks [first, first + count).
inline LpMap summand_projection(const Algebra& a, std::size_t first, std::size_t count) {
  if (first + count > a.num_blocks() || count == 0) throw structural_error("summand_projection: bad block range");
  std::vector<Block> blocks(a.blocks().begin() + std::ptrdiff_t(first),
                            a.blocks().begin() + std::ptrdiff_t(first + count));
  const Algebra target(std::move(blocks));
  return LpMap::from_function(
      a, target,
      [&](const Element& x) {
        std::vector<Mat> out(x.blocks().begin() + std::ptrdiff_t(first),
                             x.blocks().begin() + std::ptrdiff_t(first + count));
        return Element(target, std::move(out));
      },
      Provenance::kProjection);
}

// y -> y e (right multiplication inside one algebra).
inline LpMap right_multiplication(const Element& e) {
  return LpMap::from_function(
      e.algebra(), e.algebra(), [&](const Element& y) { return y * e; }, Provenance::kMultiplication);
}

// I_{S^p_m} (x) T acting on M_m (x) dom entrywise.
inline LpMap amplify_sp(const LpMap& t, int m) {
  if (m < 1) throw structural_error("amplify_sp: m must be >= 1");
  const Algebra dom = amplify(t.dom(), m);
  const Algebra cod = amplify(t.cod(), m);
  return LpMap::from_function(
      dom, cod,
      [&](const Element& x) {
        const GridElement g = from_tensor_element(x, t.dom(), m);
        return to_tensor_element(g.map(t.cod(), [&](const Element& e) { return t.apply(e); }));
      },
      Provenance::kAmplification);
}

}  // namespace nclp

#endif  // NCLP_LP_MAP_HPP_
