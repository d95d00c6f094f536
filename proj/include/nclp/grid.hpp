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

#ifndef NCLP_GRID_HPP_
#define NCLP_GRID_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "nclp/algebra.hpp"

namespace nclp {

// An n x n matrix [x_ij] of elements of one algebra M. Identified with
// sum_ij E_ij (x) x_ij in M_n (x) M; the grid index is the outer index of
// every block of the tensor element.
class GridElement {
 public:
  GridElement() = default;

  GridElement(Algebra algebra, int n, std::vector<Element> entries)
      : algebra_(std::move(algebra)), n_(n), entries_(std::move(entries)) {
    if (n_ < 1) throw structural_error("grid size must be >= 1");
    if (entries_.size() != std::size_t(n_) * std::size_t(n_))
      throw structural_error("grid needs n*n entries");
    for (const Element& e : entries_)
      if (!(e.algebra() == algebra_)) throw structural_error("grid entries must share the algebra");
  }

  static GridElement zero(const Algebra& a, int n) {
    return GridElement(a, n, std::vector<Element>(std::size_t(n) * std::size_t(n), Element::zero(a)));
  }

  // x_ij = c_ij * x for a scalar matrix c.
  static GridElement scalar_tensor(const Mat& c, const Element& x) {
    const int n = static_cast<int>(c.rows());
    GridElement g = zero(x.algebra(), n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = c(i, j) * x;
    return g;
  }

  const Algebra& algebra() const { return algebra_; }
  int n() const { return n_; }
  const Element& operator()(int i, int j) const { return entries_[std::size_t(i) * std::size_t(n_) + std::size_t(j)]; }
  Element& operator()(int i, int j) { return entries_[std::size_t(i) * std::size_t(n_) + std::size_t(j)]; }
  const std::vector<Element>& entries() const { return entries_; }

  GridElement& operator*=(cplx c) {
    for (Element& e : entries_) e *= c;
    return *this;
  }
  friend GridElement operator*(cplx c, GridElement g) { return g *= c; }

  // Entrywise map.
  template <typename F>
  GridElement map(const Algebra& target, F f) const {
    std::vector<Element> out;
    out.reserve(entries_.size());
    for (const Element& e : entries_) out.push_back(f(e));
    return GridElement(target, n_, std::move(out));
  }

 private:
  Algebra algebra_;
  int n_ = 0;
  std::vector<Element> entries_;
};

// sum_ij E_ij (x) x_ij as an element of M_n (x) M.
inline Element to_tensor_element(const GridElement& g) {
  const Algebra& a = g.algebra();
  const int n = g.n();
  std::vector<Mat> out;
  for (std::size_t k = 0; k < a.num_blocks(); ++k) {
    const int d = a.dim(k);
    Mat big = Mat::Zero(n * d, n * d);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) big.block(i * d, j * d, d, d) = g(i, j).block(k);
    out.push_back(std::move(big));
  }
  return Element(amplify(a, n), std::move(out));
}

// Inverse of to_tensor_element, given the base algebra.
inline GridElement from_tensor_element(const Element& x, const Algebra& base, int n) {
  if (!(x.algebra() == amplify(base, n))) throw structural_error("from_tensor_element: algebra is not M_n (x) base");
  GridElement g = GridElement::zero(base, n);
  for (std::size_t k = 0; k < base.num_blocks(); ++k) {
    const int d = base.dim(k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j).block(k) = x.block(k).block(i * d, j * d, d, d);
  }
  return g;
}

// [E_ij] (or [E_ji] when transposed) with the matrix units placed in the
// top-left n x n corner of block k of M.
inline GridElement matrix_unit_grid(const Algebra& a, int n, bool transposed = false, std::size_t k = 0) {
  if (a.dim(k) < n) throw structural_error("matrix_unit_grid: block too small for the grid");
  GridElement g = GridElement::zero(a, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = transposed ? Element::unit(a, k, j, i) : Element::unit(a, k, i, j);
  return g;
}

}  // namespace nclp

#endif  // NCLP_GRID_HPP_
