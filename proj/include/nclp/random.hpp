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

// Random instances: Gaussian elements, unitaries, projections, CP maps.

#ifndef NCLP_RANDOM_HPP_
#define NCLP_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "nclp/algebra.hpp"
#include "nclp/grid.hpp"
#include "nclp/lp_map.hpp"

namespace nclp {

using Rng = std::mt19937_64;

// splitmix64 step; gives independent streams per restart index.
inline std::uint64_t split_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline Mat gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = cplx(g(rng), g(rng)) / std::sqrt(2.0);
  return m;
}

inline Element random_element(const Algebra& a, Rng& rng) {
  std::vector<Mat> blocks;
  for (const Block& b : a.blocks()) blocks.push_back(gaussian_matrix(b.dim, b.dim, rng));
  return Element(a, std::move(blocks));
}

inline Element random_self_adjoint(const Algebra& a, Rng& rng) {
  const Element x = random_element(a, rng);
  return 0.5 * (x + x.adjoint());
}

// G G* for Gaussian G; full rank almost surely.
inline Element random_positive(const Algebra& a, Rng& rng) {
  const Element g = random_element(a, rng);
  return g * g.adjoint();
}

inline Mat random_unitary_matrix(Eigen::Index n, Rng& rng) {
  Eigen::HouseholderQR<Mat> qr(gaussian_matrix(n, n, rng));
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR();
  for (Eigen::Index i = 0; i < n; ++i) {
    const cplx d = r(i, i);
    if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

inline Element random_unitary(const Algebra& a, Rng& rng) {
  std::vector<Mat> blocks;
  for (const Block& b : a.blocks()) blocks.push_back(random_unitary_matrix(b.dim, rng));
  return Element(a, std::move(blocks));
}

inline GridElement random_grid(const Algebra& a, int n, Rng& rng) {
  std::vector<Element> entries;
  for (int i = 0; i < n * n; ++i) entries.push_back(random_element(a, rng));
  return GridElement(a, n, std::move(entries));
}

// A grid whose tensor element is G G*, hence positive.
inline GridElement random_positive_grid(const Algebra& a, int n, Rng& rng) {
  const Element g = random_element(amplify(a, n), rng);
  return from_tensor_element(g * g.adjoint(), a, n);
}

// CP map dom -> cod whose Choi matrices are random Wishart matrices.
inline LpMap random_cp_map(const Algebra& dom, const Algebra& cod, Rng& rng) {
  // Choi block (k,l): C = sum_ij E_ij (x) T(E_ij)_l, so T(E_ij)_l = C[i, j].
  std::vector<std::vector<Mat>> choi(dom.num_blocks());
  for (std::size_t k = 0; k < dom.num_blocks(); ++k)
    for (std::size_t l = 0; l < cod.num_blocks(); ++l) {
      const Mat g = gaussian_matrix(dom.dim(k) * cod.dim(l), dom.dim(k) * cod.dim(l), rng);
      choi[k].push_back(g * g.adjoint() / double(dom.dim(k) * cod.dim(l)));
    }
  Mat m = Mat::Zero(cod.coord_dim(), dom.coord_dim());
  Eigen::Index col = 0;
  for (std::size_t k = 0; k < dom.num_blocks(); ++k)
    for (int i = 0; i < dom.dim(k); ++i)
      for (int j = 0; j < dom.dim(k); ++j, ++col) {
        Element y = Element::zero(cod);
        for (std::size_t l = 0; l < cod.num_blocks(); ++l) {
          const int d = cod.dim(l);
          y.block(l) = choi[k][l].block(i * d, j * d, d, d);
        }
        m.col(col) = y.coords();
      }
  return LpMap(dom, cod, std::move(m));
}

}  // namespace nclp

#endif  // NCLP_RANDOM_HPP_
