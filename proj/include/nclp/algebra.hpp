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

// Finite-dimensional von Neumann algebras with a weighted trace.
//
// An Algebra is a direct sum of full matrix blocks M_{n_1} + ... + M_{n_r}
// carrying the trace tau(x) = sum_k w_k tr(x_k), w_k > 0. Elements are tuples
// of dense complex matrices, one per block. Every Lp space over such an
// algebra is the algebra itself with a weighted Schatten norm, so an Element
// doubles as an Lp vector.

#ifndef NCLP_ALGEBRA_HPP_
#define NCLP_ALGEBRA_HPP_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "nclp/errors.hpp"

namespace nclp {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;

// Relative tolerance for algebraic identities (x = wB, J(xy+yx) = ..., ...).
inline constexpr double kIdentityTol = 1e-9;
// An eigenvalue counts as nonzero iff it exceeds kRankTol * (largest one).
inline constexpr double kRankTol = 1e-10;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Block {
  int dim = 1;
  double weight = 1.0;

  friend bool operator==(const Block&, const Block&) = default;
};

class Algebra {
 public:
  Algebra() = default;

  explicit Algebra(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw structural_error("algebra needs at least one block");
    for (const Block& b : blocks_) {
      if (b.dim < 1) throw structural_error("block dimension must be >= 1");
      if (!(b.weight > 0.0) || !std::isfinite(b.weight))
        throw structural_error("block weight must be positive and finite");
    }
  }

  // M_n with trace weight * tr.
  static Algebra matrices(int n, double weight = 1.0) {
    return Algebra({Block{n, weight}});
  }

  // The commutative algebra C^k with unit weights.
  static Algebra diagonal(int k) {
    return Algebra(std::vector<Block>(static_cast<std::size_t>(k), Block{1, 1.0}));
  }

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  int dim(std::size_t k) const { return blocks_[k].dim; }
  double weight(std::size_t k) const { return blocks_[k].weight; }

  bool is_abelian() const {
    return std::all_of(blocks_.begin(), blocks_.end(),
                       [](const Block& b) { return b.dim == 1; });
  }

  // Dimension of the algebra as a complex vector space.
  Eigen::Index coord_dim() const {
    Eigen::Index d = 0;
    for (const Block& b : blocks_) d += Eigen::Index(b.dim) * b.dim;
    return d;
  }

  Eigen::Index coord_offset(std::size_t k) const {
    Eigen::Index d = 0;
    for (std::size_t i = 0; i < k; ++i) d += Eigen::Index(blocks_[i].dim) * blocks_[i].dim;
    return d;
  }

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  std::vector<Block> blocks_;
};

// Blocks (k, l) in k-major order, dims multiplied, weights multiplied.
inline Algebra tensor(const Algebra& a, const Algebra& b) {
  std::vector<Block> out;
  out.reserve(a.num_blocks() * b.num_blocks());
  for (const Block& x : a.blocks())
    for (const Block& y : b.blocks()) out.push_back({x.dim * y.dim, x.weight * y.weight});
  return Algebra(std::move(out));
}

inline Algebra direct_sum(const Algebra& a, const Algebra& b) {
  std::vector<Block> out = a.blocks();
  out.insert(out.end(), b.blocks().begin(), b.blocks().end());
  return Algebra(std::move(out));
}

// M_m (unweighted) tensor a: the carrier of L^p(M_m (x) M).
inline Algebra amplify(const Algebra& a, int m) { return tensor(Algebra::matrices(m), a); }

class Element {
 public:
  Element() = default;

  Element(Algebra algebra, std::vector<Mat> blocks)
      : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
    if (blocks_.size() != algebra_.num_blocks())
      throw structural_error("element has " + std::to_string(blocks_.size()) +
                             " blocks, algebra has " + std::to_string(algebra_.num_blocks()));
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      const int n = algebra_.dim(k);
      if (blocks_[k].rows() != n || blocks_[k].cols() != n)
        throw structural_error("block " + std::to_string(k) + " has shape " +
                               std::to_string(blocks_[k].rows()) + "x" +
                               std::to_string(blocks_[k].cols()) + ", expected " +
                               std::to_string(n) + "x" + std::to_string(n));
    }
  }

  static Element zero(const Algebra& a) {
    std::vector<Mat> blocks;
    for (const Block& b : a.blocks()) blocks.push_back(Mat::Zero(b.dim, b.dim));
    return Element(a, std::move(blocks));
  }

  static Element identity(const Algebra& a) {
    std::vector<Mat> blocks;
    for (const Block& b : a.blocks()) blocks.push_back(Mat::Identity(b.dim, b.dim));
    return Element(a, std::move(blocks));
  }

  // Matrix unit E_{ij} inside block k.
  static Element unit(const Algebra& a, std::size_t k, int i, int j) {
    Element e = zero(a);
    e.blocks_.at(k)(i, j) = 1.0;
    return e;
  }

  // Single-block convenience: the element m of M_n with weight w.
  static Element from_matrix(const Mat& m, double weight = 1.0) {
    if (m.rows() != m.cols()) throw structural_error("from_matrix needs a square matrix");
    return Element(Algebra::matrices(static_cast<int>(m.rows()), weight), {m});
  }

  // Inverse of coords(): row-major vectorization of each block, concatenated.
  static Element from_coords(const Algebra& a, const Vec& v) {
    if (v.size() != a.coord_dim()) throw structural_error("coordinate vector has wrong length");
    Element e = zero(a);
    Eigen::Index off = 0;
    for (std::size_t k = 0; k < a.num_blocks(); ++k) {
      const int n = a.dim(k);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e.blocks_[k](i, j) = v(off++);
    }
    return e;
  }

  Vec coords() const {
    Vec v(algebra_.coord_dim());
    Eigen::Index off = 0;
    for (const Mat& b : blocks_)
      for (Eigen::Index i = 0; i < b.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j) v(off++) = b(i, j);
    return v;
  }

  const Algebra& algebra() const { return algebra_; }
  std::size_t num_blocks() const { return blocks_.size(); }
  const Mat& block(std::size_t k) const { return blocks_[k]; }
  Mat& block(std::size_t k) { return blocks_[k]; }
  const std::vector<Mat>& blocks() const { return blocks_; }

  Element adjoint() const {
    std::vector<Mat> out;
    out.reserve(blocks_.size());
    for (const Mat& b : blocks_) out.push_back(b.adjoint());
    return Element(algebra_, std::move(out));
  }

  // Unweighted Frobenius norm; used only to scale tolerances.
  double frobenius() const {
    double s = 0.0;
    for (const Mat& b : blocks_) s += b.squaredNorm();
    return std::sqrt(s);
  }

  bool is_self_adjoint(double tol = kIdentityTol) const {
    const double scale = std::max(1.0, frobenius());
    double d = 0.0;
    for (const Mat& b : blocks_) d += (b - b.adjoint()).squaredNorm();
    return std::sqrt(d) <= tol * scale;
  }

  Element& operator+=(const Element& o) {
    check_same(o);
    for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] += o.blocks_[k];
    return *this;
  }
  Element& operator-=(const Element& o) {
    check_same(o);
    for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] -= o.blocks_[k];
    return *this;
  }
  Element& operator*=(cplx c) {
    for (Mat& b : blocks_) b *= c;
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= -1.0; }
  friend Element operator*(cplx c, Element a) { return a *= c; }
  friend Element operator*(Element a, cplx c) { return a *= c; }
  friend Element operator*(double c, Element a) { return a *= cplx(c); }

  // Algebra product (blockwise matrix product).
  friend Element operator*(const Element& a, const Element& b) {
    a.check_same(b);
    std::vector<Mat> out;
    out.reserve(a.blocks_.size());
    for (std::size_t k = 0; k < a.blocks_.size(); ++k) out.push_back(a.blocks_[k] * b.blocks_[k]);
    return Element(a.algebra_, std::move(out));
  }

  void check_same(const Element& o) const {
    if (!(algebra_ == o.algebra_)) throw structural_error("elements live in different algebras");
  }

 private:
  Algebra algebra_;
  std::vector<Mat> blocks_;
};

// tau(x) = sum_k w_k tr(x_k).
inline cplx trace(const Element& x) {
  cplx t = 0.0;
  for (std::size_t k = 0; k < x.num_blocks(); ++k) t += x.algebra().weight(k) * x.block(k).trace();
  return t;
}

inline double distance(const Element& a, const Element& b) { return (a - b).frobenius(); }

// ||a - b|| <= tol * max(1, ||a||, ||b||).
inline bool approx_equal(const Element& a, const Element& b, double tol = kIdentityTol) {
  const double scale = std::max({1.0, a.frobenius(), b.frobenius()});
  return distance(a, b) <= tol * scale;
}

inline Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Element tensor(const Element& x, const Element& y) {
  std::vector<Mat> out;
  for (const Mat& a : x.blocks())
    for (const Mat& b : y.blocks()) out.push_back(kron(a, b));
  return Element(tensor(x.algebra(), y.algebra()), std::move(out));
}

inline Element direct_sum(const Element& x, const Element& y) {
  std::vector<Mat> out = x.blocks();
  out.insert(out.end(), y.blocks().begin(), y.blocks().end());
  return Element(direct_sum(x.algebra(), y.algebra()), std::move(out));
}

// Matrix-unit basis of the algebra, ordered as the coordinates.
inline std::vector<Element> basis(const Algebra& a) {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(a.coord_dim()));
  for (std::size_t k = 0; k < a.num_blocks(); ++k)
    for (int i = 0; i < a.dim(k); ++i)
      for (int j = 0; j < a.dim(k); ++j) out.push_back(Element::unit(a, k, i, j));
  return out;
}

namespace detail {

inline void require_self_adjoint(const Element& x, const char* what) {
  if (!x.is_self_adjoint()) throw domain_error(std::string(what) + ": input is not self-adjoint");
}

struct BlockEigen {
  RealVec values;
  Mat vectors;
};

inline std::vector<BlockEigen> eigen_blocks(const Element& x) {
  std::vector<BlockEigen> out;
  out.reserve(x.num_blocks());
  for (const Mat& b : x.blocks()) {
    const Mat h = 0.5 * (b + b.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    out.push_back({es.eigenvalues(), es.eigenvectors()});
  }
  return out;
}

inline double max_abs_eigenvalue(const std::vector<BlockEigen>& eig) {
  double m = 0.0;
  for (const auto& e : eig)
    if (e.values.size() > 0) m = std::max(m, e.values.cwiseAbs().maxCoeff());
  return m;
}

// Applies f to the eigenvalues of each (Hermitian) block.
template <typename F>
Element apply_spectral(const Element& x, const std::vector<BlockEigen>& eig, F f) {
  std::vector<Mat> out;
  out.reserve(eig.size());
  for (const auto& e : eig) {
    Eigen::VectorXcd d(e.values.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = f(e.values(i));
    out.push_back(e.vectors * d.asDiagonal() * e.vectors.adjoint());
  }
  return Element(x.algebra(), std::move(out));
}

}  // namespace detail

struct SpectralData {
  std::vector<double> eigenvalues;   // distinct, ascending
  std::vector<Element> projections;  // sum to the identity
};

// Spectral decomposition of a self-adjoint element. Eigenvalues within
// cluster_tol * max(1, |lambda|_max) of each other are merged.
inline SpectralData spectral_decomposition(const Element& x, double cluster_tol = 1e-8) {
  detail::require_self_adjoint(x, "spectral_decomposition");
  const auto eig = detail::eigen_blocks(x);
  struct Entry {
    double value;
    std::size_t block;
    Eigen::Index column;
  };
  std::vector<Entry> all;
  for (std::size_t k = 0; k < eig.size(); ++k)
    for (Eigen::Index i = 0; i < eig[k].values.size(); ++i) all.push_back({eig[k].values(i), k, i});
  std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) { return a.value < b.value; });

  const double gap = cluster_tol * std::max(1.0, detail::max_abs_eigenvalue(eig));
  SpectralData out;
  std::size_t start = 0;
  while (start < all.size()) {
    std::size_t stop = start + 1;
    while (stop < all.size() && all[stop].value - all[stop - 1].value <= gap) ++stop;
    Element p = Element::zero(x.algebra());
    double mean = 0.0;
    for (std::size_t i = start; i < stop; ++i) {
      const auto& v = eig[all[i].block].vectors.col(all[i].column);
      p.block(all[i].block) += v * v.adjoint();
      mean += all[i].value;
    }
    out.eigenvalues.push_back(mean / double(stop - start));
    out.projections.push_back(std::move(p));
    start = stop;
  }
  return out;
}

// min eigenvalue >= -tol * max(1, spectral radius).
inline bool is_positive(const Element& x, double tol = kIdentityTol) {
  if (!x.is_self_adjoint(tol)) return false;
  const auto eig = detail::eigen_blocks(x);
  const double scale = std::max(1.0, detail::max_abs_eigenvalue(eig));
  for (const auto& e : eig)
    if (e.values.size() > 0 && e.values.minCoeff() < -tol * scale) return false;
  return true;
}

// Orthogonal projection onto the range of a positive element.
inline Element support(const Element& x) {
  detail::require_self_adjoint(x, "support");
  if (!is_positive(x)) throw domain_error("support: input is not positive semidefinite");
  const auto eig = detail::eigen_blocks(x);
  const double cut = kRankTol * detail::max_abs_eigenvalue(eig);
  return detail::apply_spectral(x, eig, [cut](double l) { return cplx(l > cut && l > 0.0 ? 1.0 : 0.0); });
}

// Functional calculus x^s. Eigenvalues at or below the rank threshold are
// treated as zero and mapped to zero for s <= 0 (so power(x, 0) = support).
// Non-integer s requires x >= 0; negative eigenvalues within tolerance are
// clamped.
inline Element power(const Element& x, double s) {
  detail::require_self_adjoint(x, "power");
  const bool integral = std::floor(s) == s && s >= 1.0;
  if (!integral && !is_positive(x)) throw domain_error("power: fractional power of a non-positive element");
  const auto eig = detail::eigen_blocks(x);
  const double cut = kRankTol * detail::max_abs_eigenvalue(eig);
  return detail::apply_spectral(x, eig, [&](double l) -> cplx {
    if (integral) return std::pow(l, s);
    return l <= cut ? 0.0 : std::pow(l, s);
  });
}

// Inverse on the support, zero on the kernel.
inline Element pseudo_inverse(const Element& x) {
  detail::require_self_adjoint(x, "pseudo_inverse");
  const auto eig = detail::eigen_blocks(x);
  const double cut = kRankTol * detail::max_abs_eigenvalue(eig);
  return detail::apply_spectral(x, eig, [cut](double l) -> cplx { return std::abs(l) > cut ? 1.0 / l : 0.0; });
}

struct Polar {
  Element w;        // partial isometry, w*w = support(modulus)
  Element modulus;  // |x| = (x*x)^{1/2}
};

// x = w|x| with w vanishing on ker|x|. Computed from an SVD so that small
// singular values are not lost to squaring.
inline Polar polar(const Element& x) {
  std::vector<Eigen::JacobiSVD<Mat>> svds;
  double smax = 0.0;
  for (const Mat& b : x.blocks()) {
    svds.emplace_back(b, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svds.back().singularValues().size() > 0)
      smax = std::max(smax, svds.back().singularValues()(0));
  }
  const double cut = kRankTol * smax;
  std::vector<Mat> w, m;
  for (std::size_t k = 0; k < svds.size(); ++k) {
    const auto& s = svds[k];
    const Eigen::Index n = x.block(k).rows();
    Eigen::Index r = 0;
    while (r < s.singularValues().size() && s.singularValues()(r) > cut && s.singularValues()(r) > 0.0) ++r;
    const Mat v = s.matrixV().leftCols(r);
    const Mat u = s.matrixU().leftCols(r);
    m.push_back(v * s.singularValues().head(r).cast<cplx>().asDiagonal() * v.adjoint());
    w.push_back(r > 0 ? Mat(u * v.adjoint()) : Mat(Mat::Zero(n, n)));
  }
  return {Element(x.algebra(), std::move(w)), Element(x.algebra(), std::move(m))};
}

// |x| = (x*x)^{1/2}.
inline Element modulus(const Element& x) { return polar(x).modulus; }

// A projection e in M and the compression isometries V_k onto range(e_k).
// The corner eMe is realized as the standalone algebra sum_k M_{rank e_k}
// with the block weights of M, which makes compress() trace preserving.
struct Corner {
  Algebra algebra;
  Algebra ambient;
  std::vector<std::size_t> source_block;  // ambient block of each corner block
  std::vector<Mat> isometry;              // ambient dim x corner dim

  Element compress(const Element& x) const {
    if (!(x.algebra() == ambient)) throw structural_error("compress: element not in the ambient algebra");
    std::vector<Mat> out;
    for (std::size_t i = 0; i < source_block.size(); ++i)
      out.push_back(isometry[i].adjoint() * x.block(source_block[i]) * isometry[i]);
    return Element(algebra, std::move(out));
  }

  Element expand(const Element& y) const {
    if (!(y.algebra() == algebra)) throw structural_error("expand: element not in the corner algebra");
    Element x = Element::zero(ambient);
    for (std::size_t i = 0; i < source_block.size(); ++i)
      x.block(source_block[i]) = isometry[i] * y.block(i) * isometry[i].adjoint();
    return x;
  }
};

inline bool is_projection(const Element& e, double tol = kIdentityTol) {
  return e.is_self_adjoint(tol) && approx_equal(e * e, e, tol);
}

inline Corner corner(const Element& e) {
  if (!is_projection(e, 1e-8)) throw precondition_error("corner: e is not a projection");
  Corner c;
  c.ambient = e.algebra();
  std::vector<Block> blocks;
  for (std::size_t k = 0; k < e.num_blocks(); ++k) {
    Eigen::SelfAdjointEigenSolver<Mat> es(Mat(0.5 * (e.block(k) + e.block(k).adjoint())));
    std::vector<Eigen::Index> cols;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()(i) > 0.5) cols.push_back(i);
    if (cols.empty()) continue;
    Mat v(e.block(k).rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) v.col(Eigen::Index(j)) = es.eigenvectors().col(cols[j]);
    blocks.push_back({static_cast<int>(cols.size()), e.algebra().weight(k)});
    c.source_block.push_back(k);
    c.isometry.push_back(std::move(v));
  }
  if (blocks.empty()) throw precondition_error("corner: e = 0 has an empty corner");
  c.algebra = Algebra(std::move(blocks));
  return c;
}

}  // namespace nclp

#endif  // NCLP_ALGEBRA_HPP_
