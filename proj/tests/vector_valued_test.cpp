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


#include <gtest/gtest.h>

#include "test_util.hpp"

namespace nclp {
namespace {

using testing::Close;
using testing::diag;
using testing::Near;

SolverConfig quick() {
  SolverConfig c;
  c.restarts = 4;
  c.iters = 1500;
  return c;
}

TEST(ColumnNorm, Examples) {
  const Algebra m2 = Algebra::matrices(2);
  const std::vector<Element> diag_units{Element::unit(m2, 0, 0, 0), Element::unit(m2, 0, 1, 1)};
  EXPECT_TRUE(Close(col_norm(diag_units, 2.0), std::sqrt(2.0), 1e-14));
  Rng rng(1);
  const Element x = random_element(Algebra::matrices(3), rng);
  for (double p : {1.0, 2.5, kInf}) {
    EXPECT_TRUE(Close(col_norm(std::vector<Element>{x}, p), lp_norm(x, p), 1e-12));
    EXPECT_TRUE(Close(row_norm(std::vector<Element>{x}, p), lp_norm(x, p), 1e-12));
  }
  for (int n : {2, 3}) {
    const Algebra mn = Algebra::matrices(n);
    std::vector<Element> col, row;
    for (int k = 0; k < n; ++k) {
      col.push_back(Element::unit(mn, 0, k, 0));
      row.push_back(Element::unit(mn, 0, 0, k));
    }
    for (double p : {2.0, 4.0}) {
      EXPECT_TRUE(Close(col_norm(col, p), std::sqrt(double(n)), 1e-13));
      EXPECT_TRUE(Close(row_norm(row, p), std::sqrt(double(n)), 1e-13));
    }
  }
}

TEST(ColumnPolar, Examples) {
  const Algebra m2 = Algebra::matrices(2);
  const Element e11 = Element::unit(m2, 0, 0, 0);
  const ColumnPolar one = polar_column_family(std::vector<Element>{e11}, 2.0);
  EXPECT_TRUE(Near(one.contractions[0], e11));
  EXPECT_TRUE(Near(one.b, e11));

  Rng rng(2);
  const Element x = random_element(Algebra::matrices(3), rng);
  const ColumnPolar cx = polar_column_family(std::vector<Element>{cplx(0.0, -2.0) * x}, 3.0);
  EXPECT_TRUE(Near(cx.b, 2.0 * modulus(x), 1e-9));

  const ColumnPolar none = polar_column_family(std::vector<Element>{}, 2.0);
  EXPECT_TRUE(none.contractions.empty());
  EXPECT_THROW(polar_column_family(std::vector<Element>{e11}, kInf), domain_error);
}

TEST(TensorElement, Examples) {
  Rng rng(3);
  const Algebra a({{2, 1.0}, {1, 3.0}});
  const Element x = random_element(a, rng);
  GridElement g1 = GridElement::zero(a, 1);
  g1(0, 0) = x;
  EXPECT_TRUE(Near(to_tensor_element(g1), Element(amplify(a, 1), x.blocks()), 0.0));

  for (int n : {2, 3}) {
    const Element t = to_tensor_element(matrix_unit_grid(Algebra::matrices(n), n));
    Vec v = Vec::Zero(n * n);
    for (int i = 0; i < n; ++i) v(i * n + i) = 1.0;
    EXPECT_TRUE(Near(t, Element(amplify(Algebra::matrices(n), n), {v * v.adjoint()}), 0.0));
  }
  const GridElement g = random_grid(a, 3, rng);
  const GridElement back = from_tensor_element(to_tensor_element(g), a, 3);
  for (std::size_t i = 0; i < g.entries().size(); ++i) EXPECT_TRUE(Near(back.entries()[i], g.entries()[i], 0.0));
  EXPECT_THROW(from_tensor_element(x, a, 2), structural_error);
}

TEST(S1NormP1, Examples) {
  for (int n : {2, 3}) EXPECT_TRUE(Close(s1_norm_p1(matrix_unit_grid(Algebra::matrices(n), n)), n, 1e-12));
  Rng rng(4);
  const Element x = random_element(Algebra::matrices(2), rng);
  GridElement g = GridElement::zero(x.algebra(), 2);
  g(0, 0) = x;
  EXPECT_TRUE(Close(s1_norm_p1(g), lp_norm(x, 1.0), 1e-12));
  const GridElement r = random_grid(Algebra::matrices(2), 2, rng);
  Mat big(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) big.block(2 * i, 2 * j, 2, 2) = r(i, j).block(0);
  EXPECT_TRUE(Close(s1_norm_p1(r), Eigen::JacobiSVD<Mat>(big).singularValues().sum(), 1e-12));
}

TEST(S1NormPositive, Examples) {
  for (int n : {2, 3})
    for (double p : {1.0, 2.0, 4.0})
      EXPECT_TRUE(Close(s1_norm_positive(matrix_unit_grid(Algebra::matrices(n), n), p), std::pow(n, 1.0 / p), 1e-12));
  const Algebra m3 = Algebra::matrices(3);
  GridElement d = GridElement::zero(m3, 3);
  for (int i = 0; i < 3; ++i) d(i, i) = Element::unit(m3, 0, i, i);
  EXPECT_TRUE(Close(s1_norm_positive(d, 3.0), std::pow(3.0, 1.0 / 3.0), 1e-12));
  EXPECT_THROW(s1_norm_positive(matrix_unit_grid(Algebra::matrices(2), 2, true), 2.0), precondition_error);
}

TEST(S1NormOpt, MatrixUnits) {
  for (int n : {2, 3})
    for (double p : {2.0, 4.0}) {
      const S1Result r = s1_norm_opt(matrix_unit_grid(Algebra::matrices(n), n), p, quick());
      EXPECT_TRUE(Close(r.upper, std::pow(n, 1.0 / p), 1e-3)) << "n=" << n << " p=" << p;
      EXPECT_LE(r.lower, r.upper * (1 + 1e-12));
      EXPECT_LT(r.factorization.residual(matrix_unit_grid(Algebra::matrices(n), n)), 1e-8);
    }
}

TEST(S1NormOpt, TransposedUnits) {
  const int n = 2;
  for (double p : {2.0, 4.0}) {
    const GridElement x = matrix_unit_grid(Algebra::matrices(n), n, true);
    const Factorization w = transpose_witness(x.algebra(), n);
    EXPECT_LT(w.residual(x), 1e-14);
    EXPECT_TRUE(Close(w.value(p), std::pow(n, 1.0 + 1.0 / p), 1e-12));
    const S1Result r = s1_norm_opt(x, p, quick(), std::vector<Factorization>{w});
    EXPECT_TRUE(Close(r.upper, std::pow(n, 1.0 + 1.0 / p), 1e-2)) << "p=" << p;
    EXPECT_GE(r.lower, std::pow(n, 1.0 + 1.0 / p) * (1 - 1e-2));
  }
}

TEST(S1NormOpt, RankOneScalarGrid) {
  Rng rng(5);
  const Element x = random_element(Algebra::matrices(2), rng);
  Mat c = Mat::Zero(2, 2);
  c << 1.0, cplx(0.0, 2.0), -0.5, 0.3;
  const GridElement g = GridElement::scalar_tensor(c, x);
  const double scalar = Eigen::JacobiSVD<Mat>(c).singularValues().sum();
  for (double p : {1.0, 3.0}) {
    const S1Result r = s1_norm_opt(g, p, quick());
    EXPECT_TRUE(Close(r.upper, lp_norm(x, p) * scalar, 2e-3)) << "p=" << p;
  }
  EXPECT_TRUE(Close(s1_norm_p1(g), lp_norm(x, 1.0) * scalar, 1e-12));
}

TEST(S1Norm, DispatchesToOracles) {
  const GridElement units = matrix_unit_grid(Algebra::matrices(2), 2);
  EXPECT_EQ(s1_norm(units, 2.0).oracle, "positive-cone");
  EXPECT_TRUE(Close(s1_norm(units, 2.0).upper, std::sqrt(2.0), 1e-12));
  EXPECT_EQ(s1_norm(units, 1.0).oracle, "trace-norm");
  GridElement single = GridElement::zero(Algebra::matrices(2), 2);
  single(0, 1) = diag({1, -2});
  EXPECT_EQ(s1_norm(single, 3.0).oracle, "single-entry");
  EXPECT_THROW(s1_norm(units, 0.5), domain_error);
}

TEST(S1Norm, MaxMBelowGridSizeIsRejected) {
  SolverConfig c = quick();
  c.max_m = 1;
  EXPECT_THROW(s1_norm_opt(matrix_unit_grid(Algebra::matrices(2), 2, true), 2.0, c), precondition_error);
}

TEST(S1DirectSum, Examples) {
  Rng rng(6);
  const GridElement x = random_grid(Algebra::matrices(2), 2, rng);
  auto [l0, r0] = s1_direct_sum_check(x, GridElement::zero(Algebra::matrices(2), 2), 3.0, quick());
  EXPECT_TRUE(Close(l0, r0, 1e-2));
  const GridElement u = matrix_unit_grid(Algebra::matrices(2), 2);
  for (double p : {2.0, 3.0}) {
    auto [l, r] = s1_direct_sum_check(u, u, p);
    EXPECT_TRUE(Close(l, std::pow(2.0, 1.0 / p) * std::pow(2.0, 1.0 / p), 1e-12));
    EXPECT_TRUE(Close(r, l, 1e-12));
  }
}

TEST(S1Corner, Examples) {
  Rng rng(7);
  const GridElement x = random_grid(Algebra::matrices(2), 2, rng);
  auto [i0, o0] = s1_corner_check(x, Element::identity(Algebra::matrices(2)), 3.0, quick());
  EXPECT_TRUE(Close(i0, o0, 1e-2));

  Mat c(2, 2);
  c << 1.0, -1.0, 0.5, 2.0;
  const GridElement s = GridElement::scalar_tensor(c, diag({1, 0}));
  auto [i1, o1] = s1_corner_check(s, diag({1, 0}), 3.0, quick());
  const double scalar = Eigen::JacobiSVD<Mat>(c).singularValues().sum();
  EXPECT_TRUE(Close(i1, scalar, 1e-2));
  EXPECT_TRUE(Close(o1, scalar, 1e-2));

  EXPECT_THROW(s1_corner_check(x, diag({1, 0}), 3.0), precondition_error);
}

// Properties on random inputs.

TEST(VectorValuedProperty, OptimizerBracketsTheNorm) {
  Rng rng(31);
  SolverConfig c = quick();
  c.structured_seeds = false;
  for (int trial = 0; trial < 8; ++trial) {
    const Algebra a = testing::random_algebra(rng, 2, 2);
    const GridElement x = random_grid(a, 2, rng);
    const double p = testing::random_exponent(rng);
    const S1Result r = s1_norm_opt(x, p, c);
    EXPECT_LE(r.lower, r.upper * (1 + 1e-10));
    EXPECT_GE(r.upper, diagonal_bound(x, p) - 1e-8);
    EXPECT_LT(r.factorization.residual(x), 1e-8);
    EXPECT_TRUE(Close(r.factorization.value(p), r.upper, 1e-9));
    if (r.converged) {
      EXPECT_LE(r.upper - r.lower, c.rel_tol * r.upper * (1 + 1e-9));
    }
  }
}

TEST(VectorValuedProperty, P1MatchesTraceNorm) {
  Rng rng(32);
  for (int trial = 0; trial < 6; ++trial) {
    const GridElement x = random_grid(Algebra::matrices(2), 2, rng);
    EXPECT_TRUE(Close(s1_norm_opt(x, 1.0, quick()).upper, s1_norm_p1(x), 1e-2));
  }
}

TEST(VectorValuedProperty, PositiveGridsMatchDiagonal) {
  Rng rng(33);
  for (int trial = 0; trial < 6; ++trial) {
    const Algebra a = testing::random_algebra(rng, 2, 2);
    const GridElement x = random_positive_grid(a, 2, rng);
    const double p = testing::random_exponent(rng);
    EXPECT_TRUE(Close(s1_norm_opt(x, p, quick()).upper, s1_norm_positive(x, p), 1e-2));
  }
}

TEST(VectorValuedProperty, ScalingAndUnitaryInvariance) {
  Rng rng(34);
  for (int trial = 0; trial < 4; ++trial) {
    const GridElement x = random_grid(Algebra::matrices(2), 2, rng);
    const double p = testing::random_exponent(rng);
    const double base = s1_norm_opt(x, p, quick()).upper;
    EXPECT_TRUE(Close(s1_norm_opt(cplx(0.0, 3.0) * x, p, quick()).upper, 3.0 * base, 1e-2));
    const Element u = random_unitary(x.algebra(), rng), v = random_unitary(x.algebra(), rng);
    const GridElement y = x.map(x.algebra(), [&](const Element& e) { return u * e * v; });
    EXPECT_TRUE(Close(s1_norm_opt(y, p, quick()).upper, base, 1e-2));
  }
}

}  // namespace
}  // namespace nclp
