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
using testing::mat2;
using testing::Near;

SolverConfig quick() {
  SolverConfig c;
  c.restarts = 4;
  c.iters = 1500;
  c.ascent_steps = 8;
  return c;
}

TEST(LpMap, ConstructorExamples) {
  EXPECT_TRUE(Near(transpose_map(2).apply(mat2(0, 1, 0, 0)), mat2(0, 0, 1, 0)));
  Rng rng(1);
  const Element x = random_element(Algebra::matrices(2), rng);
  EXPECT_TRUE(Near(embed_tensor(Algebra::matrices(2), diag({1, 0})).apply(x), tensor(x, diag({1, 0}))));
  for (int n : {2, 3}) {
    const Algebra mn = Algebra::matrices(n);
    const Element units = to_tensor_element(matrix_unit_grid(mn, n));
    Mat swap = Mat::Zero(n * n, n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) swap(i * n + j, j * n + i) = 1.0;
    EXPECT_LT((amplify_sp(transpose_map(n), n).apply(units).block(0) - swap).norm(), 1e-14);
  }
}

TEST(LpMap, StructuralErrors) {
  const Algebra m2 = Algebra::matrices(2), m3 = Algebra::matrices(3);
  EXPECT_THROW(LpMap(m2, m2, Mat::Zero(3, 4)), structural_error);
  EXPECT_THROW(compose(identity_map(m2), identity_map(m3)), structural_error);
  EXPECT_THROW(stack_maps(identity_map(m2), identity_map(m3)), structural_error);
  EXPECT_THROW(identity_map(m2).apply(Element::identity(m3)), structural_error);
  EXPECT_THROW(amplify_sp(identity_map(m2), 0), structural_error);
  EXPECT_THROW(summand_projection(m2, 0, 2), structural_error);
}

TEST(LpMap, DualApplyIsTheTraceAdjoint) {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Algebra a = testing::random_algebra(rng), b = testing::random_algebra(rng);
    const LpMap t(a, b, gaussian_matrix(b.coord_dim(), a.coord_dim(), rng));
    const Element x = random_element(a, rng), g = random_element(b, rng);
    const cplx lhs = trace(g.adjoint() * t.apply(x));
    const cplx rhs = trace(t.dual_apply(g).adjoint() * x);
    EXPECT_LT(std::abs(lhs - rhs), 1e-10 * (1.0 + std::abs(lhs)));
  }
}

TEST(OpNorm, Examples) {
  for (int n : {2, 3})
    for (double p : {1.0, 2.0, 3.0}) {
      EXPECT_TRUE(Close(op_norm(identity_map(Algebra::matrices(n)), p, quick()).value, 1.0, 1e-12));
      EXPECT_TRUE(Close(op_norm(transpose_map(n), p, quick()).value, 1.0, 1e-12));
      EXPECT_TRUE(Close(op_norm(scale(cplx(0.0, -2.5), identity_map(Algebra::matrices(n))), p, quick()).value, 2.5,
                        1e-12));
    }
  EXPECT_TRUE(op_norm(transpose_map(2), 2.0).exact);
  EXPECT_THROW(op_norm(transpose_map(2), kInf), domain_error);
}

TEST(OpNorm, WitnessAttainsValue) {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const Algebra a = testing::random_algebra(rng, 2, 2), b = testing::random_algebra(rng, 2, 2);
    const LpMap t(a, b, gaussian_matrix(b.coord_dim(), a.coord_dim(), rng));
    const double p = testing::random_exponent(rng);
    const NormEstimate e = op_norm(t, p, quick());
    EXPECT_TRUE(Close(lp_norm(e.witness, p), 1.0, 1e-10));
    EXPECT_TRUE(Close(lp_norm(t.apply(e.witness), p), e.value, 1e-10));
    for (int s = 0; s < 20; ++s) {
      const Element x = random_element(a, rng);
      EXPECT_LE(lp_norm(t.apply(x), p), e.value * lp_norm(x, p) * (1 + 1e-2));
    }
  }
}

TEST(AmplifiedNorm, Transpose) {
  EXPECT_TRUE(Close(amplified_norm(transpose_map(2), 1.0, 2, quick()).value, 2.0, 1e-6));
  const double v = amplified_norm(transpose_map(2), 4.0, 2, quick()).value;
  EXPECT_GE(v, std::pow(2.0, 0.5) * (1 - 1e-2));
  EXPECT_LE(v, std::pow(2.0, 0.5) + 1e-6);
  const LpMap r(Algebra::matrices(2), Algebra::matrices(2), Mat::Random(4, 4));
  const AmplifiedEstimate one = amplified_norm(r, 3.0, 1, quick());
  EXPECT_TRUE(Close(one.value, op_norm(r, 3.0, quick()).value, 1e-9));
  const AmplifiedEstimate chain = amplified_norm(r, 3.0, 3, quick());
  ASSERT_EQ(chain.chain.size(), 3u);
  for (std::size_t i = 1; i < chain.chain.size(); ++i) EXPECT_GE(chain.chain[i], chain.chain[i - 1] * (1 - 1e-12));
}

TEST(S1MapNorm, Examples) {
  const S1MapEstimate t = s1_map_norm(transpose_map(2), 2.0, 2, quick());
  EXPECT_GE(t.value, 2.0 * (1 - 2e-2));
  const double ratio = s1_ratio(transpose_map(2), matrix_unit_grid(Algebra::matrices(2), 2), 2.0, quick());
  EXPECT_TRUE(Close(ratio, 2.0, 1e-2));
  EXPECT_TRUE(Close(s1_map_norm(identity_map(Algebra::matrices(2)), 3.0, 2, quick()).value, 1.0, 1e-2));
  Element b = diag({1, 1});
  b *= std::pow(2.0, -1.0 / 3.0);
  const LpMap emb = embed_tensor(Algebra::matrices(2), b);
  Rng rng(4);
  const GridElement x = random_grid(Algebra::matrices(2), 2, rng);
  EXPECT_TRUE(Close(s1_ratio(emb, x, 3.0, quick()), 1.0, 1e-2));
}

TEST(CompletelyPositive, Examples) {
  EXPECT_TRUE(is_completely_positive(identity_map(Algebra::matrices(2))).completely_positive);
  const CpCertificate t = is_completely_positive(transpose_map(2));
  EXPECT_FALSE(t.completely_positive);
  EXPECT_NEAR(t.min_eigenvalue, -1.0, 1e-12);
  Rng rng(5);
  const Element a = random_element(Algebra::matrices(3), rng);
  EXPECT_TRUE(is_completely_positive(conjugation_map(a.adjoint(), a)).completely_positive);
}

TEST(CpS1Equality, Examples) {
  const Element b = diag({0.5, 1.5});
  const CpS1Report r = cp_s1_equality_test(embed_tensor(Algebra::matrices(2), b), 3.0, 2, quick());
  EXPECT_TRUE(r.pass);
  Rng rng(6);
  const Element a = random_element(Algebra::matrices(2), rng);
  EXPECT_TRUE(cp_s1_equality_test(conjugation_map(a.adjoint(), a), 3.0, 2, quick()).pass);
  EXPECT_THROW(cp_s1_equality_test(transpose_map(2), 3.0, 2, quick()), precondition_error);
}

TEST(MapsProperty, RandomCpMapsHaveEqualS1Norm) {
  Rng rng(41);
  for (int trial = 0; trial < 3; ++trial) {
    const LpMap t = random_cp_map(Algebra::matrices(2), Algebra::matrices(2), rng);
    ASSERT_TRUE(is_completely_positive(t, 1e-9).completely_positive);
    const CpS1Report r = cp_s1_equality_test(t, trial % 2 ? 1.0 : 3.0, 2, quick());
    EXPECT_TRUE(r.pass) << "trial " << trial;
    for (const CpS1Row& row : r.rows) EXPECT_LT(row.transport_residual, 1e-7);
  }
}

TEST(Isometry, Examples) {
  for (double p : {1.0, 2.0, 3.0}) {
    Element b = diag({1, 2});
    b *= 1.0 / lp_norm(b, p);
    EXPECT_TRUE(is_isometry(embed_tensor(Algebra::matrices(2), b), p));
    EXPECT_FALSE(is_isometry(scale(0.5, identity_map(Algebra::matrices(2))), p));
    const LpMap raw = stack_maps(identity_map(Algebra::matrices(2)),
                                 scale(std::pow(2.0, -1.0 / p), transpose_map(2)));
    EXPECT_FALSE(is_isometry(raw, p));
  }
  // (b1-scaled x, b2-scaled t(x)) with ||b1||^p + ||b2||^p = 1.
  const double p = 3.0;
  const Element b1 = std::pow(0.25, 1.0 / p) * diag({1}), b2 = std::pow(0.75, 1.0 / p) * diag({1});
  const LpMap good = stack_maps(embed_tensor(Algebra::matrices(2), b1),
                                compose(embed_tensor(Algebra::matrices(2), b2), transpose_map(2)));
  EXPECT_TRUE(is_isometry(good, p));
  EXPECT_TRUE(is_isometry(good, p, IsometryMethod::kYeadon));
}

}  // namespace
}  // namespace nclp
