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

Element swap_matrix(int n) {
  Mat s = Mat::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i * n + j, j * n + i) = 1.0;
  return Element::from_matrix(s);
}

TEST(LpNorm, Examples) {
  for (int n : {1, 2, 3})
    for (double p : {1.0, 1.5, 2.0, 4.0})
      EXPECT_TRUE(Close(lp_norm(Element::identity(Algebra::matrices(n)), p), std::pow(n, 1.0 / p), 1e-14));
  for (int n : {2, 3})
    for (double p : {1.0, 2.0, 4.0}) EXPECT_TRUE(Close(lp_norm(swap_matrix(n), p), std::pow(n, 2.0 / p), 1e-12));
  EXPECT_TRUE(Close(lp_norm(diag({3, 4}), 2.0), 5.0, 1e-14));
  EXPECT_TRUE(Close(lp_norm(diag({3, -4}), kInf), 4.0, 1e-14));
}

TEST(LpNorm, WeightsEnterAsTraceScaling) {
  const Algebra a({{1, 2.0}, {3, 1.0}});
  EXPECT_TRUE(Close(lp_norm(Element::identity(a), 1.0), 5.0, 1e-14));
  EXPECT_TRUE(Close(lp_norm(Element::identity(a), 2.0), std::sqrt(5.0), 1e-14));
  EXPECT_TRUE(Close(lp_norm(Element::identity(a), kInf), 1.0, 1e-14));
}

TEST(LpNorm, RejectsSmallExponent) {
  EXPECT_THROW(lp_norm(diag({1, 1}), 0.5), domain_error);
  EXPECT_THROW(lp_norm(diag({1, 1}), std::nan("")), domain_error);
  EXPECT_THROW(conjugate_exponent(0.9), domain_error);
}

TEST(Holder, Examples) {
  const Element i2 = Element::identity(Algebra::matrices(2));
  EXPECT_TRUE(holder_check(i2, i2, 2.0, 2.0));
  EXPECT_TRUE(holder_check(mat2(0, 1, 0, 0), mat2(0, 0, 1, 0), 2.0, 2.0));
  EXPECT_TRUE(Close(lp_norm(mat2(0, 1, 0, 0) * mat2(0, 0, 1, 0), 1.0), 1.0, 1e-14));
  Rng rng(3);
  const Element x = random_element(Algebra::matrices(3), rng), y = random_element(Algebra::matrices(3), rng);
  EXPECT_TRUE(holder_check(x, y, 4.0, 4.0));
  EXPECT_THROW(holder_check(x, y, 1.0, 1.5), domain_error);
}

TEST(TensorNorm, Examples) {
  auto [l1, r1] = tensor_norm_identity(Element::identity(Algebra::matrices(2)),
                                       Element::identity(Algebra::matrices(3)), 1.0);
  EXPECT_TRUE(Close(l1, 6.0, 1e-14));
  EXPECT_TRUE(Close(r1, 6.0, 1e-14));
  auto [l2, r2] = tensor_norm_identity(diag({1, 0}), diag({1, 2}), 2.0);
  EXPECT_TRUE(Close(l2, std::sqrt(5.0), 1e-14));
  EXPECT_TRUE(Close(r2, std::sqrt(5.0), 1e-14));
  Rng rng(4);
  const Element x = random_positive(Algebra::matrices(2), rng), y = random_positive(Algebra({{2, 1.5}, {1, 1.0}}), rng);
  EXPECT_TRUE(is_positive(tensor(x, y), 1e-9));
}

TEST(DirectSumNorm, Examples) {
  const Element i2 = Element::identity(Algebra::matrices(2));
  EXPECT_TRUE(Close(direct_sum_norm(i2, Element::zero(Algebra::matrices(2)), 1.0), 2.0, 1e-14));
  Rng rng(5);
  const Element x = random_element(Algebra::matrices(3), rng);
  EXPECT_TRUE(Close(direct_sum_norm(x, x, 2.0), std::sqrt(2.0) * lp_norm(x, 2.0), 1e-13));
  const Element y = random_element(Algebra::matrices(2, 0.7), rng);
  EXPECT_TRUE(Close(direct_sum_norm(x, y, 3.0), lp_norm(direct_sum(x, y), 3.0), 1e-13));
}

// Properties on random inputs.

TEST(SchattenProperty, NormingFunctionalAttainsNorm) {
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const Algebra a = testing::random_algebra(rng);
    const Element x = random_element(a, rng);
    const double p = trial % 10 == 0 ? 1.0 : testing::random_exponent(rng);
    const Element y = norming_functional(x, p);
    EXPECT_TRUE(Close(lp_norm(y, conjugate_exponent(p)), 1.0, 1e-9));
    EXPECT_TRUE(Close(trace(x * y).real(), lp_norm(x, p), 1e-9));
    EXPECT_LT(std::abs(trace(x * y).imag()), 1e-9 * lp_norm(x, p));
  }
}

TEST(SchattenProperty, TriangleHolderAndMonotonicity) {
  Rng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const Algebra a = testing::random_algebra(rng);
    const Element x = random_element(a, rng), y = random_element(a, rng);
    const double p = testing::random_exponent(rng), q = conjugate_exponent(p);
    EXPECT_LE(lp_norm(x + y, p), (lp_norm(x, p) + lp_norm(y, p)) * (1 + 1e-12));
    EXPECT_TRUE(holder_check(x, y, p, q));
    EXPECT_TRUE(holder_check(x, y, 2.0 * p, 2.0 * p));
    EXPECT_TRUE(Close(lp_norm(x.adjoint(), p), lp_norm(x, p), 1e-12));
    const Element u = random_unitary(a, rng);
    EXPECT_TRUE(Close(lp_norm(u * x * u.adjoint(), p), lp_norm(x, p), 1e-10));
  }
}

TEST(SchattenProperty, TensorAndDirectSumIdentities) {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Algebra a = testing::random_algebra(rng, 2, 2), b = testing::random_algebra(rng, 2, 2);
    const Element x = random_element(a, rng), y = random_element(b, rng);
    const double p = testing::random_exponent(rng);
    auto [l, r] = tensor_norm_identity(x, y, p);
    EXPECT_TRUE(Close(l, r, 1e-10));
    EXPECT_TRUE(Close(direct_sum_norm(x, y, p), lp_norm(direct_sum(x, y), p), 1e-10));
  }
}

}  // namespace
}  // namespace nclp
