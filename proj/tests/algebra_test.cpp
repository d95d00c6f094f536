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

TEST(Algebra, RejectsBadBlocks) {
  EXPECT_THROW(Algebra(std::vector<Block>{}), structural_error);
  EXPECT_THROW(Algebra({Block{0, 1.0}}), structural_error);
  EXPECT_THROW(Algebra({Block{2, 0.0}}), structural_error);
  EXPECT_THROW(Algebra({Block{2, -1.0}}), structural_error);
  EXPECT_THROW(Algebra({Block{2, kInf}}), structural_error);
}

TEST(Algebra, CoordinateLayout) {
  const Algebra a({{1, 2.0}, {3, 1.0}});
  EXPECT_EQ(a.coord_dim(), 10);
  EXPECT_EQ(a.coord_offset(1), 1);
  EXPECT_FALSE(a.is_abelian());
  EXPECT_TRUE(Algebra::diagonal(3).is_abelian());
  const Algebra t = tensor(Algebra::matrices(2, 3.0), a);
  ASSERT_EQ(t.num_blocks(), 2u);
  EXPECT_EQ(t.dim(1), 6);
  EXPECT_DOUBLE_EQ(t.weight(0), 6.0);
}

TEST(Element, ShapeMismatchIsStructural) {
  EXPECT_THROW(Element(Algebra::matrices(2), {Mat::Zero(3, 3)}), structural_error);
  EXPECT_THROW(Element(Algebra::matrices(2), {}), structural_error);
  EXPECT_THROW(Element::from_matrix(Mat::Zero(2, 3)), structural_error);
  EXPECT_THROW(Element::identity(Algebra::matrices(2)) + Element::identity(Algebra::matrices(3)), structural_error);
}

TEST(Trace, Examples) {
  EXPECT_NEAR(std::abs(trace(Element::identity(Algebra::matrices(2))) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(trace(mat2(0, 1, 0, 0))), 0.0, 1e-15);
  const Algebra a({{1, 2.0}, {3, 1.0}});
  EXPECT_NEAR(std::abs(trace(Element::identity(a)) - 5.0), 0.0, 1e-15);
}

TEST(Polar, Examples) {
  const Polar id = polar(Element::identity(Algebra::matrices(2)));
  EXPECT_TRUE(Near(id.w, Element::identity(Algebra::matrices(2))));
  EXPECT_TRUE(Near(id.modulus, Element::identity(Algebra::matrices(2))));

  const Polar e12 = polar(mat2(0, 1, 0, 0));
  EXPECT_TRUE(Near(e12.w, mat2(0, 1, 0, 0)));
  EXPECT_TRUE(Near(e12.modulus, mat2(0, 0, 0, 1)));

  const Element zero = Element::zero(Algebra::matrices(2));
  const Polar z = polar(zero);
  EXPECT_TRUE(Near(z.w, zero));
  EXPECT_TRUE(Near(z.modulus, zero));
  EXPECT_TRUE(Near(support(z.modulus), zero));
}

TEST(Support, Examples) {
  EXPECT_TRUE(Near(support(diag({3, 0})), diag({1, 0})));
  EXPECT_TRUE(Near(support(Element::identity(Algebra::matrices(3))), Element::identity(Algebra::matrices(3))));
  const Element proj = mat2(0.5, 0.5, 0.5, 0.5);
  EXPECT_TRUE(Near(support(proj), proj));
}

TEST(Functional, Examples) {
  EXPECT_FALSE(is_positive(diag({1, -1e-3}), 1e-9));
  EXPECT_TRUE(is_positive(diag({1, 0}), 1e-9));
  EXPECT_TRUE(Near(power(diag({4, 9}), 0.5), diag({2, 3})));
  EXPECT_TRUE(Near(pseudo_inverse(diag({2, 0})), diag({0.5, 0})));
}

TEST(Functional, DomainErrors) {
  EXPECT_THROW(power(diag({1, -1}), 0.5), domain_error);
  EXPECT_THROW(power(mat2(0, 1, 0, 0), 0.5), domain_error);
  EXPECT_THROW(support(diag({1, -1})), domain_error);
  EXPECT_NO_THROW(power(diag({1, -1}), 2.0));
}

TEST(Corner, RealizesCompressionAsAlgebra) {
  const Algebra m4 = Algebra::matrices(4, 2.0);
  Element e = Element::zero(m4);
  e.block(0)(0, 0) = 1.0;
  e.block(0)(2, 2) = 1.0;
  const Corner c = corner(e);
  EXPECT_EQ(c.algebra.dim(0), 2);
  EXPECT_DOUBLE_EQ(c.algebra.weight(0), 2.0);
  EXPECT_THROW(corner(Element::zero(m4)), precondition_error);
  EXPECT_THROW(corner(diag({2, 0})), precondition_error);
}

// Properties on random inputs.

TEST(AlgebraProperty, PolarReassembles) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Algebra a = testing::random_algebra(rng);
    Element x = random_element(a, rng);
    if (trial % 3 == 0) x = x * spectral_decomposition(random_self_adjoint(a, rng)).projections.back();
    const Polar pl = polar(x);
    EXPECT_TRUE(Near(pl.w * pl.modulus, x, 1e-9 * std::max(1.0, x.frobenius())));
    EXPECT_TRUE(is_positive(pl.modulus, 1e-9));
    EXPECT_TRUE(Near(pl.w.adjoint() * pl.w, support(pl.modulus), 1e-8));
  }
}

TEST(AlgebraProperty, PowerAndPseudoInverse) {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Algebra a = testing::random_algebra(rng);
    const Element y = random_positive(a, rng);
    EXPECT_TRUE(Near(power(y, 0.5) * power(y, 0.5), y, 1e-9 * y.frobenius()));
    EXPECT_TRUE(Near(power(y, 0.3) * power(y, 0.7), y, 1e-9 * y.frobenius()));
    const Element yi = pseudo_inverse(y);
    EXPECT_TRUE(Near(y * yi * y, y, 1e-8 * y.frobenius()));
    EXPECT_TRUE(Near(support(y) * y, y, 1e-9 * y.frobenius()));
  }
}

TEST(AlgebraProperty, TraceIsTracial) {
  Rng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Algebra a = testing::random_algebra(rng);
    const Element x = random_element(a, rng), y = random_element(a, rng);
    EXPECT_LT(std::abs(trace(x * y) - trace(y * x)), 1e-10 * (1.0 + x.frobenius() * y.frobenius()));
    EXPECT_LT(std::abs(trace(x.adjoint()) - std::conj(trace(x))), 1e-12 * (1.0 + x.frobenius()));
  }
}

TEST(AlgebraProperty, CoordinatesRoundTrip) {
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const Algebra a = testing::random_algebra(rng);
    const Element x = random_element(a, rng);
    EXPECT_TRUE(Near(Element::from_coords(a, x.coords()), x, 0.0));
  }
}

TEST(AlgebraProperty, SpectralProjectionsSumToIdentity) {
  Rng rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const Algebra a = testing::random_algebra(rng);
    const Element h = random_self_adjoint(a, rng);
    const SpectralData sd = spectral_decomposition(h);
    Element sum = Element::zero(a), rebuilt = Element::zero(a);
    for (std::size_t i = 0; i < sd.projections.size(); ++i) {
      sum += sd.projections[i];
      rebuilt += sd.eigenvalues[i] * sd.projections[i];
      EXPECT_TRUE(is_projection(sd.projections[i], 1e-9));
    }
    EXPECT_TRUE(Near(sum, Element::identity(a), 1e-9));
    EXPECT_TRUE(Near(rebuilt, h, 1e-9 * std::max(1.0, h.frobenius())));
  }
}

TEST(AlgebraProperty, CornerCompressIsTracePreserving) {
  Rng rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    const Algebra a = testing::random_algebra(rng, 2, 4);
    const Element e = spectral_decomposition(random_self_adjoint(a, rng)).projections.front();
    const Corner c = corner(e);
    const Element x = e * random_element(a, rng) * e;
    const Element y = c.compress(x);
    EXPECT_LT(std::abs(trace(y) - trace(x)), 1e-10 * (1.0 + x.frobenius()));
    EXPECT_TRUE(Near(c.expand(y), x, 1e-10 * (1.0 + x.frobenius())));
  }
}

}  // namespace
}  // namespace nclp
