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


// Shared generators and tolerance helpers for the unit tests.

#ifndef NCLP_TESTS_TEST_UTIL_HPP_
#define NCLP_TESTS_TEST_UTIL_HPP_

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "nclp/nclp.hpp"

namespace nclp::testing {

// |a - b| <= rel * max(1, |b|).
inline ::testing::AssertionResult Close(double a, double b, double rel) {
  if (std::abs(a - b) <= rel * std::max(1.0, std::abs(b))) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a << " vs " << b << " (rel tol " << rel << ")";
}

inline ::testing::AssertionResult Near(const Element& a, const Element& b, double tol = 1e-10) {
  if (!(a.algebra() == b.algebra())) return ::testing::AssertionFailure() << "different algebras";
  const double d = distance(a, b);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "distance " << d << " > " << tol;
}

inline Element diag(std::initializer_list<double> v) {
  RealVec d(Eigen::Index(v.size()));
  Eigen::Index i = 0;
  for (double x : v) d(i++) = x;
  return Element::from_matrix(d.cast<cplx>().asDiagonal());
}

inline Element mat2(cplx a, cplx b, cplx c, cplx d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return Element::from_matrix(m);
}

// Small random algebras: 1..3 blocks of dim 1..3 with weights in [0.5, 2].
inline Algebra random_algebra(Rng& rng, int max_blocks = 3, int max_dim = 3) {
  std::uniform_int_distribution<int> nb(1, max_blocks), dim(1, max_dim);
  std::uniform_real_distribution<double> w(0.5, 2.0);
  std::vector<Block> blocks;
  const int k = nb(rng);
  for (int i = 0; i < k; ++i) blocks.push_back({dim(rng), w(rng)});
  return Algebra(std::move(blocks));
}

inline double random_exponent(Rng& rng) {
  std::uniform_real_distribution<double> u(1.0, 5.0);
  return u(rng);
}

}  // namespace nclp::testing

#endif  // NCLP_TESTS_TEST_UTIL_HPP_
