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

#ifndef NCLP_ERRORS_HPP_
#define NCLP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace nclp {

// Shapes or algebras do not line up.
class structural_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the mathematical domain of an operation (p < 1,
// non-self-adjoint argument to a spectral function, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A documented precondition of an operation failed numerically.
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Results that contradict a structure theorem; means a tolerance is off.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nclp

#endif  // NCLP_ERRORS_HPP_
