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


// Everything in one include.

#ifndef NCLP_NCLP_HPP_
#define NCLP_NCLP_HPP_

#include "nclp/errors.hpp"
#include "nclp/config.hpp"
#include "nclp/algebra.hpp"
#include "nclp/schatten.hpp"
#include "nclp/grid.hpp"
#include "nclp/lp_map.hpp"
#include "nclp/homomorphism.hpp"
#include "nclp/random.hpp"
#include "nclp/vector_valued.hpp"
#include "nclp/maps.hpp"
#include "nclp/yeadon.hpp"
#include "nclp/json_io.hpp"
#include "nclp/verify.hpp"

#endif  // NCLP_NCLP_HPP_
