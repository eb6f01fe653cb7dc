// Copyright 2026 The transit Authors.
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

#ifndef TRANSIT_TRANSIT_HPP
#define TRANSIT_TRANSIT_HPP

#include <transit/coefficients.hpp>
#include <transit/complex.hpp>
#include <transit/expansion.hpp>
#include <transit/gaussian.hpp>
#include <transit/poly.hpp>
#include <transit/rational.hpp>
#include <transit/real.hpp>
#include <transit/resurgence.hpp>
#include <transit/serialize.hpp>
#include <transit/series.hpp>
#include <transit/special.hpp>
#include <transit/verify.hpp>

#endif
