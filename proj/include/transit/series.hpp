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

#ifndef TRANSIT_SERIES_HPP
#define TRANSIT_SERIES_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <transit/rational.hpp>

namespace transit
{

// Formal exponential of a power series without constant term.
//
// `f[k - 1]` holds the coefficient f_k of x^k (k >= 1); missing entries are
// zero. Returns e_0..e_max_n of exp(sum f_k x^k), computed from the
// logarithmic-derivative convolution n e_n = sum_{k=1..n} k f_k e_{n-k}.
// T needs T(Rational), T + T, T * T and T * Rational.
template <typename T>
std::vector<T> series_exp(std::span<const T> f, int max_n)
{
    if (max_n < 0) {
        throw std::invalid_argument("series_exp: max_n must be non-negative");
    }
    std::vector<T> e;
    e.reserve(static_cast<std::size_t>(max_n) + 1);
    e.push_back(T(Rational(1)));
    for (int n = 1; n <= max_n; ++n) {
        T acc(Rational(0));
        const int kmax = std::min<int>(n, static_cast<int>(f.size()));
        for (int k = 1; k <= kmax; ++k) {
            acc += f[static_cast<std::size_t>(k - 1)] * e[static_cast<std::size_t>(n - k)] * Rational(k);
        }
        e.push_back(acc * Rational(1, n));
    }
    return e;
}

template <typename T>
std::vector<T> series_exp(const std::vector<T> &f, int max_n)
{
    return series_exp(std::span<const T>(f), max_n);
}

} // namespace transit

#endif
