// Copyright 2026 The v2vrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef V2VREL_TESTS_SUPPORT_HPP
#define V2VREL_TESTS_SUPPORT_HPP

#include "v2vrel/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <span>

namespace v2vrel::testing
{

struct MeanEstimate
{
    double mean = 0.0;
    double se = 0.0; // standard error of the mean
};

inline MeanEstimate estimate_mean(std::span<const double> xs)
{
    const auto n = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs)
        sum += x;
    const double m = sum / n;
    double ss = 0.0;
    for (double x : xs)
        ss += (x - m) * (x - m);
    return {m, std::sqrt(ss / (n - 1.0) / n)};
}

// Relative closeness; doctest::Approx adds an absolute floor of epsilon, which is
// useless for path-loss gains around 1e-7.
inline bool rel_close(double a, double b, double rel)
{
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

// Generator for property tests; each case gets its own stream.
inline RandomStream case_stream(std::uint64_t suite, std::uint64_t index)
{
    return RandomStream::substream(0x7e57, suite, index);
}

inline double uniform(RandomStream &rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

} // namespace v2vrel::testing

#endif
