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
#include "v2vrel/quadrature.hpp"
#include "v2vrel/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <vector>

namespace v2vrel
{

namespace
{

// Kronrod abscissae on [0, 1]; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452, 0.930157491355708226001207180059508,
    0.865063366688984510732096688423493, 0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784, 0.294392862701460198131126603103866,
    0.148874338981631210884826001129720, 0.000000000000000000000000000000000,
};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390, 0.054755896574351996031381300244580,
    0.075039674810919952767043140916190, 0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208267138430, 0.134709217311473325928054001771707, 0.142775938577060080797094273138717,
    0.147739104901338491374841515972068, 0.149445554002916905664936468389821,
};

constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697, 0.219086362515982043995534934228163,
    0.269266719309996355091226921569469, 0.295524224714752870173892994651338,
};

struct Segment
{
    double a;
    double b;
    double value;
    double error;
};

Segment gauss_kronrod_21(const std::function<double(double)> &f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double kronrod = kKronrodWeights[10] * fc;
    double gauss = 0.0;
    for (std::size_t j = 0; j < 10; ++j)
    {
        const double dx = half * kNodes[j];
        const double sum = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[j] * sum;
        if (j % 2 == 1)
            gauss += kGaussWeights[j / 2] * sum;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

} // namespace

QuadratureResult integrate(const std::function<double(double)> &f, std::span<const double> breakpoints,
                           const QuadratureOptions &options)
{
    if (breakpoints.size() < 2)
        throw DomainError("integration needs at least two breakpoints");
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
        if (!(breakpoints[i] > breakpoints[i - 1]))
            throw DomainError("integration breakpoints must be strictly increasing");

    std::vector<Segment> segments;
    QuadratureResult result;
    for (std::size_t i = 1; i < breakpoints.size(); ++i)
    {
        segments.push_back(gauss_kronrod_21(f, breakpoints[i - 1], breakpoints[i]));
        result.evaluations += 21;
    }

    // Summed in interval order so the result does not depend on refinement history.
    auto accumulate = [&] {
        result.value = 0.0;
        result.abs_error = 0.0;
        for (const auto &s : segments)
        {
            result.value += s.value;
            result.abs_error += s.error;
        }
    };
    accumulate();

    std::size_t bisections = 0;
    while (result.abs_error > std::max(options.abs_tol, options.rel_tol * std::abs(result.value)))
    {
        if (bisections >= options.max_subdivisions)
        {
            std::ostringstream msg;
            msg.precision(6);
            msg << "quadrature did not converge: value " << result.value << ", error estimate " << result.abs_error
                << " after " << bisections << " bisections over " << segments.size()
                << " intervals (relative tolerance " << options.rel_tol << ")";
            throw NumericalError(msg.str());
        }
        const auto worst = std::max_element(segments.begin(), segments.end(),
                                            [](const Segment &x, const Segment &y) { return x.error < y.error; });
        const double a = worst->a;
        const double b = worst->b;
        const double mid = 0.5 * (a + b);
        if (!(mid > a && mid < b))
        {
            std::ostringstream msg;
            msg << "quadrature interval [" << a << ", " << b << "] cannot be bisected further";
            throw NumericalError(msg.str());
        }
        *worst = gauss_kronrod_21(f, a, mid);
        segments.insert(worst + 1, gauss_kronrod_21(f, mid, b));
        result.evaluations += 42;
        ++bisections;
        accumulate();
    }
    result.intervals = segments.size();
    return result;
}

} // namespace v2vrel
