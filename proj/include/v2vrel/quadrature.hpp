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
#ifndef V2VREL_QUADRATURE_HPP
#define V2VREL_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>

namespace v2vrel
{

struct QuadratureOptions
{
    double rel_tol = 1e-10;
    double abs_tol = 0.0;
    std::size_t max_subdivisions = 500;
};

struct QuadratureResult
{
    double value = 0.0;
    double abs_error = 0.0;
    std::size_t intervals = 0;
    std::size_t evaluations = 0;
};

/// Globally adaptive 21-point Gauss-Kronrod integration over [b0, b1] u [b1, b2] u ...
///
/// \p breakpoints must be sorted; each consecutive pair is an initial interval, so
/// kinks and discontinuities of the integrand belong there. The interval with the
/// largest error estimate is bisected until the summed estimate meets
/// max(abs_tol, rel_tol * |value|). Throws NumericalError when max_subdivisions
/// bisections are not enough.
QuadratureResult integrate(const std::function<double(double)> &f, std::span<const double> breakpoints,
                           const QuadratureOptions &options = {});

} // namespace v2vrel

#endif
