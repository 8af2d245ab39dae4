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
#include "v2vrel/meta.hpp"
#include "v2vrel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace v2vrel
{

EmpiricalMeta::EmpiricalMeta(std::vector<double> samples, double beta_db)
    : samples_(std::move(samples)), beta_db_(beta_db)
{
    for (double x : samples_)
        if (!(x >= 0.0 && x <= 1.0))
            throw DomainError("conditional success samples must lie in [0, 1]");
    sorted_ = samples_;
    std::sort(sorted_.begin(), sorted_.end());
}

SampleMoments sample_moments(std::span<const double> samples)
{
    if (samples.size() < 2)
        throw DomainError("moments need at least two samples");
    const double n = static_cast<double>(samples.size());
    double mean = 0.0;
    for (double x : samples)
        mean += x;
    mean /= n;
    double ss = 0.0;
    for (double x : samples)
        ss += (x - mean) * (x - mean);
    return {mean, ss / (n - 1.0)};
}

double empirical_meta_cdf(const EmpiricalMeta &meta, double p)
{
    if (meta.empty())
        throw DomainError("empirical meta distribution has no samples");
    const auto sorted = meta.sorted();
    const auto first = std::lower_bound(sorted.begin(), sorted.end(), p);
    return static_cast<double>(sorted.end() - first) / static_cast<double>(sorted.size());
}

BetaParams fit_beta_moments(const SampleMoments &moments)
{
    const double m = moments.mean;
    const double v = moments.variance;
    if (!(m > 0.0 && m < 1.0))
        throw FitError(FitError::Kind::Degenerate, "sample mean " + std::to_string(m) + " is not inside (0, 1)");
    if (!(v > 0.0))
        throw FitError(FitError::Kind::Degenerate, "samples have zero variance");
    if (v >= m * (1.0 - m))
        throw FitError(FitError::Kind::InfeasibleMoments,
                       "variance " + std::to_string(v) +
                           " is not below mean * (1 - mean) = " + std::to_string(m * (1.0 - m)));
    const double odds = (1.0 - m) / m;
    const double a = m * (m * (1.0 - m) / v - 1.0);
    return {a, odds * a};
}

BetaParams fit_beta_moments(const EmpiricalMeta &meta)
{
    // Identical samples can leave a rounding-level variance behind; catch them exactly.
    if (meta.size() >= 2 && meta.sorted().front() == meta.sorted().back())
        throw FitError(FitError::Kind::Degenerate, "samples have zero variance");
    return fit_beta_moments(sample_moments(meta.samples()));
}

namespace
{

// Modified Lentz evaluation of the continued fraction for I_x(a, b).
double beta_continued_fraction(double a, double b, double x)
{
    constexpr double tiny = 1e-300;
    constexpr double eps = 1e-12;
    constexpr int max_iterations = 10000;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < tiny)
        d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iterations; ++m)
    {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny)
            d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < tiny)
            d = tiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < eps)
            return h;
    }
    throw NumericalError("incomplete beta continued fraction did not converge for a=" + std::to_string(a) +
                         ", b=" + std::to_string(b) + ", x=" + std::to_string(x));
}

// x^a (1-x)^b / B(a, b)
double beta_front(double a, double b, double x)
{
    const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
    return std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta);
}

void check_shape(double a, double b)
{
    if (!(a > 0.0 && b > 0.0 && std::isfinite(a) && std::isfinite(b)))
        throw DomainError("Beta parameters must be finite and positive");
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x)
{
    check_shape(a, b);
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("incomplete beta argument must lie in [0, 1]");
    if (x == 0.0)
        return 0.0;
    if (x == 1.0)
        return 1.0;
    if (x < (a + 1.0) / (a + b + 2.0))
        return beta_front(a, b, x) * beta_continued_fraction(a, b, x) / a;
    return 1.0 - beta_front(b, a, 1.0 - x) * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double beta_cdf_complement(const BetaParams &params, double p)
{
    check_shape(params.a, params.b);
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("reliability threshold must lie in [0, 1]");
    if (p == 0.0)
        return 1.0;
    if (p == 1.0)
        return 0.0;
    // 1 - I_p(a, b) = I_{1-p}(b, a); evaluate whichever side converges directly.
    const double a = params.a;
    const double b = params.b;
    if (p < (a + 1.0) / (a + b + 2.0))
        return 1.0 - beta_front(a, b, p) * beta_continued_fraction(a, b, p) / a;
    return beta_front(b, a, 1.0 - p) * beta_continued_fraction(b, a, 1.0 - p) / b;
}

double bimodality_gap(const EmpiricalMeta &meta, double low, double high)
{
    if (meta.empty())
        throw DomainError("empirical meta distribution has no samples");
    if (!(low >= 0.0 && low < high && high <= 1.0))
        throw DomainError("outage interval must satisfy 0 <= low < high <= 1");
    std::size_t inside = 0;
    for (double x : meta.samples())
    {
        const double outage = 1.0 - x;
        if (outage >= low && outage <= high)
            ++inside;
    }
    return static_cast<double>(inside) / static_cast<double>(meta.size());
}

} // namespace v2vrel
