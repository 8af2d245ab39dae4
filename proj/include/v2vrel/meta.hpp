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
#ifndef V2VREL_META_HPP
#define V2VREL_META_HPP

#include <span>
#include <vector>

namespace v2vrel
{

/// Conditional success probabilities, one per interferer realization.
class EmpiricalMeta
{
  public:
    EmpiricalMeta() = default;
    // Throws DomainError if a sample lies outside [0, 1] or is NaN.
    EmpiricalMeta(std::vector<double> samples, double beta_db);

    std::span<const double> samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }
    double beta_db() const noexcept { return beta_db_; }

    // Ascending copy, for counting.
    std::span<const double> sorted() const noexcept { return sorted_; }

  private:
    std::vector<double> samples_;
    std::vector<double> sorted_;
    double beta_db_ = 0.0;
};

struct BetaParams
{
    double a = 1.0;
    double b = 1.0;

    double mean() const noexcept { return a / (a + b); }
    double variance() const noexcept { return a * b / ((a + b) * (a + b) * (a + b + 1.0)); }
};

struct SampleMoments
{
    double mean;
    double variance; // unbiased, N - 1 denominator
};

SampleMoments sample_moments(std::span<const double> samples);

// Fraction of samples >= p.
double empirical_meta_cdf(const EmpiricalMeta &meta, double p);

/// Method-of-moments Beta fit:
///   a = m (m (1 - m) / v - 1),   b = a (1 - m) / m.
/// Throws FitError (Degenerate) for v = 0 or m in {0, 1}, (InfeasibleMoments) for
/// v >= m (1 - m), and DomainError for fewer than two samples.
BetaParams fit_beta_moments(const EmpiricalMeta &meta);
BetaParams fit_beta_moments(const SampleMoments &moments);

// Regularized incomplete beta I_x(a, b), continued fraction to 1e-12 relative.
double regularized_incomplete_beta(double a, double b, double x);

// 1 - I_p(a, b): Beta approximation of the fraction of realizations with success >= p.
double beta_cdf_complement(const BetaParams &params, double p);

/// Fraction of samples whose conditional outage 1 - x lies in [low, high]. Close to
/// zero over a decade-wide interval means the meta distribution is flat there.
double bimodality_gap(const EmpiricalMeta &meta, double low, double high);

} // namespace v2vrel

#endif
