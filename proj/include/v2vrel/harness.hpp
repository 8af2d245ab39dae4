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
#ifndef V2VREL_HARNESS_HPP
#define V2VREL_HARNESS_HPP

#include "v2vrel/analytic.hpp"
#include "v2vrel/meta.hpp"
#include "v2vrel/scenario.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace v2vrel
{

// Substream domains; a realization's stream is (seed, domain, index, realization).
enum class StreamDomain : std::uint64_t
{
    Sweep = 1,
    Meta = 2,
    ValidationFading = 3,
    ValidationMean = 4,
    ValidationLaplace = 5,
};

struct SweepGrid
{
    double min = 1.0;
    double step = 1.0;
    double max = 140.0;

    // Parses "min:step:max".
    static SweepGrid parse(std::string_view text);
    // Throws DomainError unless 1 <= min < max <= d_max and step > 0.
    void validate(double d_max) const;
    // min, min + step, ... up to max (inclusive within 1e-9).
    std::vector<double> points() const;
};

struct RunOptions
{
    std::uint64_t realizations = 10000;
    std::uint64_t seed = 1;
    unsigned threads = 0; // 0: hardware concurrency
};

struct SweepPoint
{
    double separation = 0.0;
    Position tx;
    LinkClass link = LinkClass::LOS;
    AverageReliability analytic;
    double empirical_mean = 0.0;
    double meta_at_average = 0.0; // fraction of samples >= analytic average
    std::vector<double> samples;  // conditional success, indexed by realization id
};

struct SweepResult
{
    Scenario scenario;
    std::uint64_t seed = 0;
    std::vector<SweepPoint> points;
};

/// For every grid separation: TX on the reference trajectory, analytic average,
/// and closed-form conditional success over n realizations. Results do not depend
/// on the worker count.
SweepResult run_separation_sweep(const Scenario &scenario, const SweepGrid &grid, const RunOptions &options);

struct MetaStudy
{
    double separation = 0.0;
    Position tx;
    AverageReliability analytic;
    EmpiricalMeta meta;
    std::optional<BetaParams> fit;
    std::string fit_error; // set when fit is empty
};

// Meta distribution at one separation. A failed Beta fit is reported, not thrown.
MetaStudy run_meta_study(const Scenario &scenario, double separation, const RunOptions &options);

struct ValidationCheck
{
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport
{
    std::vector<ValidationCheck> checks;

    bool passed() const noexcept;
    std::string to_text() const;
};

struct ValidationOptions
{
    std::uint64_t realizations = 100;
    std::uint64_t fading = 10000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    // Channel used by the analytic side only; set it to inject a fault.
    std::optional<ChannelParams> analytic_channel;
};

/// Cross-checks closed form against fading Monte Carlo, the empirical mean against
/// the analytic average, each Laplace factor against its Monte Carlo estimate, and
/// that the design position is the worst point of the d_target contour.
ValidationReport run_validation(const Scenario &scenario, const ValidationOptions &options);

// Scenario with p_I solved when the config asks for "auto".
Scenario materialize(const ScenarioConfig &config);

// Evenly strided subset of [0, n) with at most limit entries.
std::vector<std::size_t> scatter_selection(std::size_t n, std::size_t limit);

} // namespace v2vrel

#endif
