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
#include "v2vrel/harness.hpp"
#include "v2vrel/errors.hpp"
#include "v2vrel/report.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace v2vrel
{

SweepGrid SweepGrid::parse(std::string_view text)
{
    const auto first = text.find(':');
    const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
    if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos)
        throw DomainError("separation grid must be written min:step:max");
    auto number = [&](std::string_view part) {
        try
        {
            std::size_t used = 0;
            const std::string s(part);
            const double v = std::stod(s, &used);
            if (used != s.size())
                throw DomainError("");
            return v;
        }
        catch (...)
        {
            throw DomainError("separation grid '" + std::string(text) + "' has a non-numeric field");
        }
    };
    return {number(text.substr(0, first)), number(text.substr(first + 1, second - first - 1)),
            number(text.substr(second + 1))};
}

void SweepGrid::validate(double d_max) const
{
    if (!(min >= 1.0 && min < max && max <= d_max))
        throw DomainError("separation range must satisfy 1 <= min < max <= d_max");
    if (!(step > 0.0))
        throw DomainError("separation step must be positive");
}

std::vector<double> SweepGrid::points() const
{
    std::vector<double> out;
    for (std::size_t k = 0;; ++k)
    {
        const double s = min + static_cast<double>(k) * step;
        if (s > max + 1e-9)
            break;
        out.push_back(std::min(s, max));
    }
    return out;
}

namespace
{

double mean_of(std::span<const double> xs)
{
    double sum = 0.0;
    for (double x : xs)
        sum += x;
    return sum / static_cast<double>(xs.size());
}

double fraction_at_least(std::span<const double> xs, double threshold)
{
    const auto count = std::count_if(xs.begin(), xs.end(), [&](double x) { return x >= threshold; });
    return static_cast<double>(count) / static_cast<double>(xs.size());
}

std::vector<double> sample_conditional_success(const Scenario &scenario, const SuccessEvaluator &evaluator,
                                               StreamDomain domain, std::uint64_t index, const RunOptions &options)
{
    std::vector<double> samples(options.realizations);
    detail::parallel_for(samples.size(), options.threads, [&](std::size_t i) {
        auto rng = RandomStream::substream(options.seed, static_cast<std::uint64_t>(domain), index, i);
        samples[i] = evaluator(sample_realization(scenario.extent, scenario.traffic, rng));
    });
    return samples;
}

} // namespace

SweepResult run_separation_sweep(const Scenario &scenario, const SweepGrid &grid, const RunOptions &options)
{
    scenario.validate();
    grid.validate(scenario.design.d_max);
    if (options.realizations == 0)
        throw DomainError("realization count must be at least 1");

    const Channel channel(scenario.channel);
    const auto separations = grid.points();

    SweepResult result;
    result.scenario = scenario;
    result.seed = options.seed;
    result.points.resize(separations.size());

    std::vector<SuccessEvaluator> evaluators;
    evaluators.reserve(separations.size());
    for (std::size_t k = 0; k < separations.size(); ++k)
    {
        auto &pt = result.points[k];
        pt.separation = separations[k];
        pt.tx = tx_position_at_separation(pt.separation, scenario.rx, scenario.design.d_max);
        pt.link = classify_link(pt.tx, scenario.rx, scenario.channel);
        evaluators.emplace_back(channel, scenario.radio, pt.tx, scenario.rx);
        pt.samples.resize(options.realizations);
    }

    // One flat index space over (separation, realization) keeps all workers busy.
    const std::size_t n = options.realizations;
    detail::parallel_for(separations.size() * n, options.threads, [&](std::size_t flat) {
        const std::size_t k = flat / n;
        const std::size_t i = flat % n;
        auto rng = RandomStream::substream(options.seed, static_cast<std::uint64_t>(StreamDomain::Sweep), k, i);
        result.points[k].samples[i] = evaluators[k](sample_realization(scenario.extent, scenario.traffic, rng));
    });
    detail::parallel_for(separations.size(), options.threads, [&](std::size_t k) {
        auto &pt = result.points[k];
        pt.analytic = average_success(pt.tx, scenario);
        pt.empirical_mean = mean_of(pt.samples);
        pt.meta_at_average = fraction_at_least(pt.samples, pt.analytic.value);
    });
    return result;
}

MetaStudy run_meta_study(const Scenario &scenario, double separation, const RunOptions &options)
{
    scenario.validate();
    if (options.realizations < 2)
        throw DomainError("meta study needs at least two realizations");
    if (!(separation >= 1.0))
        throw DomainError("meta study separation must be at least 1 m");

    MetaStudy study;
    study.separation = separation;
    study.tx = tx_position_at_separation(separation, scenario.rx, scenario.design.d_max);
    study.analytic = average_success(study.tx, scenario);

    const Channel channel(scenario.channel);
    const SuccessEvaluator evaluator(channel, scenario.radio, study.tx, scenario.rx);
    study.meta = EmpiricalMeta(sample_conditional_success(scenario, evaluator, StreamDomain::Meta, 0, options),
                               scenario.radio.beta_db);
    try
    {
        study.fit = fit_beta_moments(study.meta);
    }
    catch (const FitError &e)
    {
        study.fit_error = e.what();
    }
    return study;
}

// ---------------------------------------------------------------------------

bool ValidationReport::passed() const noexcept
{
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck &c) { return c.passed; });
}

std::string ValidationReport::to_text() const
{
    std::ostringstream out;
    for (const auto &c : checks)
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    out << "overall: " << (passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

namespace
{

struct MeanAndError
{
    double mean;
    double standard_error;
};

MeanAndError mean_and_error(std::span<const double> xs)
{
    const double m = mean_of(xs);
    double ss = 0.0;
    for (double x : xs)
        ss += (x - m) * (x - m);
    const double n = static_cast<double>(xs.size());
    return {m, std::sqrt(ss / (n - 1.0) / n)};
}

ValidationCheck agreement_check(std::string name, const MeanAndError &mc, double analytic)
{
    const double tol = 3.0 * mc.standard_error + 1e-12;
    const double diff = std::abs(mc.mean - analytic);
    return {std::move(name), diff <= tol,
            "monte_carlo=" + format_real(mc.mean) + " analytic=" + format_real(analytic) +
                " diff=" + format_real(diff) + " tol=" + format_real(tol)};
}

} // namespace

ValidationReport run_validation(const Scenario &scenario, const ValidationOptions &options)
{
    scenario.validate();
    if (options.realizations < 10)
        throw DomainError("validation needs at least 10 realizations");
    if (options.fading < 100)
        throw DomainError("validation needs at least 100 fading draws");

    Scenario analytic_scenario = scenario;
    if (options.analytic_channel)
        analytic_scenario.channel = *options.analytic_channel;

    const Channel channel(scenario.channel);
    const std::size_t n = options.realizations;
    ValidationReport report;

    // Closed form vs fading Monte Carlo on random (separation, realization) pairs.
    {
        std::vector<char> agree(n);
        detail::parallel_for(n, options.threads, [&](std::size_t k) {
            auto rng =
                RandomStream::substream(options.seed, static_cast<std::uint64_t>(StreamDomain::ValidationFading), k);
            std::uniform_real_distribution<double> pick(1.0, scenario.design.d_max);
            const Position tx = tx_position_at_separation(pick(rng), scenario.rx, scenario.design.d_max);
            const Realization r = sample_realization(scenario.extent, scenario.traffic, rng);
            const double exact = conditional_success_closed_form(tx, scenario.rx, r, channel, scenario.radio).value();
            const double mc =
                conditional_success_mc(tx, scenario.rx, r, channel, scenario.radio, options.fading, rng).value();
            const double nf = static_cast<double>(options.fading);
            const double tol = 3.0 * std::sqrt(exact * (1.0 - exact) / nf) + 0.5 / nf;
            agree[k] = std::abs(mc - exact) <= tol;
        });
        const auto passed = static_cast<std::size_t>(std::count(agree.begin(), agree.end(), 1));
        const std::size_t allowed = n / 100;
        report.checks.push_back({"closed_form_vs_fading_mc", n - passed <= allowed,
                                 std::to_string(passed) + "/" + std::to_string(n) + " within 3 sigma (" +
                                     std::to_string(options.fading) + " fading draws each)"});
    }

    const Position &tx = scenario.design.tx_at_target;

    // First moment: mean of conditional success vs analytic average.
    {
        const SuccessEvaluator evaluator(channel, scenario.radio, tx, scenario.rx);
        const RunOptions run{options.realizations, options.seed, options.threads};
        const auto samples = sample_conditional_success(scenario, evaluator, StreamDomain::ValidationMean, 0, run);
        report.checks.push_back(agreement_check("empirical_mean_vs_analytic", mean_and_error(samples),
                                                average_success(tx, analytic_scenario).value));
    }

    // Each Laplace factor vs the mean of exp(-b I) with sampled fading on that road alone.
    {
        const double beta_prime = scenario.radio.threshold() / channel.path_loss(tx, scenario.rx);
        for (Road road : {Road::Horizontal, Road::Vertical})
        {
            std::vector<double> values(n);
            detail::parallel_for(n, options.threads, [&](std::size_t k) {
                auto rng =
                    RandomStream::substream(options.seed, static_cast<std::uint64_t>(StreamDomain::ValidationLaplace),
                                            static_cast<std::uint64_t>(road), k);
                const Realization r = sample_road(road, scenario.extent, scenario.traffic, rng);
                std::vector<double> fading(r.size());
                for (auto &h : fading)
                    h = sample_fading(rng);
                values[k] = std::exp(-beta_prime * normalized_interference(r, scenario.rx, channel, fading));
            });
            report.checks.push_back(agreement_check(road == Road::Horizontal ? "laplace_x_vs_mc" : "laplace_y_vs_mc",
                                                    mean_and_error(values),
                                                    laplace_factor(road, tx, analytic_scenario)));
        }
    }

    // The design position should be the weakest point of the d_target contour.
    {
        std::vector<Position> contour;
        const double d = scenario.design.d_target;
        for (double x : {scenario.rx.x() - d, scenario.rx.x() + d})
            if (std::abs(x) <= scenario.extent.half_x && std::abs(x) > 0.0)
                contour.push_back(Position::horizontal(x));
        const double up = d - scenario.rx.norm();
        if (up >= 0.0)
            for (double y : {-up, up})
                if (std::abs(y) <= scenario.extent.half_y)
                    contour.push_back(Position::vertical(y).canonical());

        const double at_design = average_success(tx, analytic_scenario).value;
        Position worst = tx;
        double worst_value = at_design;
        for (const auto &p : contour)
        {
            const double v = average_success(p, analytic_scenario).value;
            if (v < worst_value)
            {
                worst_value = v;
                worst = p;
            }
        }
        const bool ok = at_design <= worst_value + 1e-12;
        std::string where = std::string(worst.road == Road::Horizontal ? "H" : "V") + ":" + format_real(worst.offset);
        report.checks.push_back(
            {"design_position_is_contour_minimum", ok,
             "design=" + format_real(at_design) + " contour_min=" + format_real(worst_value) + " at " + where});
    }
    return report;
}

Scenario materialize(const ScenarioConfig &config)
{
    auto resolved = config.resolve();
    if (resolved.auto_transmit)
    {
        const auto pi = solve_optimal_pi(resolved.scenario.design, resolved.scenario);
        if (pi.status == PiStatus::Infeasible)
            throw InfeasibleError("target " + format_real(resolved.scenario.design.target) +
                                  " not reachable even without interference (noise-only success " +
                                  format_real(pi.achieved) + ")");
        resolved.scenario.traffic.p_transmit = pi.value;
    }
    return resolved.scenario;
}

std::vector<std::size_t> scatter_selection(std::size_t n, std::size_t limit)
{
    std::vector<std::size_t> out;
    if (n <= limit)
    {
        out.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = i;
        return out;
    }
    out.reserve(limit);
    for (std::size_t k = 0; k < limit; ++k)
        out.push_back(k * n / limit);
    return out;
}

} // namespace v2vrel
