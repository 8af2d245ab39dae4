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
#include "v2vrel/analytic.hpp"
#include "v2vrel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace v2vrel
{

QuadratureResult interference_integral(Road road, const Channel &channel, double beta_prime, const Position &rx,
                                       const RoadExtent &extent, const QuadratureOptions &options)
{
    const double half = extent.half_length(road);
    std::vector<double> cuts = {-half, 0.0, half};
    if (road == Road::Horizontal)
        cuts.push_back(rx.x());
    if (road == Road::Vertical && channel.params().model == ChannelModel::Urban)
    {
        cuts.push_back(-channel.params().breakpoint);
        cuts.push_back(channel.params().breakpoint);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.erase(std::remove_if(cuts.begin(), cuts.end(), [&](double c) { return c < -half || c > half; }), cuts.end());

    const auto integrand = [&](double u) {
        const double gain = channel.path_loss_unchecked(Position{road, u}, rx);
        if (!std::isfinite(gain))
            return 1.0;
        const double t = beta_prime * gain;
        return t / (1.0 + t);
    };
    // The integral only enters as exp(-p_I lambda J). An absolute floor of 1e-13 m
    // moves that exponent by < 1e-15 and stops nearly silent links (b -> 0) from
    // chasing the receiver spike, whose width shrinks with b, below rounding.
    QuadratureOptions opts = options;
    opts.abs_tol = std::max(opts.abs_tol, 1e-13);
    return integrate(integrand, cuts, opts);
}

namespace
{

double effective_threshold(const Channel &channel, const Scenario &scenario, const Position &tx)
{
    return scenario.radio.threshold() / channel.path_loss(tx, scenario.rx);
}

double laplace_from_integral(double intensity, double integral) { return std::exp(-intensity * integral); }

} // namespace

double laplace_factor(Road road, const Position &tx, const Scenario &scenario, const QuadratureOptions &options)
{
    const Channel channel(scenario.channel);
    const double beta_prime = effective_threshold(channel, scenario, tx);
    const double intensity = scenario.traffic.p_transmit * scenario.traffic.lambda(road);
    if (intensity == 0.0)
        return 1.0;
    const auto integral = interference_integral(road, channel, beta_prime, scenario.rx, scenario.extent, options);
    return laplace_from_integral(intensity, integral.value);
}

AverageReliability average_success(const Position &tx, const Scenario &scenario, const QuadratureOptions &options)
{
    AverageReliability out;
    const Channel channel(scenario.channel);
    const double beta_prime = effective_threshold(channel, scenario, tx);
    out.noise_factor = std::exp(-beta_prime * scenario.radio.noise_to_power());

    for (Road road : {Road::Horizontal, Road::Vertical})
    {
        const double intensity = scenario.traffic.p_transmit * scenario.traffic.lambda(road);
        double factor = 1.0;
        if (intensity > 0.0)
            factor = laplace_from_integral(
                intensity,
                interference_integral(road, channel, beta_prime, scenario.rx, scenario.extent, options).value);
        (road == Road::Horizontal ? out.laplace_x : out.laplace_y) = factor;
    }
    out.value = out.noise_factor * out.laplace_x * out.laplace_y;
    return out;
}

OptimalTransmitProbability solve_optimal_pi(const DesignSpec &design, const Scenario &scenario)
{
    design.validate(scenario.rx);
    const Channel channel(scenario.channel);
    const double beta_prime = effective_threshold(channel, scenario, design.tx_at_target);
    const double noise_factor = std::exp(-beta_prime * scenario.radio.noise_to_power());

    // Exponent per unit transmit probability.
    double slope = 0.0;
    for (Road road : {Road::Horizontal, Road::Vertical})
    {
        const double lambda = scenario.traffic.lambda(road);
        if (lambda > 0.0)
            slope += lambda * interference_integral(road, channel, beta_prime, scenario.rx, scenario.extent).value;
    }
    const auto success = [&](double p) { return noise_factor * std::exp(-p * slope); };

    if (!(noise_factor > design.target))
        return {0.0, PiStatus::Infeasible, noise_factor};
    if (success(1.0) >= design.target)
        return {1.0, PiStatus::Unconstrained, success(1.0)};

    double lo = 0.0;
    double hi = 1.0;
    for (int i = 0; i < 40; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        (success(mid) >= design.target ? lo : hi) = mid;
    }
    return {lo, PiStatus::Constrained, success(lo)};
}

} // namespace v2vrel
