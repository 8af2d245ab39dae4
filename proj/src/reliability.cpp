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
#include "v2vrel/reliability.hpp"
#include "v2vrel/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace v2vrel
{

double RadioParams::threshold() const noexcept { return db_to_linear(beta_db); }

double RadioParams::noise_to_power() const noexcept { return db_to_linear(n0_dbm - p0_dbm); }

void RadioParams::validate() const
{
    if (!std::isfinite(p0_dbm) || !std::isfinite(n0_dbm) || !std::isfinite(beta_db))
        throw DomainError("radio parameters must be finite");
}

ConditionalReliability::ConditionalReliability(double value) : value_(value)
{
    if (!(value >= 0.0 && value <= 1.0))
        throw DomainError("conditional reliability must lie in [0, 1]");
}

double normalized_interference(const Realization &realization, const Position &rx, const Channel &channel,
                               std::span<const double> fading)
{
    if (fading.size() != realization.size())
        throw DomainError("fading list has " + std::to_string(fading.size()) + " entries for " +
                          std::to_string(realization.size()) + " interferers");
    double sum = 0.0;
    std::size_t i = 0;
    realization.for_each([&](const Position &p) {
        const double h = fading[i++];
        if (!(h >= 0.0))
            throw DomainError("fading gains must be non-negative");
        sum += h * channel.path_loss_unchecked(p, rx);
    });
    return sum;
}

double sinr(const Position &tx, const Position &rx, const Realization &realization, const Channel &channel,
            const RadioParams &radio, double tx_fading, std::span<const double> interferer_fading)
{
    const double signal = tx_fading * channel.path_loss(tx, rx);
    const double interference = normalized_interference(realization, rx, channel, interferer_fading);
    return signal / (interference + radio.noise_to_power());
}

double sinr_sample(const Position &tx, const Position &rx, const Realization &realization, const Channel &channel,
                   const RadioParams &radio, RandomStream &rng)
{
    const double tx_fading = sample_fading(rng);
    std::vector<double> fading(realization.size());
    for (auto &h : fading)
        h = sample_fading(rng);
    return sinr(tx, rx, realization, channel, radio, tx_fading, fading);
}

SuccessEvaluator::SuccessEvaluator(const Channel &channel, const RadioParams &radio, const Position &tx,
                                   const Position &rx)
    : channel_(&channel), tx_(tx), rx_(rx), beta_prime_(radio.threshold() / channel.path_loss(tx, rx)),
      noise_factor_(std::exp(-beta_prime_ * radio.noise_to_power()))
{}

double SuccessEvaluator::operator()(const Realization &realization) const
{
    if (realization.size() > kLogSpaceThreshold)
    {
        double log_sum = 0.0;
        realization.for_each(
            [&](const Position &p) { log_sum += std::log1p(beta_prime_ * channel_->path_loss_unchecked(p, rx_)); });
        return noise_factor_ * std::exp(-log_sum);
    }
    double product = noise_factor_;
    realization.for_each(
        [&](const Position &p) { product /= 1.0 + beta_prime_ * channel_->path_loss_unchecked(p, rx_); });
    return product;
}

ConditionalReliability conditional_success_closed_form(const Position &tx, const Position &rx,
                                                       const Realization &realization, const Channel &channel,
                                                       const RadioParams &radio)
{
    return ConditionalReliability(SuccessEvaluator(channel, radio, tx, rx)(realization));
}

ConditionalReliability conditional_success_mc(const Position &tx, const Position &rx, const Realization &realization,
                                              const Channel &channel, const RadioParams &radio, std::uint64_t n_fading,
                                              RandomStream &rng)
{
    if (n_fading == 0)
        throw DomainError("fading sample count must be at least 1");

    // Path losses are fixed for the realization; only the marks are redrawn.
    const double signal_gain = channel.path_loss(tx, rx);
    std::vector<double> gains;
    gains.reserve(realization.size());
    realization.for_each([&](const Position &p) { gains.push_back(channel.path_loss_unchecked(p, rx)); });

    const double beta = radio.threshold();
    const double noise = radio.noise_to_power();
    std::uint64_t hits = 0;
    for (std::uint64_t k = 0; k < n_fading; ++k)
    {
        const double signal = sample_fading(rng) * signal_gain;
        double interference = 0.0;
        for (double g : gains)
            interference += sample_fading(rng) * g;
        if (signal / (interference + noise) >= beta)
            ++hits;
    }
    return ConditionalReliability(static_cast<double>(hits) / static_cast<double>(n_fading));
}

} // namespace v2vrel
