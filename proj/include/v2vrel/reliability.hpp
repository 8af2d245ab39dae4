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
#ifndef V2VREL_RELIABILITY_HPP
#define V2VREL_RELIABILITY_HPP

#include "v2vrel/channel.hpp"
#include "v2vrel/traffic.hpp"

#include <cstdint>
#include <span>

namespace v2vrel
{

struct RadioParams
{
    double p0_dbm = 20.0;  // transmit power
    double n0_dbm = -99.0; // noise power
    double beta_db = 8.0;  // SINR threshold

    double threshold() const noexcept;      // beta, linear
    double noise_to_power() const noexcept; // gamma0 = N0 / P0, linear
    void validate() const;
};

/// P(SINR >= beta | interferers), averaged over fading only.
class ConditionalReliability
{
  public:
    constexpr ConditionalReliability() = default;
    explicit ConditionalReliability(double value);

    constexpr double value() const noexcept { return value_; }
    constexpr double outage() const noexcept { return 1.0 - value_; }

  private:
    double value_ = 1.0;
};

// Sum of fading * path loss over both roads; fading holds horizontal then vertical terms.
double normalized_interference(const Realization &realization, const Position &rx, const Channel &channel,
                               std::span<const double> fading);

// SINR for given fading gains (tx first, interferers in realization order).
double sinr(const Position &tx, const Position &rx, const Realization &realization, const Channel &channel,
            const RadioParams &radio, double tx_fading, std::span<const double> interferer_fading);

// SINR with fresh Exp(1) fading for every link.
double sinr_sample(const Position &tx, const Position &rx, const Realization &realization, const Channel &channel,
                   const RadioParams &radio, RandomStream &rng);

/// Closed-form conditional success for a fixed (tx, rx) pair,
///   p_c = exp(-b gamma0) * prod_i 1 / (1 + b * l(x_i)),   b = beta / l(tx).
/// Built once per link and applied to many realizations.
class SuccessEvaluator
{
  public:
    // Products over more than this many interferers are accumulated as a log-sum.
    static constexpr std::size_t kLogSpaceThreshold = 64;

    SuccessEvaluator(const Channel &channel, const RadioParams &radio, const Position &tx, const Position &rx);

    double effective_threshold() const noexcept { return beta_prime_; }
    double noise_factor() const noexcept { return noise_factor_; }
    const Position &tx() const noexcept { return tx_; }
    const Position &rx() const noexcept { return rx_; }

    double operator()(const Realization &realization) const;

  private:
    const Channel *channel_;
    Position tx_;
    Position rx_;
    double beta_prime_;
    double noise_factor_;
};

ConditionalReliability conditional_success_closed_form(const Position &tx, const Position &rx,
                                                       const Realization &realization, const Channel &channel,
                                                       const RadioParams &radio);

// Fraction of n_fading independent SINR draws meeting the threshold.
ConditionalReliability conditional_success_mc(const Position &tx, const Position &rx, const Realization &realization,
                                              const Channel &channel, const RadioParams &radio, std::uint64_t n_fading,
                                              RandomStream &rng);

} // namespace v2vrel

#endif
