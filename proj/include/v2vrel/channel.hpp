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

#ifndef V2VREL_CHANNEL_HPP
#define V2VREL_CHANNEL_HPP

#include "v2vrel/geometry.hpp"
#include "v2vrel/random.hpp"

#include <string_view>

namespace v2vrel
{

enum class ChannelModel
{
    Suburban,
    Urban,
};

enum class LinkClass
{
    LOS,
    WLOS,
    NLOS,
};

std::string_view to_string(ChannelModel model) noexcept;
std::string_view to_string(LinkClass link) noexcept;
ChannelModel parse_channel_model(std::string_view text);

/// Deterministic path-loss parameters. Coefficients are gains in dB.
struct ChannelParams
{
    ChannelModel model = ChannelModel::Urban;
    double alpha = 1.68;        // path loss exponent, > 1
    double a0_db = -21.06;      // LOS / WLOS coefficient
    double a0_prime_db = -6.80; // NLOS coefficient (urban only)
    double breakpoint = 15.0;   // meters
    double frequency_hz = 5.9e9;
    double ref_distance = 10.0; // meters; carried, not used by the model

    // Reference parameters at 5.9 GHz with the coefficient formulas
    // A0 = -37.86 + 10 alpha and A0' = -38.32 + (7 + 10 log10 breakpoint) alpha.
    static ChannelParams reference(ChannelModel model);
    static ChannelParams reference(ChannelModel model, double alpha, double breakpoint);

    static double los_coefficient_db(double alpha) noexcept;
    static double nlos_coefficient_db(double alpha, double breakpoint) noexcept;

    void validate() const;
};

// Which path-loss case applies to a transmitter at tx seen from a receiver on the
// horizontal road. Throws DomainError when tx == rx.
LinkClass classify_link(const Position &tx, const Position &rx, const ChannelParams &params);

/// Path-loss evaluator with coefficients converted to linear gain once.
class Channel
{
  public:
    explicit Channel(const ChannelParams &params);

    const ChannelParams &params() const noexcept { return params_; }
    double los_gain() const noexcept { return a0_; }
    double nlos_gain() const noexcept { return a0_prime_; }

    /// Linear path-loss gain from tx to rx. Urban requires rx on the horizontal road.
    /// Throws DomainError when tx == rx.
    double path_loss(const Position &tx, const Position &rx) const;

    // Same as path_loss without the coincidence check; returns +inf at tx == rx.
    double path_loss_unchecked(const Position &tx, const Position &rx) const noexcept;

  private:
    ChannelParams params_;
    double a0_;
    double a0_prime_;
};

double db_to_linear(double db) noexcept;

// Unit-mean exponential power gain (Rayleigh amplitude).
double sample_fading(RandomStream &rng);

} // namespace v2vrel

#endif
