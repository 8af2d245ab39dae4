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
#include "v2vrel/channel.hpp"
#include "v2vrel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace v2vrel
{

std::string_view to_string(ChannelModel model) noexcept { return model == ChannelModel::Urban ? "urban" : "suburban"; }

std::string_view to_string(LinkClass link) noexcept
{
    switch (link)
    {
    case LinkClass::LOS:
        return "LOS";
    case LinkClass::WLOS:
        return "WLOS";
    case LinkClass::NLOS:
        return "NLOS";
    }
    return "?";
}

ChannelModel parse_channel_model(std::string_view text)
{
    if (text == "urban")
        return ChannelModel::Urban;
    if (text == "suburban")
        return ChannelModel::Suburban;
    throw DomainError("unknown channel model '" + std::string(text) + "' (expected urban or suburban)");
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double ChannelParams::los_coefficient_db(double alpha) noexcept { return -37.86 + 10.0 * alpha; }

double ChannelParams::nlos_coefficient_db(double alpha, double breakpoint) noexcept
{
    return -38.32 + (7.0 + 10.0 * std::log10(breakpoint)) * alpha;
}

ChannelParams ChannelParams::reference(ChannelModel model)
{
    return reference(model, model == ChannelModel::Urban ? 1.68 : 2.0, 15.0);
}

ChannelParams ChannelParams::reference(ChannelModel model, double alpha, double breakpoint)
{
    ChannelParams p;
    p.model = model;
    p.alpha = alpha;
    p.breakpoint = breakpoint;
    p.a0_db = los_coefficient_db(alpha);
    p.a0_prime_db = nlos_coefficient_db(alpha, breakpoint);
    return p;
}

void ChannelParams::validate() const
{
    if (!(std::isfinite(alpha) && alpha > 1.0))
        throw DomainError("path loss exponent must exceed 1");
    if (!(std::isfinite(breakpoint) && breakpoint > 0.0))
        throw DomainError("breakpoint distance must be positive");
    if (!std::isfinite(a0_db) || !std::isfinite(a0_prime_db))
        throw DomainError("path loss coefficients must be finite");
}

LinkClass classify_link(const Position &tx, const Position &rx, const ChannelParams &params)
{
    if (tx == rx)
        throw DomainError("transmitter coincides with receiver");
    if (tx.canonical().road == Road::Horizontal)
        return LinkClass::LOS;
    return std::min(tx.norm(), rx.norm()) > params.breakpoint ? LinkClass::NLOS : LinkClass::WLOS;
}

Channel::Channel(const ChannelParams &params)
    : params_(params), a0_(db_to_linear(params.a0_db)), a0_prime_(db_to_linear(params.a0_prime_db))
{
    params_.validate();
}

double Channel::path_loss(const Position &tx, const Position &rx) const
{
    if (tx == rx)
        throw DomainError("path loss undefined for coincident transmitter and receiver");
    if (params_.model == ChannelModel::Urban && rx.canonical().road != Road::Horizontal)
        throw DomainError("urban path loss requires the receiver on the horizontal road");
    return path_loss_unchecked(tx, rx);
}

double Channel::path_loss_unchecked(const Position &tx, const Position &rx) const noexcept
{
    const double alpha = params_.alpha;
    if (params_.model == ChannelModel::Suburban || tx.road == Road::Horizontal || tx.offset == 0.0)
    {
        const double d = euclidean_distance(tx, rx);
        if (d == 0.0)
            return std::numeric_limits<double>::infinity();
        return a0_ * std::pow(d, -alpha);
    }

    const double t = tx.norm();
    const double r = rx.norm();
    if (std::min(t, r) > params_.breakpoint)
        return a0_prime_ * std::pow(t * r, -alpha);
    return a0_ * std::pow(t + r, -alpha);
}

double sample_fading(RandomStream &rng)
{
    std::exponential_distribution<double> exp1(1.0);
    return exp1(rng);
}

} // namespace v2vrel
