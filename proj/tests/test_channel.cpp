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

#include "doctest.h"
#include "support.hpp"
#include "v2vrel/channel.hpp"
#include "v2vrel/errors.hpp"

#include <cmath>
#include <vector>

using namespace v2vrel;
using testing::rel_close;

namespace
{
const Position kRx = Position::horizontal(-50);
}

TEST_SUITE("channel")
{
    TEST_CASE("reference coefficients")
    {
        CHECK(ChannelParams::los_coefficient_db(1.68) == doctest::Approx(-21.06).epsilon(1e-12));
        CHECK(ChannelParams::los_coefficient_db(2.0) == doctest::Approx(-17.86).epsilon(1e-12));
        CHECK(ChannelParams::nlos_coefficient_db(1.68, 15) == doctest::Approx(-6.80166685).epsilon(1e-8));
        const auto urban = ChannelParams::reference(ChannelModel::Urban);
        CHECK(urban.alpha == 1.68);
        CHECK(urban.breakpoint == 15.0);
        CHECK(ChannelParams::reference(ChannelModel::Suburban).alpha == 2.0);
    }

    TEST_CASE("link classification examples")
    {
        const auto p = ChannelParams::reference(ChannelModel::Urban);
        CHECK(classify_link(Position::vertical(16), kRx, p) == LinkClass::NLOS);
        CHECK(classify_link(Position::vertical(15), kRx, p) == LinkClass::WLOS);
        CHECK(classify_link(Position::vertical(-90), kRx, p) == LinkClass::NLOS);
        CHECK(classify_link(Position::horizontal(30), kRx, p) == LinkClass::LOS);
        CHECK(classify_link(Position::horizontal(0), kRx, p) == LinkClass::LOS);
        // Receiver within the breakpoint of the junction: every vertical TX is WLOS.
        CHECK(classify_link(Position::vertical(150), Position::horizontal(-10), p) == LinkClass::WLOS);
        CHECK_THROWS_AS(classify_link(kRx, kRx, p), DomainError);
        // The classification is geometric; the suburban model just ignores it.
        const auto s = ChannelParams::reference(ChannelModel::Suburban);
        CHECK(classify_link(Position::vertical(90), kRx, s) == LinkClass::NLOS);
    }

    TEST_CASE("path loss examples")
    {
        const Channel urban(ChannelParams::reference(ChannelModel::Urban));
        const Channel suburban(ChannelParams::reference(ChannelModel::Suburban));
        CHECK(rel_close(suburban.path_loss(Position::horizontal(50), kRx), 1.6368165214278086e-06, 1e-12));
        CHECK(rel_close(urban.path_loss(Position::vertical(90), kRx), 1.522075838742024e-07, 1e-12));
        CHECK(rel_close(urban.path_loss(Position::vertical(15), kRx), 7.051890512615829e-06, 1e-12));
        CHECK_THROWS_AS(urban.path_loss(kRx, kRx), DomainError);
        CHECK_THROWS_AS(urban.path_loss(Position::horizontal(3), Position::vertical(-40)), DomainError);
        CHECK(std::isinf(urban.path_loss_unchecked(kRx, kRx)));
    }

    TEST_CASE("urban LOS equals the suburban power law with the same coefficients")
    {
        ChannelParams u = ChannelParams::reference(ChannelModel::Urban);
        ChannelParams s = u;
        s.model = ChannelModel::Suburban;
        const Channel cu(u), cs(s);
        for (double x : {-190.0, -49.0, -10.0, 0.0, 3.0, 120.0, 200.0})
            CHECK(cu.path_loss(Position::horizontal(x), kRx) == cs.path_loss(Position::horizontal(x), kRx));
    }

    TEST_CASE("discontinuity at the breakpoint")
    {
        const Channel c(ChannelParams::reference(ChannelModel::Urban));
        const double at = c.path_loss(Position::vertical(15), kRx);
        const double past = c.path_loss(Position::vertical(15 + 1e-9), kRx);
        CHECK(rel_close(past, 3.0883772459888575e-06, 1e-6));
        CHECK(at / past > 2.0);
    }

    TEST_CASE("property: NLOS and WLOS are symmetric in the two distances")
    {
        // Swapping |y_tx| and |x_rx| leaves the gain unchanged.
        const Channel c(ChannelParams::reference(ChannelModel::Urban));
        for (std::uint64_t k = 0; k < 1000; ++k)
        {
            auto rng = testing::case_stream(10, k);
            const double a = testing::uniform(rng, 0.5, 300), b = testing::uniform(rng, 0.5, 300);
            CHECK(rel_close(c.path_loss(Position::vertical(a), Position::horizontal(-b)),
                            c.path_loss(Position::vertical(b), Position::horizontal(-a)), 1e-13));
        }
    }

    TEST_CASE("property: gain strictly decreases with distance within each case")
    {
        const Channel c(ChannelParams::reference(ChannelModel::Urban));
        const Channel s(ChannelParams::reference(ChannelModel::Suburban));
        double prev_los = INFINITY, prev_wlos = INFINITY, prev_nlos = INFINITY, prev_sub = INFINITY;
        for (int i = 1; i <= 150; ++i)
        {
            const double los = c.path_loss(Position::horizontal(-50 + i), kRx);
            CHECK(los < prev_los);
            prev_los = los;
            const double sub = s.path_loss(Position::vertical(i), kRx);
            CHECK(sub < prev_sub);
            prev_sub = sub;
            if (i <= 15)
            {
                const double w = c.path_loss(Position::vertical(i), kRx);
                CHECK(w < prev_wlos);
                prev_wlos = w;
            }
            else
            {
                const double n = c.path_loss(Position::vertical(-i), kRx);
                CHECK(n < prev_nlos);
                prev_nlos = n;
            }
        }
    }

    TEST_CASE("fading is unit-mean exponential")
    {
        auto rng = RandomStream::substream(5, 0, 0);
        const std::size_t n = 1'000'000;
        double sum = 0, sum2 = 0;
        std::size_t tail = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double h = sample_fading(rng);
            REQUIRE(h >= 0.0);
            sum += h;
            sum2 += h * h;
            tail += h > 3.0;
        }
        const double mean = sum / n, var = sum2 / n - mean * mean;
        // Exp(1): mean 1, variance 1, fourth central moment 9.
        CHECK(std::abs(mean - 1.0) < 3.0 / std::sqrt(double(n)));
        CHECK(std::abs(var - 1.0) < 3.0 * std::sqrt(8.0 / n));
        const double q = std::exp(-3.0);
        CHECK(std::abs(double(tail) / n - q) < 3.0 * std::sqrt(q * (1 - q) / n));
    }

    TEST_CASE("parameter validation")
    {
        auto p = ChannelParams::reference(ChannelModel::Urban);
        p.alpha = 1.0;
        CHECK_THROWS_AS(p.validate(), DomainError);
        p = ChannelParams::reference(ChannelModel::Urban);
        p.breakpoint = -1;
        CHECK_THROWS_AS(p.validate(), DomainError);
        CHECK(parse_channel_model("suburban") == ChannelModel::Suburban);
        CHECK_THROWS(parse_channel_model("rural"));
    }
}
