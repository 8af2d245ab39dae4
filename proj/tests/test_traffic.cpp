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
#include "v2vrel/errors.hpp"
#include "v2vrel/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace v2vrel;

namespace
{
// Kolmogorov-Smirnov statistic of xs against U(lo, hi).
double ks_uniform(std::vector<double> xs, double lo, double hi)
{
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
    {
        const double f = (xs[i] - lo) / (hi - lo);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

struct CountStats
{
    double mean, var;
};

CountStats count_stats(const std::vector<double> &c)
{
    const double n = static_cast<double>(c.size());
    double s = 0, s2 = 0;
    for (double x : c)
    {
        s += x;
        s2 += x * x;
    }
    const double m = s / n;
    return {m, (s2 - n * m * m) / (n - 1)};
}
} // namespace

TEST_SUITE("traffic")
{
    TEST_CASE("expected counts examples")
    {
        const TrafficParams full{0.01, 0.01, 1.0};
        auto c = expected_count(RoadExtent{200, 200}, full);
        CHECK(c.horizontal == doctest::Approx(4.0));
        CHECK(c.vertical == doctest::Approx(4.0));
        c = expected_count(RoadExtent{200, 200}, TrafficParams{0.01, 0.01, 0.5});
        CHECK(c.horizontal == doctest::Approx(2.0));
        c = expected_count(RoadExtent{10000, 10000}, TrafficParams{0.01, 0.01, 0.0021});
        CHECK(c.horizontal == doctest::Approx(0.42));
        CHECK(c.vertical == doctest::Approx(0.42));
    }

    TEST_CASE("silent network has no interferers")
    {
        for (std::uint64_t i = 0; i < 1000; ++i)
        {
            auto rng = RandomStream::substream(1, 0, i);
            CHECK(sample_realization(RoadExtent{200, 200}, TrafficParams{0.01, 0.01, 0.0}, rng).empty());
        }
    }

    TEST_CASE("counts are Poisson: mean and variance")
    {
        struct Case
        {
            RoadExtent extent;
            TrafficParams traffic;
        };
        for (const Case &c : {Case{{200, 200}, {0.01, 0.01, 1.0}}, Case{{200, 200}, {0.01, 0.01, 0.013}},
                              Case{{10000, 10000}, {0.01, 0.01, 0.0021}}, Case{{300, 1000}, {0.02, 0.005, 0.3}}})
        {
            const std::size_t n = 100'000;
            std::vector<double> h(n), v(n);
            for (std::size_t i = 0; i < n; ++i)
            {
                auto rng = RandomStream::substream(2, 0, i);
                const auto r = sample_realization(c.extent, c.traffic, rng);
                h[i] = static_cast<double>(r.horizontal.size());
                v[i] = static_cast<double>(r.vertical.size());
            }
            const auto mu = expected_count(c.extent, c.traffic);
            for (auto [stats, m] : {std::pair{count_stats(h), mu.horizontal}, std::pair{count_stats(v), mu.vertical}})
            {
                // Var(sample mean) = mu/n; Var(sample variance) ~ (mu + 2 mu^2)/n.
                CHECK(std::abs(stats.mean - m) < 3.0 * std::sqrt(m / n));
                CHECK(std::abs(stats.var - m) < 3.0 * std::sqrt((m + 2 * m * m) / n));
            }
        }
    }

    TEST_CASE("positions are uniform on each road")
    {
        const RoadExtent extent{200, 500};
        const TrafficParams traffic{0.01, 0.01, 0.5};
        std::vector<double> xs, ys;
        for (std::uint64_t i = 0; i < 5000; ++i)
        {
            auto rng = RandomStream::substream(3, 0, i);
            const auto r = sample_realization(extent, traffic, rng);
            for (const auto &p : r.horizontal)
            {
                REQUIRE(p.road == Road::Horizontal);
                xs.push_back(p.offset);
            }
            for (const auto &p : r.vertical)
            {
                REQUIRE(p.road == Road::Vertical);
                ys.push_back(p.offset);
            }
        }
        // 1% critical value of the KS statistic.
        CHECK(ks_uniform(xs, -200, 200) < 1.628 / std::sqrt(double(xs.size())));
        CHECK(ks_uniform(ys, -500, 500) < 1.628 / std::sqrt(double(ys.size())));
    }

    TEST_CASE("direct thinned sampling matches thinning a full process")
    {
        // Sample PPP(lambda), keep each point with probability p, compare with the direct draw.
        const RoadExtent extent{200, 200};
        const double p = 0.3;
        const std::size_t n = 50'000;
        std::vector<double> direct(n), thinned(n);
        std::vector<double> direct_pos, thinned_pos;
        for (std::size_t i = 0; i < n; ++i)
        {
            auto a = RandomStream::substream(4, 0, i);
            const auto r = sample_road(Road::Horizontal, extent, TrafficParams{0.01, 0.01, p}, a);
            direct[i] = static_cast<double>(r.horizontal.size());
            for (const auto &q : r.horizontal)
                direct_pos.push_back(q.offset);

            auto b = RandomStream::substream(4, 1, i);
            const auto full = sample_road(Road::Horizontal, extent, TrafficParams{0.01, 0.01, 1.0}, b);
            std::bernoulli_distribution keep(p);
            std::size_t kept = 0;
            for (const auto &q : full.horizontal)
                if (keep(b))
                {
                    ++kept;
                    thinned_pos.push_back(q.offset);
                }
            thinned[i] = static_cast<double>(kept);
        }
        const auto sd = count_stats(direct), st = count_stats(thinned);
        const double mu = p * 0.01 * 400;
        CHECK(std::abs(sd.mean - st.mean) < 4.0 * std::sqrt(2 * mu / n));
        CHECK(std::abs(sd.var - st.var) < 4.0 * std::sqrt(2 * (mu + 2 * mu * mu) / n));
        CHECK(ks_uniform(thinned_pos, -200, 200) < 1.628 / std::sqrt(double(thinned_pos.size())));
        CHECK(ks_uniform(direct_pos, -200, 200) < 1.628 / std::sqrt(double(direct_pos.size())));
    }

    TEST_CASE("single-road sampling leaves the other road empty")
    {
        auto rng = RandomStream(7);
        const auto r = sample_road(Road::Vertical, RoadExtent{200, 200}, TrafficParams{1, 1, 1}, rng);
        CHECK(r.horizontal.empty());
        CHECK(r.vertical.size() > 0);
    }

    TEST_CASE("identical streams give identical realizations")
    {
        for (std::uint64_t i = 0; i < 200; ++i)
        {
            auto a = RandomStream::substream(9, 1, i);
            auto b = RandomStream::substream(9, 1, i);
            const auto ra = sample_realization(RoadExtent{200, 200}, TrafficParams{0.01, 0.01, 0.6}, a);
            const auto rb = sample_realization(RoadExtent{200, 200}, TrafficParams{0.01, 0.01, 0.6}, b);
            CHECK(ra.horizontal == rb.horizontal);
            CHECK(ra.vertical == rb.vertical);
            CHECK(ra.seed_id == rb.seed_id);
            // The recorded id regenerates the realization on its own.
            auto again = RandomStream(ra.seed_id);
            const auto rc = sample_realization(RoadExtent{200, 200}, TrafficParams{0.01, 0.01, 0.6}, again);
            CHECK(rc.horizontal == ra.horizontal);
            CHECK(rc.vertical == ra.vertical);
        }
    }

    TEST_CASE("property: text form round trips exactly")
    {
        for (std::uint64_t i = 0; i < 300; ++i)
        {
            auto rng = testing::case_stream(20, i);
            const auto r = sample_realization(RoadExtent{10000, 300}, TrafficParams{0.01, 0.02, 0.2}, rng);
            const auto back = realization_from_text(to_text(r));
            CHECK(back.horizontal == r.horizontal);
            CHECK(back.vertical == r.vertical);
            CHECK(back.seed_id == r.seed_id);
        }
        CHECK_THROWS_AS(realization_from_text("H 3\n"), DomainError);
        CHECK_THROWS_AS(realization_from_text("seed 1\nQ 3\n"), DomainError);
    }

    TEST_CASE("parameter validation")
    {
        CHECK_THROWS_AS((TrafficParams{-0.01, 0.01, 0.1}.validate()), DomainError);
        CHECK_THROWS_AS((TrafficParams{0.01, 0.01, 1.5}.validate()), DomainError);
        CHECK_NOTHROW((TrafficParams{0.0, 0.0, 0.0}.validate()));
    }
}
