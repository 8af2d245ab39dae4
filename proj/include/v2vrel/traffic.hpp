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
#ifndef V2VREL_TRAFFIC_HPP
#define V2VREL_TRAFFIC_HPP

#include "v2vrel/geometry.hpp"
#include "v2vrel/random.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace v2vrel
{

struct TrafficParams
{
    double lambda_x = 0.01;  // vehicles per meter
    double lambda_y = 0.01;  // vehicles per meter
    double p_transmit = 0.0; // Aloha transmit probability

    double lambda(Road road) const noexcept { return road == Road::Horizontal ? lambda_x : lambda_y; }
    void validate() const;
};

/// One sampled interferer configuration.
struct Realization
{
    std::vector<Position> horizontal;
    std::vector<Position> vertical;
    std::uint64_t seed_id = 0; // key of the stream it was drawn from

    std::size_t size() const noexcept { return horizontal.size() + vertical.size(); }
    bool empty() const noexcept { return size() == 0; }

    template <typename F> void for_each(F &&f) const
    {
        for (const auto &p : horizontal)
            f(p);
        for (const auto &p : vertical)
            f(p);
    }
};

struct ExpectedCounts
{
    double horizontal;
    double vertical;
};

// Mean interferer counts p_I * lambda * |B| per road.
ExpectedCounts expected_count(const RoadExtent &extent, const TrafficParams &traffic);

/// Draws the thinned PPPs directly: Poisson(p_I lambda 2R) points uniform on each road.
Realization sample_realization(const RoadExtent &extent, const TrafficParams &traffic, RandomStream &rng);

// Points of a single road only (the other road stays empty).
Realization sample_road(Road road, const RoadExtent &extent, const TrafficParams &traffic, RandomStream &rng);

// Text form: a "seed <key>" line then one "H <offset>" / "V <offset>" line per point.
std::string to_text(const Realization &realization);
Realization realization_from_text(std::string_view text);

} // namespace v2vrel

#endif
