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
#include "v2vrel/traffic.hpp"
#include "v2vrel/errors.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace v2vrel
{

void TrafficParams::validate() const
{
    if (!(std::isfinite(lambda_x) && lambda_x >= 0.0) || !(std::isfinite(lambda_y) && lambda_y >= 0.0))
        throw DomainError("traffic intensities must be finite and non-negative");
    if (!(p_transmit >= 0.0 && p_transmit <= 1.0))
        throw DomainError("transmit probability must lie in [0, 1]");
}

ExpectedCounts expected_count(const RoadExtent &extent, const TrafficParams &traffic)
{
    return {traffic.p_transmit * traffic.lambda_x * extent.measure(Road::Horizontal),
            traffic.p_transmit * traffic.lambda_y * extent.measure(Road::Vertical)};
}

namespace
{

void sample_points(Road road, double mean, double half, RandomStream &rng, std::vector<Position> &out)
{
    if (mean <= 0.0)
        return;
    std::poisson_distribution<std::uint64_t> count(mean);
    std::uniform_real_distribution<double> offset(-half, half);
    const std::uint64_t n = count(rng);
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i)
        out.push_back({road, offset(rng)});
}

} // namespace

Realization sample_realization(const RoadExtent &extent, const TrafficParams &traffic, RandomStream &rng)
{
    const auto mean = expected_count(extent, traffic);
    Realization r;
    r.seed_id = rng.key();
    sample_points(Road::Horizontal, mean.horizontal, extent.half_x, rng, r.horizontal);
    sample_points(Road::Vertical, mean.vertical, extent.half_y, rng, r.vertical);
    return r;
}

Realization sample_road(Road road, const RoadExtent &extent, const TrafficParams &traffic, RandomStream &rng)
{
    const auto mean = expected_count(extent, traffic);
    Realization r;
    r.seed_id = rng.key();
    if (road == Road::Horizontal)
        sample_points(road, mean.horizontal, extent.half_x, rng, r.horizontal);
    else
        sample_points(road, mean.vertical, extent.half_y, rng, r.vertical);
    return r;
}

std::string to_text(const Realization &realization)
{
    std::ostringstream out;
    out.precision(17);
    out << "seed " << realization.seed_id << '\n';
    realization.for_each(
        [&](const Position &p) { out << (p.road == Road::Horizontal ? 'H' : 'V') << ' ' << p.offset << '\n'; });
    return out.str();
}

Realization realization_from_text(std::string_view text)
{
    Realization r;
    std::istringstream in{std::string(text)};
    std::string tag;
    bool have_seed = false;
    while (in >> tag)
    {
        if (tag == "seed")
        {
            if (!(in >> r.seed_id))
                throw DomainError("realization text: bad seed line");
            have_seed = true;
            continue;
        }
        double offset = 0.0;
        if (!(in >> offset))
            throw DomainError("realization text: missing offset after '" + tag + "'");
        if (tag == "H")
            r.horizontal.push_back(Position::horizontal(offset));
        else if (tag == "V")
            r.vertical.push_back(Position::vertical(offset));
        else
            throw DomainError("realization text: unknown road tag '" + tag + "'");
    }
    if (!have_seed)
        throw DomainError("realization text: missing seed line");
    return r;
}

} // namespace v2vrel
