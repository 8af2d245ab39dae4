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
#include "v2vrel/geometry.hpp"
#include "v2vrel/errors.hpp"

#include <cmath>
#include <string>

namespace v2vrel
{

void RoadExtent::validate() const
{
    if (!(std::isfinite(half_x) && half_x > 0.0) || !(std::isfinite(half_y) && half_y > 0.0))
        throw DomainError("road half-lengths must be finite and positive");
}

double euclidean_distance(const Position &a, const Position &b) noexcept
{
    return std::hypot(a.x() - b.x(), a.y() - b.y());
}

double manhattan_separation(const Position &a, const Position &b) noexcept
{
    return std::abs(a.x() - b.x()) + std::abs(a.y() - b.y());
}

Position tx_position_at_separation(double separation, const Position &rx, double max_separation)
{
    if (rx.road != Road::Horizontal || !(rx.offset < 0.0))
        throw DomainError("trajectory requires a receiver on the horizontal road at a negative offset");
    const double to_junction = -rx.offset;
    if (!(max_separation >= to_junction))
        throw DomainError("maximum separation must reach the junction");
    if (!(separation >= 0.0 && separation <= max_separation))
        throw DomainError("separation " + std::to_string(separation) + " m outside [0, " +
                          std::to_string(max_separation) + "]");

    if (separation <= to_junction)
        return Position::horizontal(rx.offset + separation).canonical();
    return Position::vertical(separation - to_junction);
}

} // namespace v2vrel
