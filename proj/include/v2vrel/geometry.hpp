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

#ifndef V2VREL_GEOMETRY_HPP
#define V2VREL_GEOMETRY_HPP

#include <cmath>

namespace v2vrel
{

enum class Road
{
    Horizontal,
    Vertical,
};

/// A point on one of the two perpendicular roads, stored as a signed offset from
/// the junction. Storing (road, offset) makes x * y = 0 hold by construction.
struct Position
{
    Road road = Road::Horizontal;
    double offset = 0.0; // meters

    static constexpr Position horizontal(double x) noexcept { return {Road::Horizontal, x}; }
    static constexpr Position vertical(double y) noexcept { return {Road::Vertical, y}; }

    constexpr double x() const noexcept { return road == Road::Horizontal ? offset : 0.0; }
    constexpr double y() const noexcept { return road == Road::Vertical ? offset : 0.0; }

    // Distance to the junction.
    double norm() const noexcept { return std::abs(offset); }

    // The junction is always tagged Horizontal.
    constexpr Position canonical() const noexcept { return offset == 0.0 ? Position{Road::Horizontal, 0.0} : *this; }

    friend constexpr bool operator==(const Position &a, const Position &b) noexcept
    {
        const Position ca = a.canonical(), cb = b.canonical();
        return ca.road == cb.road && ca.offset == cb.offset;
    }
};

/// Half-lengths of the two road segments; B_x = [-R_x, R_x], B_y = [-R_y, R_y].
struct RoadExtent
{
    double half_x = 200.0;
    double half_y = 200.0;

    double half_length(Road road) const noexcept { return road == Road::Horizontal ? half_x : half_y; }
    double measure(Road road) const noexcept { return 2.0 * half_length(road); }
    bool contains(const Position &p) const noexcept { return p.norm() <= half_length(p.road); }

    // Throws DomainError unless both half-lengths are finite and positive.
    void validate() const;
};

double euclidean_distance(const Position &a, const Position &b) noexcept;

// l1 distance in the 2D embedding.
double manhattan_separation(const Position &a, const Position &b) noexcept;

inline constexpr double kDefaultMaxSeparation = 140.0;

/// TX position on the reference trajectory: from the receiver along the horizontal
/// road to the junction, then up the vertical road. The Manhattan separation of
/// the result from \p rx equals \p separation.
///
/// Requires rx on the horizontal road at a negative offset and
/// 0 <= separation <= max_separation, max_separation >= |rx|.
Position tx_position_at_separation(double separation, const Position &rx,
                                   double max_separation = kDefaultMaxSeparation);

} // namespace v2vrel

#endif
