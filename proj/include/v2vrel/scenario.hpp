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
#ifndef V2VREL_SCENARIO_HPP
#define V2VREL_SCENARIO_HPP

#include "v2vrel/channel.hpp"
#include "v2vrel/geometry.hpp"
#include "v2vrel/reliability.hpp"
#include "v2vrel/traffic.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace v2vrel
{

/// Reliability target: average success >= target for every TX within d_target
/// (Manhattan) of the receiver. tx_at_target is the worst-case TX position.
struct DesignSpec
{
    double target = 0.9;
    double d_target = 100.0;
    double d_max = 140.0;
    Position tx_at_target = Position::vertical(50.0);

    void validate(const Position &rx) const;
};

struct Scenario
{
    RoadExtent extent;
    TrafficParams traffic;
    ChannelParams channel;
    RadioParams radio;
    Position rx = Position::horizontal(-50.0);
    DesignSpec design;

    // Reference intersection: lambda = 0.01/m on both roads, R_x = R_y = road_length,
    // rx at -50 m, P0 = 20 dBm, N0 = -99 dBm, beta = 8 dB, breakpoint 15 m,
    // alpha = 2 (suburban) or 1.68 (urban), d_target = 100 m, d_max = 140 m,
    // target 0.9. The transmit probability is left at 0.
    static Scenario reference(ChannelModel model, double road_length = 200.0);

    void validate() const;
};

/// Layered key/value scenario description.
///
/// Keys: model, R, R_x, R_y, lambda, lambda_x, lambda_y, p_I, P0, N0, beta, alpha,
/// Delta, A0, A0_prime, f0, d0, x_rx, P_target, d_target, d_max. Values are plain
/// numbers in the units of the reference table (m, dBm, dB, Hz); model takes
/// urban|suburban and p_I takes a probability or "auto". The text form is one
/// "key = value" per line with '#' comments.
class ScenarioConfig
{
  public:
    static const std::vector<std::string_view> &keys();

    static ScenarioConfig parse(std::string_view text);
    static ScenarioConfig load(const std::filesystem::path &path);

    // Throws ConfigError for unknown keys or unparsable values.
    void set(std::string_view key, std::string_view value);
    std::optional<std::string> get(std::string_view key) const;

    // Entries of \p higher replace ours.
    void merge(const ScenarioConfig &higher);

    struct Resolved
    {
        Scenario scenario;
        bool auto_transmit = true; // p_I must still be solved for
    };

    Resolved resolve() const;

  private:
    std::map<std::string, std::string, std::less<>> values_;
};

} // namespace v2vrel

#endif
