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
#include "v2vrel/scenario.hpp"
#include "v2vrel/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace v2vrel
{

void DesignSpec::validate(const Position &rx) const
{
    if (!(target > 0.0 && target < 1.0))
        throw DomainError("target success probability must lie in (0, 1)");
    if (!(d_target > 0.0 && d_target <= d_max))
        throw DomainError("d_target must be positive and not exceed d_max");
    if (std::abs(manhattan_separation(tx_at_target, rx) - d_target) > 1e-9)
        throw DomainError("design TX position is not at d_target from the receiver");
}

Scenario Scenario::reference(ChannelModel model, double road_length)
{
    Scenario s;
    s.extent = {road_length, road_length};
    s.traffic = {0.01, 0.01, 0.0};
    s.channel = ChannelParams::reference(model);
    s.radio = {};
    s.rx = Position::horizontal(-50.0);
    s.design.target = 0.9;
    s.design.d_target = 100.0;
    s.design.d_max = 140.0;
    s.design.tx_at_target = tx_position_at_separation(s.design.d_target, s.rx, s.design.d_max);
    return s;
}

void Scenario::validate() const
{
    extent.validate();
    traffic.validate();
    channel.validate();
    radio.validate();
    if (rx.canonical().road != Road::Horizontal)
        throw DomainError("receiver must be on the horizontal road");
    if (!extent.contains(rx))
        throw DomainError("receiver lies outside the road segment");
    if (channel.model == ChannelModel::Urban && channel.breakpoint > std::min(extent.half_x, extent.half_y))
        throw DomainError("breakpoint distance exceeds the road half-length");
    design.validate(rx);
}

// ---------------------------------------------------------------------------

namespace
{

double parse_number(std::string_view key, std::string_view text)
{
    double value = 0.0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    if (!text.empty() && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value))
        throw ConfigError("value '" + std::string(text) + "' for key '" + std::string(key) +
                          "' is not a finite number");
    return value;
}

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

} // namespace

const std::vector<std::string_view> &ScenarioConfig::keys()
{
    static const std::vector<std::string_view> list = {
        "model", "R",     "R_x", "R_y",      "lambda", "lambda_x", "lambda_y", "p_I",      "P0",       "N0",    "beta",
        "alpha", "Delta", "A0",  "A0_prime", "f0",     "d0",       "x_rx",     "P_target", "d_target", "d_max",
    };
    return list;
}

void ScenarioConfig::set(std::string_view key, std::string_view value)
{
    const auto &known = keys();
    if (std::find(known.begin(), known.end(), key) == known.end())
        throw ConfigError("unknown configuration key '" + std::string(key) + "'");
    value = trim(value);
    if (key == "model")
    {
        try
        {
            parse_channel_model(value);
        }
        catch (const DomainError &e)
        {
            throw ConfigError(e.what());
        }
    }
    else if (key == "p_I")
    {
        if (value != "auto")
        {
            const double p = parse_number(key, value);
            if (p < 0.0 || p > 1.0)
                throw ConfigError("p_I must lie in [0, 1] or be 'auto'");
        }
    }
    else
    {
        parse_number(key, value);
    }
    values_.insert_or_assign(std::string(key), std::string(value));
}

std::optional<std::string> ScenarioConfig::get(std::string_view key) const
{
    const auto it = values_.find(key);
    if (it == values_.end())
        return std::nullopt;
    return it->second;
}

void ScenarioConfig::merge(const ScenarioConfig &higher)
{
    for (const auto &[k, v] : higher.values_)
        values_.insert_or_assign(k, v);
}

ScenarioConfig ScenarioConfig::parse(std::string_view text)
{
    ScenarioConfig config;
    std::size_t line_no = 0;
    while (!text.empty())
    {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        try
        {
            config.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
        catch (const ConfigError &e)
        {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return config;
}

ScenarioConfig ScenarioConfig::load(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open configuration file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try
    {
        return parse(buffer.str());
    }
    catch (const ConfigError &e)
    {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

ScenarioConfig::Resolved ScenarioConfig::resolve() const
{
    auto number = [&](std::string_view key) -> std::optional<double> {
        const auto v = get(key);
        if (!v)
            return std::nullopt;
        return parse_number(key, *v);
    };

    const ChannelModel model = get("model") ? parse_channel_model(*get("model")) : ChannelModel::Urban;
    Resolved out{Scenario::reference(model, number("R").value_or(200.0)), true};
    Scenario &s = out.scenario;

    if (auto v = number("R_x"))
        s.extent.half_x = *v;
    if (auto v = number("R_y"))
        s.extent.half_y = *v;

    if (auto v = number("lambda"))
        s.traffic.lambda_x = s.traffic.lambda_y = *v;
    if (auto v = number("lambda_x"))
        s.traffic.lambda_x = *v;
    if (auto v = number("lambda_y"))
        s.traffic.lambda_y = *v;
    if (const auto p = get("p_I"); p && *p != "auto")
    {
        s.traffic.p_transmit = parse_number("p_I", *p);
        out.auto_transmit = false;
    }

    if (auto v = number("alpha"))
        s.channel.alpha = *v;
    if (auto v = number("Delta"))
        s.channel.breakpoint = *v;
    s.channel.a0_db = number("A0").value_or(ChannelParams::los_coefficient_db(s.channel.alpha));
    s.channel.a0_prime_db =
        number("A0_prime").value_or(ChannelParams::nlos_coefficient_db(s.channel.alpha, s.channel.breakpoint));
    if (auto v = number("f0"))
        s.channel.frequency_hz = *v;
    if (auto v = number("d0"))
        s.channel.ref_distance = *v;

    if (auto v = number("P0"))
        s.radio.p0_dbm = *v;
    if (auto v = number("N0"))
        s.radio.n0_dbm = *v;
    if (auto v = number("beta"))
        s.radio.beta_db = *v;

    if (auto v = number("x_rx"))
        s.rx = Position::horizontal(*v).canonical();
    if (auto v = number("P_target"))
        s.design.target = *v;
    if (auto v = number("d_target"))
        s.design.d_target = *v;
    if (auto v = number("d_max"))
        s.design.d_max = *v;
    try
    {
        s.design.tx_at_target = tx_position_at_separation(s.design.d_target, s.rx, s.design.d_max);
        s.validate();
    }
    catch (const DomainError &e)
    {
        throw ConfigError(std::string("inconsistent scenario: ") + e.what());
    }
    return out;
}

} // namespace v2vrel
