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
#include "v2vrel/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace v2vrel
{

std::string format_real(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

std::vector<double> outage_grid()
{
    std::vector<double> grid(kOutageGridSize);
    for (std::size_t k = 0; k < kOutageGridSize; ++k)
        grid[k] = std::pow(10.0, -5.0 + 5.0 * static_cast<double>(k) / static_cast<double>(kOutageGridSize - 1));
    grid.back() = 1.0;
    return grid;
}

void write_sweep_csv(std::ostream &out, const SweepResult &result)
{
    out << "separation_m,link_class,avg_success_analytic,avg_success_empirical,meta_at_avg,n_realizations\n";
    for (const auto &pt : result.points)
        out << format_real(pt.separation) << ',' << to_string(pt.link) << ',' << format_real(pt.analytic.value) << ','
            << format_real(pt.empirical_mean) << ',' << format_real(pt.meta_at_average) << ',' << pt.samples.size()
            << '\n';
}

void write_scatter_csv(std::ostream &out, const SweepResult &result, std::size_t per_separation)
{
    out << "separation_m,realization_id,conditional_outage\n";
    for (const auto &pt : result.points)
        for (std::size_t i : scatter_selection(pt.samples.size(), per_separation))
            out << format_real(pt.separation) << ',' << i << ',' << format_real(1.0 - pt.samples[i]) << '\n';
}

void write_meta_csv(std::ostream &out, const MetaStudy &study)
{
    out << "realization_id,conditional_success\n";
    const auto samples = study.meta.samples();
    for (std::size_t i = 0; i < samples.size(); ++i)
        out << i << ',' << format_real(samples[i]) << '\n';
}

namespace
{

using Json = nlohmann::ordered_json;

// Round to the printed precision so the JSON carries the same 9 digits as the CSVs.
Json real(double value)
{
    if (!std::isfinite(value))
        return nullptr;
    return std::strtod(format_real(value).c_str(), nullptr);
}

} // namespace

std::string meta_summary_json(const MetaStudy &study)
{
    Json j;
    const auto moments = sample_moments(study.meta.samples());
    j["separation_m"] = real(study.separation);
    j["n_realizations"] = study.meta.size();
    j["avg_success_analytic"] = real(study.analytic.value);
    j["mean"] = real(moments.mean);
    j["variance"] = real(moments.variance);
    j["beta_a"] = study.fit ? real(study.fit->a) : Json(nullptr);
    j["beta_b"] = study.fit ? real(study.fit->b) : Json(nullptr);
    if (!study.fit)
        j["fit_error"] = study.fit_error;

    auto rows = Json::array();
    for (double outage : outage_grid())
    {
        const double p = 1.0 - outage;
        Json row;
        row["p"] = real(p);
        row["outage"] = real(outage);
        row["empirical"] = real(empirical_meta_cdf(study.meta, p));
        row["beta_approx"] = study.fit ? real(beta_cdf_complement(*study.fit, p)) : Json(nullptr);
        rows.push_back(std::move(row));
    }
    j["F_r"] = std::move(rows);
    return j.dump(2) + "\n";
}

} // namespace v2vrel
