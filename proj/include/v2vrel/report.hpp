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
#ifndef V2VREL_REPORT_HPP
#define V2VREL_REPORT_HPP

#include "v2vrel/harness.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace v2vrel
{

// Nine significant digits, "%.9g".
std::string format_real(double value);

inline constexpr std::size_t kScatterLimit = 1000;
inline constexpr std::size_t kOutageGridSize = 200;

// Conditional outages 10^(-5 + 5 k / 199), k = 0 .. 199.
std::vector<double> outage_grid();

// separation_m,link_class,avg_success_analytic,avg_success_empirical,meta_at_avg,n_realizations
void write_sweep_csv(std::ostream &out, const SweepResult &result);
// separation_m,realization_id,conditional_outage
void write_scatter_csv(std::ostream &out, const SweepResult &result, std::size_t per_separation = kScatterLimit);
// realization_id,conditional_success
void write_meta_csv(std::ostream &out, const MetaStudy &study);
// {mean, variance, beta_a, beta_b, F_r: [{p, outage, empirical, beta_approx}]}
std::string meta_summary_json(const MetaStudy &study);

} // namespace v2vrel

#endif
