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
#include "v2vrel/v2vrel.h"

#include "v2vrel/analytic.hpp"
#include "v2vrel/errors.hpp"
#include "v2vrel/harness.hpp"
#include "v2vrel/report.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <new>
#include <string>

struct v2v_config
{
    v2vrel::ScenarioConfig config;
};

struct v2v_sweep
{
    v2vrel::SweepResult result;
};

struct v2v_meta
{
    v2vrel::MetaStudy study;
};

struct v2v_validation
{
    v2vrel::ValidationReport report;
    std::string text;
};

namespace
{

thread_local std::string last_error;

v2v_status fail(v2v_status status, std::string message)
{
    last_error = std::move(message);
    return status;
}

// Maps the core's exceptions onto status codes.
template <typename F> v2v_status guarded(F &&f) noexcept
{
    try
    {
        f();
        return V2V_OK;
    }
    catch (const v2vrel::ConfigError &e)
    {
        return fail(V2V_ERR_CONFIG, e.what());
    }
    catch (const v2vrel::DomainError &e)
    {
        return fail(V2V_ERR_DOMAIN, e.what());
    }
    catch (const v2vrel::NumericalError &e)
    {
        return fail(V2V_ERR_NUMERICAL, e.what());
    }
    catch (const v2vrel::FitError &e)
    {
        return fail(V2V_ERR_FIT, e.what());
    }
    catch (const v2vrel::InfeasibleError &e)
    {
        return fail(V2V_ERR_INFEASIBLE, e.what());
    }
    catch (const std::bad_alloc &)
    {
        return fail(V2V_ERR_INTERNAL, "out of memory");
    }
    catch (const std::exception &e)
    {
        return fail(V2V_ERR_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(V2V_ERR_INTERNAL, "unknown error");
    }
}

v2v_status null_argument(const char *what) { return fail(V2V_ERR_INVALID_ARGUMENT, std::string(what) + " is null"); }

v2vrel::RunOptions run_options(const v2v_run_options *options)
{
    v2vrel::RunOptions run;
    if (options)
    {
        run.realizations = options->realizations;
        run.seed = options->seed;
        run.threads = options->threads;
    }
    return run;
}

void write_file(const char *path, auto &&writer)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::ios_base::failure(std::string("cannot open '") + path + "' for writing");
    writer(out);
    out.flush();
    if (!out)
        throw std::ios_base::failure(std::string("write to '") + path + "' failed");
}

template <typename F> v2v_status guarded_io(F &&f) noexcept
{
    try
    {
        f();
        return V2V_OK;
    }
    catch (const std::ios_base::failure &e)
    {
        return fail(V2V_ERR_IO, e.what());
    }
    catch (...)
    {
        return guarded([] { throw; });
    }
}

v2v_link_class to_c(v2vrel::LinkClass link)
{
    switch (link)
    {
    case v2vrel::LinkClass::LOS:
        return V2V_LINK_LOS;
    case v2vrel::LinkClass::WLOS:
        return V2V_LINK_WLOS;
    case v2vrel::LinkClass::NLOS:
        return V2V_LINK_NLOS;
    }
    return V2V_LINK_LOS;
}

} // namespace

extern "C" {

const char *v2v_version(void) { return "0.1.0"; }

const char *v2v_status_string(v2v_status status)
{
    switch (status)
    {
    case V2V_OK:
        return "ok";
    case V2V_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case V2V_ERR_DOMAIN:
        return "domain error";
    case V2V_ERR_NUMERICAL:
        return "numerical error";
    case V2V_ERR_CONFIG:
        return "configuration error";
    case V2V_ERR_FIT:
        return "fit error";
    case V2V_ERR_IO:
        return "i/o error";
    case V2V_ERR_INFEASIBLE:
        return "infeasible target";
    case V2V_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *v2v_last_error(void) { return last_error.c_str(); }

v2v_status v2v_config_create(v2v_config **out)
{
    if (!out)
        return null_argument("out");
    return guarded([&] { *out = new v2v_config{}; });
}

void v2v_config_destroy(v2v_config *config) { delete config; }

v2v_status v2v_config_set(v2v_config *config, const char *key, const char *value)
{
    if (!config)
        return null_argument("config");
    if (!key || !value)
        return null_argument("key/value");
    return guarded([&] { config->config.set(key, value); });
}

v2v_status v2v_config_load_file(v2v_config *config, const char *path)
{
    if (!config)
        return null_argument("config");
    if (!path)
        return null_argument("path");
    return guarded([&] { config->config.merge(v2vrel::ScenarioConfig::load(path)); });
}

v2v_status v2v_config_value(const v2v_config *config, const char *key, double *out)
{
    if (!config)
        return null_argument("config");
    if (!key || !out)
        return null_argument("key/out");
    return guarded([&] {
        const std::string k = key;
        if (k == "model")
            throw v2vrel::ConfigError("'model' is not numeric");
        const v2vrel::Scenario s = v2vrel::materialize(config->config);
        if (k == "R" || k == "R_x")
            *out = s.extent.half_x;
        else if (k == "R_y")
            *out = s.extent.half_y;
        else if (k == "lambda" || k == "lambda_x")
            *out = s.traffic.lambda_x;
        else if (k == "lambda_y")
            *out = s.traffic.lambda_y;
        else if (k == "p_I")
            *out = s.traffic.p_transmit;
        else if (k == "P0")
            *out = s.radio.p0_dbm;
        else if (k == "N0")
            *out = s.radio.n0_dbm;
        else if (k == "beta")
            *out = s.radio.beta_db;
        else if (k == "alpha")
            *out = s.channel.alpha;
        else if (k == "Delta")
            *out = s.channel.breakpoint;
        else if (k == "A0")
            *out = s.channel.a0_db;
        else if (k == "A0_prime")
            *out = s.channel.a0_prime_db;
        else if (k == "f0")
            *out = s.channel.frequency_hz;
        else if (k == "d0")
            *out = s.channel.ref_distance;
        else if (k == "x_rx")
            *out = s.rx.x();
        else if (k == "P_target")
            *out = s.design.target;
        else if (k == "d_target")
            *out = s.design.d_target;
        else if (k == "d_max")
            *out = s.design.d_max;
        else
            throw v2vrel::ConfigError("unknown configuration key '" + k + "'");
    });
}

v2v_status v2v_solve_optimal_pi(const v2v_config *config, v2v_pi_result *out)
{
    if (!config)
        return null_argument("config");
    if (!out)
        return null_argument("out");
    return guarded([&] {
        const auto resolved = config->config.resolve();
        const auto pi = v2vrel::solve_optimal_pi(resolved.scenario.design, resolved.scenario);
        out->value = pi.value;
        out->achieved = pi.achieved;
        out->status = pi.status == v2vrel::PiStatus::Constrained     ? V2V_PI_CONSTRAINED
                      : pi.status == v2vrel::PiStatus::Unconstrained ? V2V_PI_UNCONSTRAINED
                                                                     : V2V_PI_INFEASIBLE;
    });
}

v2v_status v2v_average_success(const v2v_config *config, v2v_road tx_road, double tx_offset_m, v2v_average *out)
{
    if (!config)
        return null_argument("config");
    if (!out)
        return null_argument("out");
    if (tx_road != V2V_ROAD_HORIZONTAL && tx_road != V2V_ROAD_VERTICAL)
        return fail(V2V_ERR_INVALID_ARGUMENT, "tx_road is not a v2v_road value");
    return guarded([&] {
        const auto scenario = v2vrel::materialize(config->config);
        const v2vrel::Position tx{tx_road == V2V_ROAD_HORIZONTAL ? v2vrel::Road::Horizontal : v2vrel::Road::Vertical,
                                  tx_offset_m};
        const auto avg = v2vrel::average_success(tx, scenario);
        *out = {avg.value, avg.noise_factor, avg.laplace_x, avg.laplace_y};
    });
}

v2v_status v2v_run_sweep(const v2v_config *config, double min_m, double step_m, double max_m,
                         const v2v_run_options *options, v2v_sweep **out)
{
    if (!config)
        return null_argument("config");
    if (!out)
        return null_argument("out");
    return guarded([&] {
        const auto scenario = v2vrel::materialize(config->config);
        auto result = v2vrel::run_separation_sweep(scenario, {min_m, step_m, max_m}, run_options(options));
        *out = new v2v_sweep{std::move(result)};
    });
}

void v2v_sweep_destroy(v2v_sweep *sweep) { delete sweep; }

size_t v2v_sweep_size(const v2v_sweep *sweep) { return sweep ? sweep->result.points.size() : 0; }

v2v_status v2v_sweep_row_at(const v2v_sweep *sweep, size_t index, v2v_sweep_row *out)
{
    if (!sweep)
        return null_argument("sweep");
    if (!out)
        return null_argument("out");
    if (index >= sweep->result.points.size())
        return fail(V2V_ERR_DOMAIN, "sweep row index out of range");
    const auto &pt = sweep->result.points[index];
    out->separation_m = pt.separation;
    out->tx_road = pt.tx.road == v2vrel::Road::Horizontal ? V2V_ROAD_HORIZONTAL : V2V_ROAD_VERTICAL;
    out->tx_offset_m = pt.tx.offset;
    out->link_class = to_c(pt.link);
    out->avg_success_analytic = pt.analytic.value;
    out->avg_success_empirical = pt.empirical_mean;
    out->meta_at_avg = pt.meta_at_average;
    out->n_realizations = pt.samples.size();
    return V2V_OK;
}

v2v_status v2v_sweep_samples(const v2v_sweep *sweep, size_t index, const double **data, size_t *count)
{
    if (!sweep)
        return null_argument("sweep");
    if (!data || !count)
        return null_argument("data/count");
    if (index >= sweep->result.points.size())
        return fail(V2V_ERR_DOMAIN, "sweep row index out of range");
    *data = sweep->result.points[index].samples.data();
    *count = sweep->result.points[index].samples.size();
    return V2V_OK;
}

v2v_status v2v_sweep_write_csv(const v2v_sweep *sweep, const char *path)
{
    if (!sweep)
        return null_argument("sweep");
    if (!path)
        return null_argument("path");
    return guarded_io([&] { write_file(path, [&](std::ostream &o) { v2vrel::write_sweep_csv(o, sweep->result); }); });
}

v2v_status v2v_sweep_write_scatter_csv(const v2v_sweep *sweep, const char *path)
{
    if (!sweep)
        return null_argument("sweep");
    if (!path)
        return null_argument("path");
    return guarded_io([&] { write_file(path, [&](std::ostream &o) { v2vrel::write_scatter_csv(o, sweep->result); }); });
}

v2v_status v2v_run_meta_study(const v2v_config *config, double separation_m, const v2v_run_options *options,
                              v2v_meta **out)
{
    if (!config)
        return null_argument("config");
    if (!out)
        return null_argument("out");
    return guarded([&] {
        const auto scenario = v2vrel::materialize(config->config);
        *out = new v2v_meta{v2vrel::run_meta_study(scenario, separation_m, run_options(options))};
    });
}

void v2v_meta_destroy(v2v_meta *meta) { delete meta; }

v2v_status v2v_meta_get_summary(const v2v_meta *meta, v2v_meta_summary *out)
{
    if (!meta)
        return null_argument("meta");
    if (!out)
        return null_argument("out");
    return guarded([&] {
        const auto &study = meta->study;
        const auto moments = v2vrel::sample_moments(study.meta.samples());
        const double nan = std::numeric_limits<double>::quiet_NaN();
        *out = {study.separation, study.meta.size(), study.analytic.value,           moments.mean,
                moments.variance, study.fit ? 1 : 0, study.fit ? study.fit->a : nan, study.fit ? study.fit->b : nan};
    });
}

v2v_status v2v_meta_cdf(const v2v_meta *meta, double p, double *empirical, double *beta_approx)
{
    if (!meta)
        return null_argument("meta");
    return guarded([&] {
        if (empirical)
            *empirical = v2vrel::empirical_meta_cdf(meta->study.meta, p);
        if (beta_approx)
        {
            if (!meta->study.fit)
                throw v2vrel::FitError(v2vrel::FitError::Kind::Degenerate, meta->study.fit_error);
            *beta_approx = v2vrel::beta_cdf_complement(*meta->study.fit, p);
        }
    });
}

v2v_status v2v_meta_bimodality_gap(const v2v_meta *meta, double low, double high, double *out)
{
    if (!meta)
        return null_argument("meta");
    if (!out)
        return null_argument("out");
    return guarded([&] { *out = v2vrel::bimodality_gap(meta->study.meta, low, high); });
}

v2v_status v2v_meta_samples(const v2v_meta *meta, const double **data, size_t *count)
{
    if (!meta)
        return null_argument("meta");
    if (!data || !count)
        return null_argument("data/count");
    *data = meta->study.meta.samples().data();
    *count = meta->study.meta.size();
    return V2V_OK;
}

v2v_status v2v_meta_write_csv(const v2v_meta *meta, const char *path)
{
    if (!meta)
        return null_argument("meta");
    if (!path)
        return null_argument("path");
    return guarded_io([&] { write_file(path, [&](std::ostream &o) { v2vrel::write_meta_csv(o, meta->study); }); });
}

v2v_status v2v_meta_write_summary_json(const v2v_meta *meta, const char *path)
{
    if (!meta)
        return null_argument("meta");
    if (!path)
        return null_argument("path");
    return guarded_io([&] { write_file(path, [&](std::ostream &o) { o << v2vrel::meta_summary_json(meta->study); }); });
}

v2v_status v2v_run_validation(const v2v_config *config, uint64_t n_realizations, uint64_t n_fading, uint64_t seed,
                              unsigned threads, v2v_validation **out)
{
    if (!config)
        return null_argument("config");
    if (!out)
        return null_argument("out");
    return guarded([&] {
        const auto scenario = v2vrel::materialize(config->config);
        v2vrel::ValidationOptions options;
        options.realizations = n_realizations;
        options.fading = n_fading;
        options.seed = seed;
        options.threads = threads;
        auto report = v2vrel::run_validation(scenario, options);
        auto text = report.to_text();
        *out = new v2v_validation{std::move(report), std::move(text)};
    });
}

void v2v_validation_destroy(v2v_validation *validation) { delete validation; }

int v2v_validation_passed(const v2v_validation *validation) { return validation && validation->report.passed(); }

const char *v2v_validation_text(const v2v_validation *validation) { return validation ? validation->text.c_str() : ""; }

v2v_status v2v_validation_write(const v2v_validation *validation, const char *path)
{
    if (!validation)
        return null_argument("validation");
    if (!path)
        return null_argument("path");
    return guarded_io([&] { write_file(path, [&](std::ostream &o) { o << validation->text; }); });
}

} // extern "C"
