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
// Command-line front end; everything goes through the C interface.

#include "v2vrel/v2vrel.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace
{

struct Options
{
    std::optional<std::string> config_file;
    std::optional<std::string> model;
    std::optional<std::string> road_length;
    std::optional<std::string> pi;
    std::string separations = "1:1:140";
    std::optional<double> separation;
    std::uint64_t realizations = 10000;
    std::optional<std::uint64_t> validation_realizations;
    std::uint64_t fading = 10000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string out = ".";
};

struct Failure
{
    int code;
};

void check(v2v_status status, const char *what)
{
    if (status == V2V_OK)
        return;
    std::fprintf(stderr, "v2vrel: %s failed (%s): %s\n", what, v2v_status_string(status), v2v_last_error());
    throw Failure{2};
}

using ConfigPtr = std::unique_ptr<v2v_config, decltype(&v2v_config_destroy)>;

// Precedence: reference defaults < config file < flags.
ConfigPtr build_config(const Options &o)
{
    v2v_config *raw = nullptr;
    check(v2v_config_create(&raw), "creating configuration");
    ConfigPtr config(raw, &v2v_config_destroy);
    if (o.config_file)
        check(v2v_config_load_file(config.get(), o.config_file->c_str()), "loading configuration file");
    if (o.model)
        check(v2v_config_set(config.get(), "model", o.model->c_str()), "--model");
    if (o.road_length)
        check(v2v_config_set(config.get(), "R", o.road_length->c_str()), "--road-length");
    if (o.pi)
        check(v2v_config_set(config.get(), "p_I", o.pi->c_str()), "--pi");
    return config;
}

std::string output_path(const Options &o, const char *name)
{
    std::filesystem::create_directories(o.out);
    return (std::filesystem::path(o.out) / name).string();
}

v2v_run_options run_options(const Options &o) { return {o.realizations, o.seed, o.threads}; }

const char *link_name(v2v_link_class c) { return c == V2V_LINK_LOS ? "LOS" : c == V2V_LINK_WLOS ? "WLOS" : "NLOS"; }

int cmd_solve_pi(const Options &o)
{
    auto config = build_config(o);
    v2v_pi_result pi{};
    check(v2v_solve_optimal_pi(config.get(), &pi), "solving for p_I");
    double target = 0.0, d_target = 0.0;
    check(v2v_config_value(config.get(), "P_target", &target), "reading P_target");
    check(v2v_config_value(config.get(), "d_target", &d_target), "reading d_target");
    const char *status = pi.status == V2V_PI_CONSTRAINED     ? "constrained"
                         : pi.status == V2V_PI_UNCONSTRAINED ? "unconstrained"
                                                             : "infeasible";
    std::printf("p_I* = %.9g (%s)\naverage success at d_target = %.9g m: %.9g (target %.9g)\n", pi.value, status,
                d_target, pi.achieved, target);
    return pi.status == V2V_PI_INFEASIBLE ? 1 : 0;
}

int cmd_sweep(const Options &o)
{
    double lo = 0, step = 0, hi = 0;
    char tail = 0;
    if (std::sscanf(o.separations.c_str(), "%lf:%lf:%lf%c", &lo, &step, &hi, &tail) != 3)
    {
        std::fprintf(stderr, "v2vrel: --separations expects min:step:max\n");
        return 2;
    }
    auto config = build_config(o);
    double pi = 0.0;
    check(v2v_config_value(config.get(), "p_I", &pi), "resolving p_I");

    const auto options = run_options(o);
    v2v_sweep *raw = nullptr;
    check(v2v_run_sweep(config.get(), lo, step, hi, &options, &raw), "running sweep");
    std::unique_ptr<v2v_sweep, decltype(&v2v_sweep_destroy)> sweep(raw, &v2v_sweep_destroy);

    const auto sweep_csv = output_path(o, "sweep.csv");
    const auto scatter_csv = output_path(o, "scatter.csv");
    check(v2v_sweep_write_csv(sweep.get(), sweep_csv.c_str()), "writing sweep.csv");
    check(v2v_sweep_write_scatter_csv(sweep.get(), scatter_csv.c_str()), "writing scatter.csv");

    std::printf("p_I = %.9g, %zu separations, %llu realizations each\n", pi, v2v_sweep_size(sweep.get()),
                static_cast<unsigned long long>(o.realizations));
    v2v_sweep_row first{}, last{};
    v2v_sweep_row_at(sweep.get(), 0, &first);
    v2v_sweep_row_at(sweep.get(), v2v_sweep_size(sweep.get()) - 1, &last);
    for (const auto &row : {first, last})
        std::printf("  s = %.9g m (%s): average %.9g, empirical %.9g, F_r(avg) %.9g\n", row.separation_m,
                    link_name(row.link_class), row.avg_success_analytic, row.avg_success_empirical, row.meta_at_avg);
    std::printf("wrote %s and %s\n", sweep_csv.c_str(), scatter_csv.c_str());
    return 0;
}

int cmd_meta(const Options &o)
{
    auto config = build_config(o);
    double separation = 0.0;
    if (o.separation)
        separation = *o.separation;
    else
        check(v2v_config_value(config.get(), "d_target", &separation), "reading d_target");

    const auto options = run_options(o);
    v2v_meta *raw = nullptr;
    check(v2v_run_meta_study(config.get(), separation, &options, &raw), "running meta study");
    std::unique_ptr<v2v_meta, decltype(&v2v_meta_destroy)> meta(raw, &v2v_meta_destroy);

    const auto csv = output_path(o, "meta.csv");
    const auto json = output_path(o, "meta_summary.json");
    check(v2v_meta_write_csv(meta.get(), csv.c_str()), "writing meta.csv");
    check(v2v_meta_write_summary_json(meta.get(), json.c_str()), "writing meta_summary.json");

    v2v_meta_summary summary{};
    check(v2v_meta_get_summary(meta.get(), &summary), "summarising");
    double at_target = 0.0;
    check(v2v_meta_cdf(meta.get(), 0.9, &at_target, nullptr), "evaluating F_r");
    std::printf("separation %.9g m, %llu realizations\n", summary.separation_m,
                static_cast<unsigned long long>(summary.n_realizations));
    std::printf("  analytic average %.9g, sample mean %.9g, variance %.9g\n", summary.avg_success_analytic,
                summary.mean, summary.variance);
    if (summary.fit_ok)
        std::printf("  Beta fit a = %.9g, b = %.9g\n", summary.beta_a, summary.beta_b);
    else
        std::printf("  Beta fit unavailable (degenerate samples)\n");
    std::printf("  F_r(beta, 0.9) = %.9g\nwrote %s and %s\n", at_target, csv.c_str(), json.c_str());
    return 0;
}

int cmd_validate(const Options &o)
{
    auto config = build_config(o);
    v2v_validation *raw = nullptr;
    check(v2v_run_validation(config.get(), o.validation_realizations.value_or(100), o.fading, o.seed, o.threads, &raw),
          "running validation");
    std::unique_ptr<v2v_validation, decltype(&v2v_validation_destroy)> report(raw, &v2v_validation_destroy);
    const auto path = output_path(o, "validation.txt");
    check(v2v_validation_write(report.get(), path.c_str()), "writing validation.txt");
    std::fputs(v2v_validation_text(report.get()), stdout);
    return v2v_validation_passed(report.get()) ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Average and fine-grained V2V reliability around an intersection"};
    app.require_subcommand(1);
    Options o;

    auto add_scenario_flags = [&](CLI::App *cmd) {
        cmd->add_option("--config", o.config_file, "Key/value scenario file");
        cmd->add_option("--model", o.model, "Channel model")->check(CLI::IsMember({"urban", "suburban"}));
        cmd->add_option("--road-length", o.road_length, "Road half-length R in meters (both roads)");
        cmd->add_option("--pi", o.pi, "Aloha transmit probability, or 'auto' to solve for it");
        cmd->add_option("--seed", o.seed, "Master random seed");
        cmd->add_option("--threads", o.threads, "Worker threads (0: hardware concurrency)");
        cmd->add_option("--out", o.out, "Output directory");
    };

    auto *sweep = app.add_subcommand("sweep", "Reliability over the TX/RX separation grid");
    add_scenario_flags(sweep);
    sweep->add_option("--separations", o.separations, "Grid min:step:max in meters");
    sweep->add_option("--realizations", o.realizations, "Interferer realizations per separation");

    auto *meta = app.add_subcommand("meta", "Meta distribution and Beta fit at one separation");
    add_scenario_flags(meta);
    meta->add_option("--separation", o.separation, "TX/RX Manhattan separation in meters (default d_target)");
    meta->add_option("--realizations", o.realizations, "Interferer realizations");

    auto *solve = app.add_subcommand("solve-pi", "Largest p_I meeting the target at d_target");
    add_scenario_flags(solve);

    auto *validate = app.add_subcommand("validate", "Closed form vs Monte Carlo vs analytic cross-checks");
    add_scenario_flags(validate);
    validate->add_option("--realizations", o.validation_realizations, "Realizations per check (default 100)");
    validate->add_option("--fading", o.fading, "Fading draws per realization");

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*sweep)
            return cmd_sweep(o);
        if (*meta)
            return cmd_meta(o);
        if (*solve)
            return cmd_solve_pi(o);
        return cmd_validate(o);
    }
    catch (const Failure &f)
    {
        return f.code;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "v2vrel: %s\n", e.what());
        return 2;
    }
}
