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

#include "doctest.h"
#include "support.hpp"
#include "v2vrel/errors.hpp"
#include "v2vrel/meta.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <random>
#include <vector>

using namespace v2vrel;
using testing::rel_close;

namespace
{
std::vector<double> beta_samples(double a, double b, std::size_t n, std::uint64_t key)
{
    RandomStream rng(key);
    std::gamma_distribution<double> ga(a, 1.0), gb(b, 1.0);
    std::vector<double> xs(n);
    for (auto &x : xs)
    {
        const double u = ga(rng), v = gb(rng);
        x = u / (u + v);
    }
    return xs;
}

FitError::Kind fit_error_kind(const EmpiricalMeta &meta)
{
    try
    {
        fit_beta_moments(meta);
    }
    catch (const FitError &e)
    {
        return e.kind();
    }
    FAIL("expected FitError");
    return FitError::Kind::Degenerate;
}
} // namespace

TEST_SUITE("meta")
{
    TEST_CASE("empirical CDF examples")
    {
        const EmpiricalMeta m({0.95, 0.80, 0.99}, 8.0);
        CHECK(empirical_meta_cdf(m, 0.9) == doctest::Approx(2.0 / 3.0));
        CHECK(empirical_meta_cdf(m, 0.0) == 1.0);
        CHECK(empirical_meta_cdf(m, 0.99) == doctest::Approx(1.0 / 3.0));
        CHECK(empirical_meta_cdf(m, 0.995) == 0.0);
        CHECK(m.beta_db() == 8.0);
        CHECK_THROWS_AS(EmpiricalMeta({0.5, 1.5}, 8.0), DomainError);
        CHECK_THROWS_AS(empirical_meta_cdf(EmpiricalMeta{}, 0.5), DomainError);
    }

    TEST_CASE("property: empirical CDF is a non-increasing survival function")
    {
        for (std::uint64_t k = 0; k < 50; ++k)
        {
            const EmpiricalMeta m(beta_samples(0.3 + k * 0.1, 2.0, 500, k), 8.0);
            double prev = 1.0;
            for (int i = 0; i <= 200; ++i)
            {
                const double f = empirical_meta_cdf(m, i / 200.0);
                CHECK(f <= prev);
                CHECK(f >= 0.0);
                prev = f;
            }
            CHECK(empirical_meta_cdf(m, 0.0) == 1.0);
        }
    }

    TEST_CASE("Beta complement examples")
    {
        CHECK(beta_cdf_complement({1, 1}, 0.3) == doctest::Approx(0.7).epsilon(1e-13));
        CHECK(beta_cdf_complement({2, 2}, 0.5) == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(beta_cdf_complement({2, 5}, 0.5) == doctest::Approx(0.109375).epsilon(1e-13));
        CHECK(beta_cdf_complement({0.3, 0.05}, 0.0) == 1.0);
        CHECK(beta_cdf_complement({0.3, 0.05}, 1.0) == 0.0);
        CHECK_THROWS_AS(beta_cdf_complement({0.0, 1.0}, 0.5), DomainError);
        CHECK_THROWS_AS(beta_cdf_complement({1.0, 1.0}, 1.5), DomainError);
    }

    TEST_CASE("incomplete beta against Boost")
    {
        // Includes the small-parameter regime of the fitted meta distributions.
        const double as[] = {0.05, 0.1354, 0.5, 1.0, 2.0, 7.5, 40.0};
        const double bs[] = {0.0155, 0.2, 1.0, 3.0, 25.0};
        const double ps[] = {1e-6, 0.01, 0.3, 0.5, 0.9, 0.999, 0.99999};
        for (double a : as)
            for (double b : bs)
                for (double p : ps)
                {
                    const double ours = beta_cdf_complement({a, b}, p);
                    const double ref = boost::math::ibetac(a, b, p);
                    CHECK_MESSAGE(std::abs(ours - ref) <= 1e-12 + 1e-10 * ref, "a=" << a << " b=" << b << " p=" << p);
                    CHECK(std::abs(regularized_incomplete_beta(a, b, p) - boost::math::ibeta(a, b, p)) <= 1e-12);
                }
    }

    TEST_CASE("property: Beta complement is non-increasing in p")
    {
        for (std::uint64_t k = 0; k < 100; ++k)
        {
            auto gen = testing::case_stream(50, k);
            const BetaParams bp{testing::uniform(gen, 0.05, 10), testing::uniform(gen, 0.01, 10)};
            double prev = 1.0;
            for (int i = 0; i <= 100; ++i)
            {
                const double g = beta_cdf_complement(bp, i / 100.0);
                CHECK(g <= prev + 1e-15);
                prev = g;
            }
        }
    }

    TEST_CASE("moment fit examples")
    {
        const auto uni = fit_beta_moments(EmpiricalMeta(beta_samples(1, 1, 1'000'000, 1), 8.0));
        CHECK(std::abs(uni.a - 1.0) < 0.02);
        CHECK(std::abs(uni.b - 1.0) < 0.02);
        const auto b25 = fit_beta_moments(EmpiricalMeta(beta_samples(2, 5, 1'000'000, 2), 8.0));
        CHECK(std::abs(b25.a - 2.0) < 0.05);
        CHECK(std::abs(b25.b - 5.0) < 0.12);
        // Exact moments of Beta(2, 5) give the parameters back.
        const BetaParams exact{2, 5};
        const auto back = fit_beta_moments(SampleMoments{exact.mean(), exact.variance()});
        CHECK(rel_close(back.a, 2.0, 1e-12));
        CHECK(rel_close(back.b, 5.0, 1e-12));
    }

    TEST_CASE("moment fit failures")
    {
        try
        {
            fit_beta_moments(SampleMoments{0.5, 0.25});
            FAIL("expected FitError");
        }
        catch (const FitError &e)
        {
            CHECK(e.kind() == FitError::Kind::InfeasibleMoments);
        }
        // Two-point {0, 1} has variance 0.5 > m(1 - m) with the N - 1 denominator.
        CHECK(fit_error_kind(EmpiricalMeta({0.0, 1.0}, 8.0)) == FitError::Kind::InfeasibleMoments);
        CHECK(fit_error_kind(EmpiricalMeta({0.9, 0.9, 0.9}, 8.0)) == FitError::Kind::Degenerate);
        CHECK(fit_error_kind(EmpiricalMeta({1.0, 1.0}, 8.0)) == FitError::Kind::Degenerate);
        CHECK_THROWS_AS(fit_beta_moments(EmpiricalMeta({0.5}, 8.0)), DomainError);
    }

    TEST_CASE("property: fitted Beta reproduces the sample moments")
    {
        for (std::uint64_t k = 0; k < 100; ++k)
        {
            auto gen = testing::case_stream(51, k);
            const auto xs = beta_samples(testing::uniform(gen, 0.1, 8), testing::uniform(gen, 0.05, 8), 2000, 100 + k);
            const EmpiricalMeta m(xs, 8.0);
            const auto mom = sample_moments(m.samples());
            const auto fit = fit_beta_moments(m);
            CHECK(rel_close(fit.mean(), mom.mean, 1e-10));
            CHECK(rel_close(fit.variance(), mom.variance, 1e-6));
        }
    }

    TEST_CASE("Beta parameter recovery within 5 percent")
    {
        const double grid[] = {0.5, 1.0, 2.0, 5.0};
        std::uint64_t key = 1000;
        for (double a0 : grid)
            for (double b0 : grid)
            {
                const auto fit = fit_beta_moments(EmpiricalMeta(beta_samples(a0, b0, 100'000, key++), 8.0));
                CHECK_MESSAGE(std::abs(fit.a - a0) <= 0.05 * a0, "a0=" << a0 << " b0=" << b0 << " a=" << fit.a);
                CHECK_MESSAGE(std::abs(fit.b - b0) <= 0.05 * b0, "a0=" << a0 << " b0=" << b0 << " b=" << fit.b);
            }
    }

    TEST_CASE("bimodality gap examples")
    {
        const EmpiricalMeta m({0.999999, 0.99999, 0.5, 0.2}, 8.0);
        // Outages 1e-6, 1e-5, 0.5, 0.8.
        CHECK(bimodality_gap(m, 1e-3, 1e-2) == 0.0);
        CHECK(bimodality_gap(m, 1e-7, 1e-4) == doctest::Approx(0.5));
        CHECK(bimodality_gap(m, 0.0, 1.0) == 1.0);
        CHECK_THROWS_AS(bimodality_gap(m, 0.1, 0.01), DomainError);
        CHECK_THROWS_AS(bimodality_gap(EmpiricalMeta{}, 0.01, 0.1), DomainError);
    }
}
