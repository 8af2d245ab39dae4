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
#ifndef V2VREL_ANALYTIC_HPP
#define V2VREL_ANALYTIC_HPP

#include "v2vrel/quadrature.hpp"
#include "v2vrel/scenario.hpp"

namespace v2vrel
{

/// Average success and its factorization noise * laplace_x * laplace_y.
struct AverageReliability
{
    double value = 1.0;
    double noise_factor = 1.0;
    double laplace_x = 1.0;
    double laplace_y = 1.0;
};

/// Integral over one road of b l(x) / (1 + b l(x)) with b the effective threshold.
///
/// With exponential fading marks the Laplace functional of a PPP of intensity
/// p_I lambda is exp(-p_I lambda * this integral). The integrand is bounded by 1
/// (it tends to 1 where l diverges at the receiver), so the only care needed is
/// splitting at the receiver abscissa, the junction and the urban breakpoints.
QuadratureResult interference_integral(Road road, const Channel &channel, double beta_prime, const Position &rx,
                                       const RoadExtent &extent, const QuadratureOptions &options = {});

// E exp(-b I(Phi_road)) for the scenario's traffic on one road.
double laplace_factor(Road road, const Position &tx, const Scenario &scenario, const QuadratureOptions &options = {});

// Throws DomainError when tx coincides with the receiver.
AverageReliability average_success(const Position &tx, const Scenario &scenario, const QuadratureOptions &options = {});

enum class PiStatus
{
    Constrained,   // target is binding at the returned probability
    Unconstrained, // even p_I = 1 meets the target
    Infeasible,    // target missed without any interference
};

struct OptimalTransmitProbability
{
    double value = 0.0;
    PiStatus status = PiStatus::Constrained;
    double achieved = 0.0; // average success at value
};

/// Largest p_I in [0, 1] with average success at design.tx_at_target >= design.target.
///
/// Average success is non-increasing in p_I (both Laplace exponents are linear in
/// p_I), so the interference integrals are computed once and the root is
/// bracketed by 40 bisection steps on [0, 1].
OptimalTransmitProbability solve_optimal_pi(const DesignSpec &design, const Scenario &scenario);

} // namespace v2vrel

#endif
