// Copyright 2026 The entcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entcap/scenarios.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace entcap {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr std::array<ScenarioId, 6> kAllScenarios = {
    ScenarioId::IsingTunable,        ScenarioId::IsingUntunable,        ScenarioId::XyzTunable,
    ScenarioId::XyFamilyTunable,     ScenarioId::IsingTunableLaplace,   ScenarioId::IsingUntunableLaplace,
};

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Monte Carlo substream indices, one per noisy stage.
enum Stage : std::uint64_t {
    kPrepQubit1 = 0,
    kPrepQubit2 = 1,
    kInteraction = 2,
    kInteractionSecond = 3,
};

AngleDistribution noise(ScenarioId id, double mean, double width) {
    return uses_laplace_noise(id) ? AngleDistribution::laplace(mean, width) : AngleDistribution::gaussian(mean, width);
}

AngleGate pulse_gate(Axis axis, int qubit) {
    return {[axis, qubit](double a) { return pulse_unitary({axis, qubit, a}); }, on_qubit(spin(axis), qubit)};
}

Mat4 pauli_pair(Axis axis) {
    return kron(pauli::of(axis), pauli::of(axis));
}

DensityMatrix ising_interaction(const ScenarioConfig &c, const DensityMatrix &rho) {
    AngleGate zz{[](double a) { return exchange_unitary({0, 0, a}); }, spin_spin(Axis::Z)};
    return apply_noisy_gate(rho, zz, noise(c.id, kPi, c.interaction_width), method_for_stage(c.method, kInteraction));
}

DensityMatrix refocused_interaction(const ScenarioConfig &c, const DensityMatrix &rho) {
    const double t1 = c.refocus.j_tau1();
    const double t2 = c.refocus.j_tau2();
    if (c.refocus_noise == RefocusNoise::PulseAngle) {
        AngleGate refocus{[t1, t2](double a) { return refocus_product(t1, t2, a); }, std::nullopt, 4};
        return apply_noisy_gate(rho, refocus, noise(c.id, c.refocus.pulse_angle(), c.interaction_width),
                                method_for_stage(c.method, kInteraction));
    }
    // With an exact pi pulse the sequence reduces to exp[-i (2 J tau1 - J tau2) SzSz].
    const double split = c.interaction_width / std::sqrt(2.0);
    AngleGate first{[](double a) { return exchange_unitary({0, 0, 2 * a}); }, spin_spin(Axis::Z) * 2.0};
    AngleGate second{[](double b) { return exchange_unitary({0, 0, -b}); }, -spin_spin(Axis::Z)};
    auto mid = apply_noisy_gate(rho, first, noise(c.id, t1, split), method_for_stage(c.method, kInteraction));
    return apply_noisy_gate(mid, second, noise(c.id, t2, split), method_for_stage(c.method, kInteractionSecond));
}

DensityMatrix xyz_interaction(const ScenarioConfig &c, const DensityMatrix &rho) {
    const double mean_minus = c.mean_theta_minus.value_or(0);
    AngleGate plus{[](double tp) { return exchange_unitary(ExchangeAngles::from_pauli_units(tp / 2, tp / 2, 0)); },
                   (pauli_pair(Axis::X) + pauli_pair(Axis::Y)) * 0.5};
    AngleGate minus{[](double tm) { return exchange_unitary(ExchangeAngles::from_pauli_units(tm / 2, -tm / 2, 0)); },
                    (pauli_pair(Axis::X) - pauli_pair(Axis::Y)) * 0.5};
    auto mid = apply_noisy_gate(rho, plus, AngleDistribution::gaussian(kPi / 4, c.interaction_width),
                                method_for_stage(c.method, kInteraction));
    auto out = apply_noisy_gate(mid, minus, AngleDistribution::gaussian(mean_minus, c.interaction_width),
                                method_for_stage(c.method, kInteractionSecond));
    return evolve(out, exchange_unitary(ExchangeAngles::from_pauli_units(0, 0, c.phi.value_or(0))));
}

DensityMatrix xy_family_interaction(const ScenarioConfig &c, const DensityMatrix &rho) {
    AngleGate gate{[](double j) { return exchange_unitary({j, j, 0}); }, spin_spin(Axis::X) + spin_spin(Axis::Y)};
    return apply_noisy_gate(rho, gate, AngleDistribution::gaussian(kPi / 4, c.interaction_width),
                            method_for_stage(c.method, kInteraction));
}

DensityMatrix interact(const ScenarioConfig &c, const DensityMatrix &rho) {
    switch (c.id) {
        case ScenarioId::IsingTunable:
        case ScenarioId::IsingTunableLaplace:
            return ising_interaction(c, rho);
        case ScenarioId::IsingUntunable:
        case ScenarioId::IsingUntunableLaplace:
            return refocused_interaction(c, rho);
        case ScenarioId::XyzTunable:
            return xyz_interaction(c, rho);
        case ScenarioId::XyFamilyTunable:
            return xy_family_interaction(c, rho);
    }
    fail(ErrorCode::InvalidArgument, "unknown scenario");
}

}  // namespace

std::string_view scenario_name(ScenarioId id) {
    switch (id) {
        case ScenarioId::IsingTunable:
            return "ising-tunable";
        case ScenarioId::IsingUntunable:
            return "ising-untunable";
        case ScenarioId::XyzTunable:
            return "xyz-tunable";
        case ScenarioId::XyFamilyTunable:
            return "xy-family";
        case ScenarioId::IsingTunableLaplace:
            return "ising-laplace";
        case ScenarioId::IsingUntunableLaplace:
            return "ising-untunable-laplace";
    }
    return "unknown";
}

ScenarioId parse_scenario(std::string_view name) {
    for (auto id : kAllScenarios) {
        if (scenario_name(id) == name) {
            return id;
        }
    }
    fail(ErrorCode::InvalidArgument, "unknown scenario '" + std::string(name) + "'");
}

std::span<const ScenarioId> all_scenarios() {
    return kAllScenarios;
}

bool uses_laplace_noise(ScenarioId id) {
    return id == ScenarioId::IsingTunableLaplace || id == ScenarioId::IsingUntunableLaplace;
}

namespace {

DistributionKind noise_kind(ScenarioId id) {
    return uses_laplace_noise(id) ? DistributionKind::Laplace : DistributionKind::Gaussian;
}

}  // namespace

bool is_untunable(ScenarioId id) {
    return id == ScenarioId::IsingUntunable || id == ScenarioId::IsingUntunableLaplace;
}

std::string_view refocus_noise_name(RefocusNoise n) {
    return n == RefocusNoise::PulseAngle ? "pulse-angle" : "duration";
}

RefocusNoise parse_refocus_noise(std::string_view name) {
    if (name == "pulse-angle") {
        return RefocusNoise::PulseAngle;
    }
    if (name == "duration") {
        return RefocusNoise::Duration;
    }
    fail(ErrorCode::InvalidArgument, "unknown refocus noise mode '" + std::string(name) + "'");
}

void ScenarioConfig::validate() const {
    require(std::isfinite(prep_width) && prep_width >= 0, "preparation width must be finite and non-negative");
    require(std::isfinite(interaction_width) && interaction_width >= 0,
            "interaction width must be finite and non-negative");
    if (id != ScenarioId::XyzTunable) {
        require(!mean_theta_minus.has_value(), "mean theta minus only applies to xyz-tunable");
        require(!phi.has_value(), "phi only applies to xyz-tunable");
    } else {
        require(std::isfinite(mean_theta_minus.value_or(0)), "mean theta minus must be finite");
        require(std::isfinite(phi.value_or(0)), "phi must be finite");
    }
    validate_method(method);
}

DensityMatrix prepare_initial(ScenarioId id, double prep_width, const AveragingMethod &m) {
    require(std::isfinite(prep_width) && prep_width >= 0, "preparation width must be finite and non-negative");
    const auto start = DensityMatrix::basis(0);
    switch (id) {
        case ScenarioId::IsingTunable:
        case ScenarioId::IsingUntunable:
        case ScenarioId::IsingTunableLaplace:
        case ScenarioId::IsingUntunableLaplace: {
            const auto d = noise(id, kPi / 2, prep_width);
            auto one = apply_noisy_gate(start, pulse_gate(Axis::Y, 1), d, method_for_stage(m, kPrepQubit1));
            return apply_noisy_gate(one, pulse_gate(Axis::Y, 2), d, method_for_stage(m, kPrepQubit2));
        }
        case ScenarioId::XyzTunable:
        case ScenarioId::XyFamilyTunable:
            return apply_noisy_gate(start, pulse_gate(Axis::X, 2), AngleDistribution::gaussian(kPi, prep_width),
                                    method_for_stage(m, kPrepQubit2));
    }
    fail(ErrorCode::InvalidArgument, "unknown scenario");
}

DensityMatrix simulate(const ScenarioConfig &c) {
    c.validate();
    return interact(c, prepare_initial(c.id, c.prep_width, c.method));
}

Criterion predicate_for(const ScenarioConfig &c) {
    switch (c.id) {
        case ScenarioId::IsingTunable:
            return ising_gaussian_entangled(c.prep_width, c.interaction_width);
        case ScenarioId::IsingUntunable:
            return untunable_ising_entangled(c.prep_width, c.interaction_width);
        case ScenarioId::XyzTunable:
            return xyz_entangled(
                XyzReducedParams::from_noise(c.prep_width, c.interaction_width, c.mean_theta_minus.value_or(0)));
        case ScenarioId::XyFamilyTunable:
            return xy_family_entangled(c.prep_width, c.interaction_width);
        case ScenarioId::IsingTunableLaplace:
        case ScenarioId::IsingUntunableLaplace:
            return ising_laplace_entangled(c.prep_width, c.interaction_width);
    }
    fail(ErrorCode::InvalidArgument, "unknown scenario");
}

ScenarioResult run_scenario(const ScenarioConfig &c) {
    c.validate();
    ScenarioTimings timings;
    auto t0 = Clock::now();
    auto initial = prepare_initial(c.id, c.prep_width, c.method);
    timings.preparation_ms = elapsed_ms(t0);

    t0 = Clock::now();
    auto final_state = interact(c, initial);
    timings.interaction_ms = elapsed_ms(t0);

    t0 = Clock::now();
    auto v = verdict(final_state);
    auto predicate = predicate_for(c);
    double entropy = von_neumann_entropy(initial);
    timings.analysis_ms = elapsed_ms(t0);

    std::optional<std::uint64_t> seed;
    if (auto mc = std::get_if<MonteCarlo>(&c.method)) {
        seed = mc->seed;
    }
    return ScenarioResult{final_state, v, predicate, entropy, method_label(c.method, noise_kind(c.id)), seed, timings};
}

DensityMatrix xyz_independent_axes_state(const ScenarioConfig &c) {
    require(c.id == ScenarioId::XyzTunable, "independent-axes oracle only applies to xyz-tunable");
    c.validate();
    const double mean_minus = c.mean_theta_minus.value_or(0);
    const double width = c.interaction_width / std::sqrt(2.0);
    auto rho = prepare_initial(c.id, c.prep_width, c.method);
    AngleGate x_gate{[](double tx) { return exchange_unitary(ExchangeAngles::from_pauli_units(tx, 0, 0)); },
                     pauli_pair(Axis::X)};
    AngleGate y_gate{[](double ty) { return exchange_unitary(ExchangeAngles::from_pauli_units(0, ty, 0)); },
                     pauli_pair(Axis::Y)};
    rho = apply_noisy_gate(rho, x_gate, AngleDistribution::gaussian((kPi / 4 + mean_minus) / 2, width),
                           method_for_stage(c.method, kInteraction));
    rho = apply_noisy_gate(rho, y_gate, AngleDistribution::gaussian((kPi / 4 - mean_minus) / 2, width),
                           method_for_stage(c.method, kInteractionSecond));
    return evolve(rho, exchange_unitary(ExchangeAngles::from_pauli_units(0, 0, c.phi.value_or(0))));
}

XyFamilyWeights xy_family_populations(const DensityMatrix &rho) {
    Mat2 block({rho(1, 1), rho(1, 2), rho(2, 1), rho(2, 2)});
    auto spectrum = hermitian_eigensystem(block);
    return {rho(0, 0).real(), spectrum.eigenvalues[0], spectrum.eigenvalues[1]};
}

std::string_view boundary_axis_name(BoundaryAxis a) {
    return a == BoundaryAxis::PrepWidth ? "lambda" : "interaction";
}

BoundaryAxis parse_boundary_axis(std::string_view name) {
    if (name == "lambda" || name == "prep" || name == "prep-width") {
        return BoundaryAxis::PrepWidth;
    }
    if (name == "omega" || name == "capital-lambda" || name == "interaction" || name == "interaction-width") {
        return BoundaryAxis::InteractionWidth;
    }
    fail(ErrorCode::InvalidArgument, "unknown boundary axis '" + std::string(name) + "'");
}

namespace {

ScenarioConfig with_axis(ScenarioConfig c, BoundaryAxis axis, double value) {
    (axis == BoundaryAxis::PrepWidth ? c.prep_width : c.interaction_width) = value;
    return c;
}

// Sign change of a margin-like function on [lo, hi]: `inside(x)` is true on
// the entangled side.
template <typename Inside>
double bisect(Inside inside, double lo, double hi, double tolerance, int *iterations) {
    const bool lo_inside = inside(lo);
    int n = 0;
    while (hi - lo > tolerance && n < 200) {
        double mid = 0.5 * (lo + hi);
        (inside(mid) == lo_inside ? lo : hi) = mid;
        n++;
    }
    if (iterations) {
        *iterations = n;
    }
    return 0.5 * (lo + hi);
}

std::optional<double> closed_form_threshold(const ScenarioConfig &base, BoundaryAxis axis, double lo, double hi,
                                            double tolerance) {
    if (axis == BoundaryAxis::PrepWidth) {
        switch (base.id) {
            case ScenarioId::IsingTunable:
                return ising_lambda_max(base.interaction_width);
            case ScenarioId::IsingUntunable:
                return ising_lambda_max(2 * base.interaction_width);
            case ScenarioId::IsingTunableLaplace:
            case ScenarioId::IsingUntunableLaplace:
                return laplace_lambda_bound(base.interaction_width);
            default:
                break;
        }
    }
    auto inside = [&](double x) { return predicate_for(with_axis(base, axis, x)).margin > 0; };
    if (inside(lo) == inside(hi)) {
        return std::nullopt;
    }
    return bisect(inside, lo, hi, std::min(tolerance, 1e-12), nullptr);
}

}  // namespace

BoundaryReport boundary_bisect(const ScenarioConfig &base, BoundaryAxis axis, double lo, double hi,
                               double tolerance) {
    base.validate();
    require(std::isfinite(lo) && std::isfinite(hi) && lo >= 0 && lo < hi, "boundary bracket must satisfy 0 <= lo < hi");
    require(tolerance > 0, "bisection tolerance must be positive");

    auto min_pt = [&](double x) { return verdict(simulate(with_axis(base, axis, x))).min_pt_eigenvalue; };
    const double f_lo = min_pt(lo);
    const double f_hi = min_pt(hi);
    const double band = EntanglementVerdict{}.tolerance;
    const bool lo_boundary = std::abs(f_lo) <= band;
    const bool hi_boundary = std::abs(f_hi) <= band;
    if (!lo_boundary && !hi_boundary && (f_lo < 0) == (f_hi < 0)) {
        char msg[160];
        std::snprintf(msg, sizeof msg, "no entanglement transition in [%g, %g]: the simulated state is %s at both ends",
                      lo, hi, f_lo < 0 ? "entangled" : "separable");
        fail(ErrorCode::NoSignChange, msg);
    }

    BoundaryReport report;
    report.id = base.id;
    report.axis = axis;
    report.lo = lo;
    report.hi = hi;
    if (lo_boundary && !hi_boundary) {
        report.threshold = lo;
    } else if (hi_boundary && !lo_boundary) {
        report.threshold = hi;
    } else {
        report.threshold = bisect([&](double x) { return min_pt(x) < 0; }, lo, hi, tolerance, &report.iterations);
    }
    report.closed_form = closed_form_threshold(base, axis, lo, hi, tolerance);
    if (report.closed_form) {
        report.deviation = std::abs(report.threshold - *report.closed_form);
    }
    return report;
}

ValidationReport validate(const ValidationRequest &r) {
    validate_method(r.method);
    require(r.guard >= 0, "guard band must be non-negative");
    ValidationReport report;
    report.scenario = std::string(scenario_name(r.id));
    report.method = method_label(r.method, noise_kind(r.id));

    auto make_config = [&](double lambda, double width, double theta_minus) {
        ScenarioConfig c;
        c.id = r.id;
        c.prep_width = lambda;
        c.interaction_width = width;
        c.method = r.method;
        c.refocus = r.refocus;
        c.refocus_noise = r.refocus_noise;
        if (r.id == ScenarioId::XyzTunable) {
            c.mean_theta_minus = theta_minus;
            c.phi = r.phi;
        }
        return c;
    };

    std::vector<ScenarioConfig> points;
    if (r.samples > 0) {
        Rng rng = substream(r.seed, 0);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        auto draw = [&](std::pair<double, double> range) { return range.first + (range.second - range.first) * u(rng); };
        for (std::size_t k = 0; k < r.samples; k++) {
            double lambda = draw(r.prep_range);
            double width = draw(r.interaction_range);
            double theta_minus = draw(r.theta_minus_range);
            points.push_back(make_config(lambda, width, theta_minus));
        }
    } else {
        require(r.grid_points >= 1, "validation grid needs at least one point per axis");
        auto at = [&](std::pair<double, double> range, std::size_t k) {
            return r.grid_points == 1 ? range.first
                                      : range.first + (range.second - range.first) * k / (r.grid_points - 1);
        };
        for (std::size_t i = 0; i < r.grid_points; i++) {
            for (std::size_t j = 0; j < r.grid_points; j++) {
                points.push_back(make_config(at(r.prep_range, i), at(r.interaction_range, j), r.theta_minus_range.first));
            }
        }
    }

    report.points = points.size();
    report.min_compared_margin = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < points.size(); k++) {
        auto &c = points[k];
        c.method = method_for_stage(r.method, k);
        auto t0 = Clock::now();
        auto predicate = predicate_for(c);
        report.predicate_ms += elapsed_ms(t0);
        if (std::abs(predicate.margin) <= r.guard) {
            report.skipped++;
            continue;
        }
        t0 = Clock::now();
        auto state = r.id == ScenarioId::XyzTunable ? xyz_independent_axes_state(c) : simulate(c);
        auto v = verdict(state);
        report.simulation_ms += elapsed_ms(t0);
        report.compared++;
        report.min_compared_margin = std::min(report.min_compared_margin, std::abs(predicate.margin));
        const bool predicted = predicate.margin > 0;
        if (v.indeterminate || v.entangled != predicted) {
            report.disagreements++;
            report.max_disagreement_margin = std::max(report.max_disagreement_margin, std::abs(predicate.margin));
        }
    }
    if (report.compared == 0) {
        report.min_compared_margin = 0;
    }

    if (r.id == ScenarioId::XyFamilyTunable) {
        auto c = make_config(r.weights_lambda, r.weights_omega, 0);
        c.method = MonteCarlo{r.weight_samples, r.seed};
        auto t0 = Clock::now();
        auto simulated = xy_family_populations(simulate(c));
        report.simulation_ms += elapsed_ms(t0);
        auto expected = xy_family_weights(r.weights_lambda, r.weights_omega);
        double dev = std::max({std::abs(simulated.w00 - expected.w00), std::abs(simulated.w_plus - expected.w_plus),
                               std::abs(simulated.w_minus - expected.w_minus)});
        report.max_weight_deviation = dev;
        report.weights_expected = expected;
        report.weights_simulated = simulated;
        if (dev > r.weight_tolerance) {
            report.disagreements++;
        }
    }
    return report;
}

}  // namespace entcap
