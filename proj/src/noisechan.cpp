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

#include "entcap/noisechan.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "entcap/quadrature.hpp"

namespace entcap {

AngleDistribution AngleDistribution::gaussian(double mean, double sd) {
    require(std::isfinite(mean), "angle mean must be finite");
    require(std::isfinite(sd) && sd >= 0, "Gaussian standard deviation must be finite and non-negative");
    return {DistributionKind::Gaussian, mean, sd};
}

AngleDistribution AngleDistribution::laplace(double mean, double scale) {
    require(std::isfinite(mean), "angle mean must be finite");
    require(std::isfinite(scale) && scale >= 0, "Laplace scale must be finite and non-negative");
    return {DistributionKind::Laplace, mean, scale};
}

void validate_method(const AveragingMethod &m) {
    if (auto q = std::get_if<Quadrature>(&m)) {
        require(q->nodes >= 3 && q->nodes % 2 == 1 && q->nodes <= 400,
                "Gauss-Hermite node count must be odd and in [3, 400]");
        require(q->laguerre_nodes >= 1 && q->laguerre_nodes <= 400, "Gauss-Laguerre node count must be in [1, 400]");
    } else if (auto mc = std::get_if<MonteCarlo>(&m)) {
        require(mc->samples >= 1, "Monte Carlo needs at least one sample");
    }
}

std::string method_label(const AveragingMethod &m, DistributionKind kind) {
    if (std::holds_alternative<ClosedForm>(m)) {
        return "closed-form";
    }
    if (auto q = std::get_if<Quadrature>(&m)) {
        return "quadrature-" + std::to_string(kind == DistributionKind::Laplace ? q->laguerre_nodes : q->nodes);
    }
    return "monte-carlo-" + std::to_string(std::get<MonteCarlo>(m).samples);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

}  // namespace

AveragingMethod method_for_stage(const AveragingMethod &m, std::uint64_t stage) {
    if (auto mc = std::get_if<MonteCarlo>(&m)) {
        return MonteCarlo{mc->samples, derive_seed(mc->seed, stage)};
    }
    return m;
}

Rng substream(std::uint64_t seed, std::uint64_t index) {
    return Rng(derive_seed(seed, index));
}

Complex characteristic_weight(const AngleDistribution &d, double t) {
    const Complex carrier = std::polar(1.0, t * d.mean);
    if (d.kind == DistributionKind::Gaussian) {
        return carrier * std::exp(-0.5 * t * t * d.width * d.width);
    }
    return carrier / (1 + 4 * d.width * d.width * t * t);
}

double sample_angle(const AngleDistribution &d, Rng &rng) {
    if (d.deterministic()) {
        return d.mean;
    }
    if (d.kind == DistributionKind::Gaussian) {
        std::normal_distribution<double> normal(d.mean, d.width);
        return normal(rng);
    }
    // |a - mean| is exponential with mean 2w.
    std::exponential_distribution<double> magnitude(1 / (2 * d.width));
    std::bernoulli_distribution sign(0.5);
    double m = magnitude(rng);
    return sign(rng) ? d.mean + m : d.mean - m;
}

namespace {

void check_hermitian_pairs(const std::vector<Harmonic> &terms) {
    for (const auto &h : terms) {
        require(std::isfinite(h.multiplier), "harmonic multiplier must be finite");
        bool paired = false;
        for (const auto &g : terms) {
            if (std::abs(g.multiplier + h.multiplier) <= 1e-12 &&
                approx_equal(g.coefficient, h.coefficient.adjoint(), 1e-12)) {
                paired = true;
                break;
            }
        }
        require(paired, "harmonic family is not Hermitian: C_{-t} != C_t^dagger");
    }
}

Mat4 harmonic_sum(std::span<const Harmonic> terms, double angle) {
    Mat4 m;
    for (const auto &h : terms) {
        m += h.coefficient * std::polar(1.0, h.multiplier * angle);
    }
    return m;
}

}  // namespace

StateFamily StateFamily::from_harmonics(std::vector<Harmonic> terms) {
    check_hermitian_pairs(terms);
    StateFamily f;
    f.harmonics_ = std::move(terms);
    return f;
}

StateFamily StateFamily::from_evaluator(Evaluator e) {
    require(static_cast<bool>(e), "state family evaluator is empty");
    StateFamily f;
    f.evaluator_ = std::move(e);
    return f;
}

StateFamily StateFamily::from_both(std::vector<Harmonic> terms, Evaluator e) {
    StateFamily f = from_harmonics(std::move(terms));
    require(static_cast<bool>(e), "state family evaluator is empty");
    f.evaluator_ = std::move(e);
    return f;
}

Mat4 StateFamily::at(double angle) const {
    if (evaluator_) {
        return evaluator_(angle);
    }
    return harmonic_sum(*harmonics_, angle);
}

std::span<const Harmonic> StateFamily::harmonics() const {
    require(harmonics_.has_value(), "state family has no harmonic expansion");
    return *harmonics_;
}

namespace {

std::vector<Harmonic> harmonics_from_generator(const DensityMatrix &rho, const Mat4 &generator) {
    auto spectrum = hermitian_eigensystem(generator);
    std::array<Mat4, 4> projectors;
    for (std::size_t k = 0; k < 4; k++) {
        auto v = spectrum.eigenvector(k);
        for (std::size_t r = 0; r < 4; r++) {
            for (std::size_t c = 0; c < 4; c++) {
                projectors[k](r, c) = v[r] * std::conj(v[c]);
            }
        }
    }
    // e^{-i a g_k} P_k rho P_l e^{i a g_l} contributes to multiplier g_l - g_k.
    std::vector<Harmonic> terms;
    for (std::size_t k = 0; k < 4; k++) {
        for (std::size_t l = 0; l < 4; l++) {
            Mat4 c = projectors[k] * rho.matrix() * projectors[l];
            double t = spectrum.eigenvalues[l] - spectrum.eigenvalues[k];
            bool merged = false;
            for (auto &h : terms) {
                if (std::abs(h.multiplier - t) <= 1e-9) {
                    h.coefficient += c;
                    merged = true;
                    break;
                }
            }
            if (!merged) {
                terms.push_back({t, c});
            }
        }
    }
    for (auto &h : terms) {
        if (std::abs(h.multiplier) <= 1e-9) {
            h.multiplier = 0;
        }
    }
    return terms;
}

// Exact discrete Fourier extraction for multipliers t = k/2, |k| <= K. The
// family is 4*pi periodic, and sampling 4K points leaves no aliasing.
std::vector<Harmonic> harmonics_from_samples(const std::function<Mat4(double)> &rho_at, int max_twice) {
    require(max_twice >= 0 && max_twice <= 64, "harmonic bound out of range");
    const int samples = std::max(4 * max_twice, 4);
    std::vector<Mat4> values(samples);
    std::vector<double> angles(samples);
    for (int j = 0; j < samples; j++) {
        angles[j] = 4 * std::numbers::pi * j / samples;
        values[j] = rho_at(angles[j]);
    }
    std::vector<Harmonic> terms;
    for (int k = -max_twice; k <= max_twice; k++) {
        const double t = 0.5 * k;
        Mat4 c;
        for (int j = 0; j < samples; j++) {
            c += values[j] * std::polar(1.0 / samples, -t * angles[j]);
        }
        double norm = 0;
        for (const auto &x : c.entries()) {
            norm = std::max(norm, std::abs(x));
        }
        if (norm > 1e-15) {
            terms.push_back({t, c});
        }
    }
    // Symmetrize so C_{-t} is exactly C_t^dagger.
    for (auto &h : terms) {
        for (auto &g : terms) {
            if (&g != &h && g.multiplier == -h.multiplier && h.multiplier > 0) {
                Mat4 avg = (h.coefficient + g.coefficient.adjoint()) * 0.5;
                h.coefficient = avg;
                g.coefficient = avg.adjoint();
            }
        }
        if (h.multiplier == 0) {
            h.coefficient = (h.coefficient + h.coefficient.adjoint()) * 0.5;
        }
    }
    for (double probe : {0.7317, 2.9, -5.3}) {
        if (!approx_equal(harmonic_sum(terms, probe), rho_at(probe), 1e-10)) {
            fail(ErrorCode::NumericalFailure, "gate family has harmonics beyond the declared bound");
        }
    }
    return terms;
}

DensityMatrix finish(const Mat4 &m, double drift) {
    return DensityMatrix::repaired(m, drift);
}

}  // namespace

StateFamily gate_family(const DensityMatrix &rho, const AngleGate &gate) {
    require(static_cast<bool>(gate.unitary) || gate.generator.has_value(), "angle gate has no unitary");
    std::function<Mat4(double)> rho_at;
    if (gate.unitary) {
        auto unitary = gate.unitary;
        Mat4 state = rho.matrix();
        rho_at = [unitary, state](double a) {
            Mat4 u = unitary(a);
            return u * state * u.adjoint();
        };
    }
    if (gate.generator) {
        auto terms = harmonics_from_generator(rho, *gate.generator);
        if (rho_at) {
            return StateFamily::from_both(std::move(terms), std::move(rho_at));
        }
        return StateFamily::from_harmonics(std::move(terms));
    }
    auto terms = harmonics_from_samples(rho_at, gate.max_twice_multiplier);
    return StateFamily::from_both(std::move(terms), std::move(rho_at));
}

DensityMatrix average_state(const StateFamily &f, const AngleDistribution &d, const AveragingMethod &m) {
    validate_method(m);
    if (d.deterministic()) {
        return finish(f.at(d.mean), 1e-10);
    }

    if (std::holds_alternative<ClosedForm>(m)) {
        require(f.has_harmonics(), "closed-form averaging needs a harmonic expansion");
        Mat4 sum;
        for (const auto &h : f.harmonics()) {
            sum += h.coefficient * characteristic_weight(d, h.multiplier);
        }
        return finish(sum, 1e-12);
    }

    if (auto q = std::get_if<Quadrature>(&m)) {
        Mat4 sum;
        if (d.kind == DistributionKind::Gaussian) {
            auto rule = gauss_hermite(q->nodes);
            const double spread = std::sqrt(2.0) * d.width;
            for (std::size_t k = 0; k < rule->nodes.size(); k++) {
                sum += f.at(d.mean + spread * rule->nodes[k]) * (rule->weights[k] / std::sqrt(std::numbers::pi));
            }
        } else {
            // (1/4w) e^{-|x|/2w} splits into two half-lines with x = 2w u.
            auto rule = gauss_laguerre(q->laguerre_nodes);
            const double spread = 2 * d.width;
            for (std::size_t k = 0; k < rule->nodes.size(); k++) {
                const double offset = spread * rule->nodes[k];
                sum += (f.at(d.mean + offset) + f.at(d.mean - offset)) * (0.5 * rule->weights[k]);
            }
        }
        return finish(sum, 1e-12);
    }

    const auto &mc = std::get<MonteCarlo>(m);
    Rng rng = substream(mc.seed, 0);
    Mat4 sum;
    for (std::size_t k = 0; k < mc.samples; k++) {
        sum += f.at(sample_angle(d, rng));
    }
    sum *= 1.0 / static_cast<double>(mc.samples);
    return finish(sum, 1e-10);
}

DensityMatrix apply_noisy_gate(const DensityMatrix &rho, const AngleGate &gate, const AngleDistribution &d,
                               const AveragingMethod &m) {
    return average_state(gate_family(rho, gate), d, m);
}

}  // namespace entcap
