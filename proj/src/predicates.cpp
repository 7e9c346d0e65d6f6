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

#include "entcap/predicates.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "entcap/error.hpp"

namespace entcap {

namespace {

void require_width(double w, const char *name) {
    require(std::isfinite(w) && w >= 0, std::string(name) + " must be finite and non-negative");
}

}  // namespace

std::string_view region_name(Region r) {
    switch (r) {
        case Region::Entangled:
            return "entangled";
        case Region::Separable:
            return "separable";
        case Region::Boundary:
            return "boundary";
    }
    return "unknown";
}

Criterion classify_margin(double margin) {
    if (margin > kBoundaryBand) {
        return {Region::Entangled, margin};
    }
    if (margin < -kBoundaryBand) {
        return {Region::Separable, margin};
    }
    return {Region::Boundary, margin};
}

Criterion ising_gaussian_entangled(double lambda, double omega) {
    require_width(lambda, "lambda");
    require_width(omega, "omega");
    const double l2 = lambda * lambda;
    const double lhs = std::exp(-l2) + 2 * std::exp(-0.5 * (l2 + omega * omega / 4));
    return classify_margin(lhs - 1);
}

double ising_lambda_max(double omega) {
    require_width(omega, "omega");
    const double w2 = omega * omega;
    const double inner = std::sqrt(std::exp(-w2 / 4) + 1) - std::exp(-w2 / 8);
    return std::sqrt(-2 * std::log(inner));
}

Criterion untunable_ising_entangled(double lambda, double capital_lambda) {
    require_width(capital_lambda, "capital lambda");
    return ising_gaussian_entangled(lambda, 2 * capital_lambda);
}

XyzReducedParams::XyzReducedParams(double a, double b, double z) : a_(a), b_(b), z_(z) {
    require(a > 0 && a <= 1, "xyz parameter a must lie in (0, 1]");
    require(b > 0 && b <= 1, "xyz parameter b must lie in (0, 1]");
    require(std::isfinite(z) && std::abs(z) <= 1, "xyz parameter z must satisfy |z| <= 1");
}

XyzReducedParams XyzReducedParams::from_noise(double lambda, double omega, double mean_theta_minus) {
    require_width(lambda, "lambda");
    require_width(omega, "omega");
    require(std::isfinite(mean_theta_minus), "mean theta minus must be finite");
    return XyzReducedParams(std::exp(-0.5 * lambda * lambda), std::exp(-2 * omega * omega),
                            std::cos(2 * mean_theta_minus));
}

Criterion xyz_entangled(const XyzReducedParams &p) {
    if (p.a() == 1) {
        return {Region::Entangled, std::numeric_limits<double>::infinity()};
    }
    const double ratio = (1 + p.a()) / (1 - p.a());
    const double radicand = 1 / (p.b() * p.b()) - ratio * ratio;
    return classify_margin(p.z() * p.z() - radicand);
}

bool xyz_sufficiently_entangled(double a, double b) {
    return b > (1 - a) / (1 + a);
}

bool xyz_sufficiently_separable(double a, double b) {
    return b < (1 - a) / std::sqrt(2 * (1 + a * a));
}

XyFamilyWeights xy_family_weights(double lambda, double omega) {
    require_width(lambda, "lambda");
    require_width(omega, "omega");
    const double a = std::exp(-0.5 * lambda * lambda);
    const double d = std::exp(-0.5 * omega * omega);
    XyFamilyWeights w;
    w.w00 = 0.5 * (1 - a);
    w.w_plus = 0.25 * (1 + a) * (1 - d);
    w.w_minus = 0.25 * (1 + a) * (1 + d);
    return w;
}

Criterion xy_family_entangled(double lambda, double omega) {
    auto w = xy_family_weights(lambda, omega);
    return classify_margin(w.w_minus - w.w_plus);
}

UntunableXyzParams::UntunableXyzParams(double mu, double eta, double delta) : mu_(mu), eta_(eta), delta_(delta) {
    require(mu >= 0 && mu <= 1, "mu must lie in [0, 1]");
    require(eta >= 0 && eta <= 1, "eta must lie in [0, 1]");
    require(std::isfinite(delta), "delta must be finite");
}

UntunableXyzParams UntunableXyzParams::from_noise(double capital_lambda, double lambda, double delta) {
    require_width(capital_lambda, "capital lambda");
    require_width(lambda, "lambda");
    return UntunableXyzParams(std::exp(-0.5 * capital_lambda * capital_lambda), std::exp(-0.5 * lambda * lambda),
                              delta);
}

double UntunableXyzParams::beta() const {
    return delta_ * std::numbers::pi / 2;
}
double UntunableXyzParams::delta_small() const {
    return delta_ * std::numbers::pi / 4;
}
double UntunableXyzParams::A() const {
    return std::cos(beta()) * std::cos(delta_small());
}
double UntunableXyzParams::B() const {
    return std::sin(beta()) * std::sin(delta_small());
}
double UntunableXyzParams::C() const {
    return std::sin(beta()) * std::cos(delta_small());
}
double UntunableXyzParams::D() const {
    return std::cos(beta()) * std::sin(delta_small());
}

double untunable_xyz_lhs(const UntunableXyzParams &p) {
    const double mu = p.mu();
    const double eta = p.eta();
    const double first = p.A() + p.B() * mu;
    const double last = p.C() * mu - p.D();
    return first * first * (1 - eta) * (1 - eta) * last * last - 0.25 * std::pow(mu, 4) * (1 + eta) * (1 + eta);
}

Criterion untunable_xyz_entangled(const UntunableXyzParams &p) {
    return classify_margin(-untunable_xyz_lhs(p));
}

Criterion ising_laplace_entangled(double lambda, double omega) {
    require_width(lambda, "lambda");
    require_width(omega, "omega");
    const double l2 = lambda * lambda;
    const double w2 = omega * omega;
    return classify_margin(1 - 4 * l2 * (w2 + 2 * l2 + 2 * l2 * w2));
}

double laplace_lambda_bound(double omega) {
    require_width(omega, "omega");
    const double w2 = omega * omega;
    const double s = 1 + w2;
    return 0.5 * std::sqrt((std::sqrt(1 + s * s) - w2) / s);
}

}  // namespace entcap
