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

#include "entcap/hamiltonians.hpp"

#include <string>

namespace entcap {

std::string_view model_name(ExchangeModel model) {
    switch (model) {
        case ExchangeModel::Ising:
            return "ising";
        case ExchangeModel::XY:
            return "xy";
        case ExchangeModel::XXZ:
            return "xxz";
        case ExchangeModel::Heisenberg:
            return "heisenberg";
        case ExchangeModel::XYZ:
            return "xyz";
    }
    return "unknown";
}

ExchangeModel ExchangeCouplings::classify() const {
    if (jx == 0 && jy == 0 && jz != 0) {
        return ExchangeModel::Ising;
    }
    if (jx == jy && jx != 0) {
        if (jz == 0) {
            return ExchangeModel::XY;
        }
        if (jz == jx) {
            return ExchangeModel::Heisenberg;
        }
        return ExchangeModel::XXZ;
    }
    return ExchangeModel::XYZ;
}

RefocusSchedule::RefocusSchedule(double j_tau1, double j_tau2, double pulse_angle)
    : j_tau1_(j_tau1), j_tau2_(j_tau2), pulse_angle_(pulse_angle) {
    require(std::isfinite(j_tau1) && std::isfinite(j_tau2) && std::isfinite(pulse_angle),
            "refocus schedule angles must be finite");
    require(std::abs(2 * j_tau1 - j_tau2 - std::numbers::pi) <= 1e-12,
            "refocus schedule must satisfy 2 J tau1 - J tau2 = pi");
    require(j_tau2 != j_tau1, "refocus schedule with J tau1 == J tau2 makes the pulse angle irrelevant");
}

RefocusSchedule RefocusSchedule::standard() {
    return RefocusSchedule(3 * std::numbers::pi / 4, std::numbers::pi / 2);
}

RefocusSchedule RefocusSchedule::with_pulse_angle(double angle) const {
    return RefocusSchedule(j_tau1_, j_tau2_, angle);
}

Mat4 exchange_hamiltonian(const ExchangeCouplings &c) {
    return spin_spin(Axis::X) * c.jx + spin_spin(Axis::Y) * c.jy + spin_spin(Axis::Z) * c.jz;
}

Mat4 exchange_unitary(const ExchangeAngles &a) {
    // On {|01>,|10>}: H = (theta_plus/4) sigma_x - phi/4.
    // On {|00>,|11>}: H = (theta_minus/4) sigma_x + phi/4.
    const Complex i{0, 1};
    const double qp = a.theta_plus() / 4;
    const double qm = a.theta_minus() / 4;
    const Complex odd_phase = std::polar(1.0, a.phi / 4);
    const Complex even_phase = std::polar(1.0, -a.phi / 4);

    Mat4 u;
    u(1, 1) = odd_phase * std::cos(qp);
    u(2, 2) = odd_phase * std::cos(qp);
    u(1, 2) = -i * odd_phase * std::sin(qp);
    u(2, 1) = -i * odd_phase * std::sin(qp);
    u(0, 0) = even_phase * std::cos(qm);
    u(3, 3) = even_phase * std::cos(qm);
    u(0, 3) = -i * even_phase * std::sin(qm);
    u(3, 0) = -i * even_phase * std::sin(qm);
    return u;
}

Mat4 pulse_unitary(const PulseSpec &p) {
    require(std::isfinite(p.angle), "pulse angle must be finite");
    const Complex i{0, 1};
    Mat2 single = pauli::identity() * std::cos(p.angle / 2) - i * std::sin(p.angle / 2) * pauli::of(p.axis);
    return on_qubit(single, p.qubit);
}

SuTriple<4> spin_triple(int qubit) {
    return {on_qubit(spin(Axis::Z), qubit), on_qubit(spin(Axis::X), qubit), on_qubit(spin(Axis::Y), qubit)};
}

SuTriple<2> spin_triple() {
    return {spin(Axis::Z), spin(Axis::X), spin(Axis::Y)};
}

template <std::size_t N>
SquareMatrix<N> conjugate_generator(double angle, const SuTriple<N> &t) {
    const Complex i{0, 1};
    auto commutator = [](const SquareMatrix<N> &a, const SquareMatrix<N> &b) { return a * b - b * a; };
    require(approx_equal(commutator(t.x, t.y), i * t.z, 1e-10) && approx_equal(commutator(t.y, t.z), i * t.x, 1e-10) &&
                approx_equal(commutator(t.z, t.x), i * t.y, 1e-10),
            "conjugate_generator: operators do not satisfy su(2) commutation relations");
    SquareMatrix<N> u = unitary_exp(t.z, angle);
    return u * t.x * u.adjoint();
}

template SquareMatrix<2> conjugate_generator(double, const SuTriple<2> &);
template SquareMatrix<4> conjugate_generator(double, const SuTriple<4> &);

Mat4 refocus_product(double j_tau1, double j_tau2, double pulse_angle) {
    const Mat4 pulse = pulse_unitary({Axis::X, 1, pulse_angle});
    const Mat4 first = exchange_unitary({0, 0, j_tau1});
    const Mat4 second = exchange_unitary({0, 0, j_tau2 - j_tau1});
    return pulse * second * pulse.adjoint() * first;
}

Mat4 refocused_unitary(const RefocusSchedule &s) {
    return refocus_product(s.j_tau1(), s.j_tau2(), s.pulse_angle());
}

}  // namespace entcap
