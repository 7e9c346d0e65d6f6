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

#include "entcap/smallmat.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace entcap {

Complex make_complex(double re, double im) {
    require(std::isfinite(re) && std::isfinite(im), "complex component is not finite");
    return {re, im};
}

Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 m;
    for (std::size_t r1 = 0; r1 < 2; r1++) {
        for (std::size_t c1 = 0; c1 < 2; c1++) {
            for (std::size_t r2 = 0; r2 < 2; r2++) {
                for (std::size_t c2 = 0; c2 < 2; c2++) {
                    m(2 * r1 + r2, 2 * c1 + c2) = a(r1, c1) * b(r2, c2);
                }
            }
        }
    }
    return m;
}

namespace pauli {

Mat2 identity() {
    return Mat2::identity();
}
Mat2 x() {
    return Mat2({0.0, 1.0, 1.0, 0.0});
}
Mat2 y() {
    return Mat2({0.0, Complex{0, -1}, Complex{0, 1}, 0.0});
}
Mat2 z() {
    return Mat2({1.0, 0.0, 0.0, -1.0});
}
Mat2 of(Axis axis) {
    switch (axis) {
        case Axis::X:
            return x();
        case Axis::Y:
            return y();
        case Axis::Z:
            return z();
    }
    fail(ErrorCode::InvalidArgument, "unknown axis");
}

}  // namespace pauli

Mat2 spin(Axis axis) {
    return pauli::of(axis) * 0.5;
}

Mat4 on_qubit(const Mat2 &op, int qubit) {
    require(qubit == 1 || qubit == 2, "qubit index must be 1 or 2, got " + std::to_string(qubit));
    return qubit == 1 ? kron(op, Mat2::identity()) : kron(Mat2::identity(), op);
}

Mat4 spin_spin(Axis axis) {
    return kron(spin(axis), spin(axis));
}

namespace {

template <std::size_t N>
double frobenius_sq(const SquareMatrix<N> &m) {
    double s = 0;
    for (const auto &x : m.entries()) {
        s += std::norm(x);
    }
    return s;
}

template <std::size_t N>
double off_diagonal_sq(const SquareMatrix<N> &m) {
    double s = 0;
    for (std::size_t r = 0; r < N; r++) {
        for (std::size_t c = 0; c < N; c++) {
            if (r != c) {
                s += std::norm(m(r, c));
            }
        }
    }
    return s;
}

// Rotate the phase of each column so its first non-negligible entry is real
// and positive.
template <std::size_t N>
void fix_phases(SquareMatrix<N> &v) {
    for (std::size_t c = 0; c < N; c++) {
        for (std::size_t r = 0; r < N; r++) {
            double mag = std::abs(v(r, c));
            if (mag > 1e-12) {
                Complex phase = std::conj(v(r, c)) / mag;
                for (std::size_t k = 0; k < N; k++) {
                    v(k, c) *= phase;
                }
                v(r, c) = mag;
                break;
            }
        }
    }
}

template <std::size_t N>
bool lexicographically_before(const SquareMatrix<N> &v, std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < N; r++) {
        double da = v(r, a).real() - v(r, b).real();
        if (std::abs(da) > 1e-12) {
            return da > 0;
        }
        double di = v(r, a).imag() - v(r, b).imag();
        if (std::abs(di) > 1e-12) {
            return di > 0;
        }
    }
    return false;
}

}  // namespace

template <std::size_t N>
HermitianSpectrum<N> hermitian_eigensystem(const SquareMatrix<N> &h) {
    require(is_hermitian(h, 1e-10), "hermitian_eigensystem: input is not Hermitian");
    SquareMatrix<N> a = (h + h.adjoint()) * 0.5;
    SquareMatrix<N> v = SquareMatrix<N>::identity();
    const double scale = frobenius_sq(a);

    for (int sweep = 0; sweep < 100; sweep++) {
        double off = off_diagonal_sq(a);
        if (off == 0 || off <= 1e-34 * scale) {
            break;
        }
        for (std::size_t p = 0; p + 1 < N; p++) {
            for (std::size_t q = p + 1; q < N; q++) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0) {
                    continue;
                }
                const Complex phase_conj = std::conj(apq) / mag;
                const double theta = (a(q, q).real() - a(p, p).real()) / (2 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;

                // J = D R, D = diag(1, .., conj(phase) at q, ..), R a real plane rotation.
                SquareMatrix<N> j = SquareMatrix<N>::identity();
                j(p, p) = c;
                j(p, q) = s;
                j(q, p) = -s * phase_conj;
                j(q, q) = c * phase_conj;

                a = j.adjoint() * a * j;
                a(p, q) = 0;
                a(q, p) = 0;
                for (std::size_t k = 0; k < N; k++) {
                    a(k, k) = a(k, k).real();
                }
                v = v * j;
            }
        }
    }
    if (off_diagonal_sq(a) > 1e-24 * std::max(scale, 1.0)) {
        fail(ErrorCode::NumericalFailure, "hermitian_eigensystem: Jacobi sweeps did not converge");
    }

    fix_phases(v);

    std::array<std::size_t, N> order;
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });
    // Degenerate runs are ordered by the phase-fixed eigenvectors.
    for (std::size_t begin = 0; begin < N;) {
        std::size_t end = begin + 1;
        while (end < N && std::abs(a(order[end], order[end]).real() - a(order[begin], order[begin]).real()) <= 1e-12) {
            end++;
        }
        std::sort(order.begin() + begin, order.begin() + end, [&](std::size_t x, std::size_t y) {
            return lexicographically_before(v, x, y);
        });
        begin = end;
    }

    HermitianSpectrum<N> out;
    for (std::size_t k = 0; k < N; k++) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < N; r++) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

template <std::size_t N>
SquareMatrix<N> unitary_exp(const SquareMatrix<N> &h, double angle_scale) {
    require(is_hermitian(h, 1e-10), "unitary_exp: generator is not Hermitian");
    if (angle_scale == 0) {
        return SquareMatrix<N>::identity();
    }
    auto spectrum = hermitian_eigensystem(h);
    std::array<Complex, N> phases;
    for (std::size_t k = 0; k < N; k++) {
        phases[k] = std::polar(1.0, -angle_scale * spectrum.eigenvalues[k]);
    }
    return spectrum.vectors * SquareMatrix<N>::diagonal(phases) * spectrum.vectors.adjoint();
}

template HermitianSpectrum<2> hermitian_eigensystem(const SquareMatrix<2> &);
template HermitianSpectrum<4> hermitian_eigensystem(const SquareMatrix<4> &);
template SquareMatrix<2> unitary_exp(const SquareMatrix<2> &, double);
template SquareMatrix<4> unitary_exp(const SquareMatrix<4> &, double);

DensityMatrix::DensityMatrix(const Mat4 &m) : m_(m) {
    for (const auto &x : m.entries()) {
        require(std::isfinite(x.real()) && std::isfinite(x.imag()), "density matrix has non-finite entries");
    }
    require(is_hermitian(m, tol::kHermitian), "density matrix is not Hermitian");
    require(std::abs(m.trace() - 1.0) <= tol::kTrace, "density matrix trace differs from 1");
    auto spectrum = hermitian_eigensystem(m);
    require(spectrum.eigenvalues[0] >= -tol::kNegativeEig, "density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::repaired(const Mat4 &m, double drift) {
    if (distance(m, m.adjoint()) > drift || std::abs(m.trace() - 1.0) > drift) {
        fail(ErrorCode::NumericalFailure, "state drifted beyond tolerance before repair");
    }
    Mat4 h = (m + m.adjoint()) * 0.5;
    h *= 1.0 / h.trace().real();
    return DensityMatrix(h);
}

DensityMatrix DensityMatrix::pure(const std::array<Complex, 4> &amplitudes) {
    double n = 0;
    for (const auto &x : amplitudes) {
        n += std::norm(x);
    }
    require(std::abs(n - 1) <= 1e-12, "pure state amplitudes are not normalized");
    Mat4 m;
    for (std::size_t r = 0; r < 4; r++) {
        for (std::size_t c = 0; c < 4; c++) {
            m(r, c) = amplitudes[r] * std::conj(amplitudes[c]);
        }
    }
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::basis(std::size_t k) {
    require(k < 4, "basis index out of range");
    Mat4 m;
    m(k, k) = 1;
    return DensityMatrix(m, Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(Mat4::identity() * 0.25, Unchecked{});
}

DensityMatrix DensityMatrix::product(const Mat2 &a, const Mat2 &b) {
    return DensityMatrix(kron(a, b));
}

DensityMatrix evolve(const DensityMatrix &rho, const Mat4 &u) {
    require(is_unitary(u, tol::kOperator), "evolve: operator is not unitary");
    return DensityMatrix::repaired(u * rho.matrix() * u.adjoint(), 1e-9);
}

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma) {
    auto spectrum = hermitian_eigensystem(rho.matrix() - sigma.matrix());
    double s = 0;
    for (double e : spectrum.eigenvalues) {
        s += std::abs(e);
    }
    return 0.5 * s;
}

double purity(const DensityMatrix &rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

}  // namespace entcap
