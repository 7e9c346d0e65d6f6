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

// Random operators shared by the unit tests.

#ifndef ENTCAP_TESTS_SUPPORT_HPP
#define ENTCAP_TESTS_SUPPORT_HPP

#include <random>

#include "entcap/smallmat.hpp"

namespace entcap::testing {

inline Complex gaussian_complex(std::mt19937_64 &rng) {
    std::normal_distribution<double> n;
    return {n(rng), n(rng)};
}

template <std::size_t N>
SquareMatrix<N> random_matrix(std::mt19937_64 &rng) {
    SquareMatrix<N> m;
    for (std::size_t r = 0; r < N; r++) {
        for (std::size_t c = 0; c < N; c++) {
            m(r, c) = gaussian_complex(rng);
        }
    }
    return m;
}

template <std::size_t N>
SquareMatrix<N> random_hermitian(std::mt19937_64 &rng) {
    auto m = random_matrix<N>(rng);
    return (m + m.adjoint()) * Complex(0.5);
}

template <std::size_t N>
SquareMatrix<N> random_unitary(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0, 6.283185307179586);
    return unitary_exp(random_hermitian<N>(rng), u(rng));
}

/// Full-rank random state: A A^dagger / Tr.
inline DensityMatrix random_state(std::mt19937_64 &rng) {
    auto a = random_matrix<4>(rng);
    Mat4 m = a * a.adjoint();
    return DensityMatrix::repaired(m * Complex(1.0 / m.trace().real()), 1.0);
}

inline Mat2 random_qubit_state(std::mt19937_64 &rng) {
    auto a = random_matrix<2>(rng);
    Mat2 m = a * a.adjoint();
    return m * Complex(1.0 / m.trace().real());
}

}  // namespace entcap::testing

#endif
