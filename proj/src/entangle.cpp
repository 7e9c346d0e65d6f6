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

#include "entcap/entangle.hpp"

#include <algorithm>
#include <string>

namespace entcap {

Mat4 partial_transpose(const Mat4 &rho, int subsystem) {
    require(subsystem == 1 || subsystem == 2, "partial_transpose: subsystem must be 1 or 2, got " + std::to_string(subsystem));
    Mat4 out;
    for (std::size_t r1 = 0; r1 < 2; r1++) {
        for (std::size_t r2 = 0; r2 < 2; r2++) {
            for (std::size_t c1 = 0; c1 < 2; c1++) {
                for (std::size_t c2 = 0; c2 < 2; c2++) {
                    std::size_t row = 2 * r1 + r2;
                    std::size_t col = 2 * c1 + c2;
                    std::size_t src_row = subsystem == 1 ? 2 * c1 + r2 : 2 * r1 + c2;
                    std::size_t src_col = subsystem == 1 ? 2 * r1 + c2 : 2 * c1 + r2;
                    out(row, col) = rho(src_row, src_col);
                }
            }
        }
    }
    return out;
}

Mat4 partial_transpose(const DensityMatrix &rho, int subsystem) {
    return partial_transpose(rho.matrix(), subsystem);
}

EntanglementVerdict verdict(const DensityMatrix &rho, double tolerance) {
    require(tolerance > 0, "verdict tolerance must be positive");
    auto second = hermitian_eigensystem(partial_transpose(rho, 2)).eigenvalues;
    auto first = hermitian_eigensystem(partial_transpose(rho, 1)).eigenvalues;
    for (std::size_t k = 0; k < 4; k++) {
        if (std::abs(first[k] - second[k]) > 1e-10) {
            fail(ErrorCode::NumericalFailure, "partial transpose spectra of the two subsystems differ");
        }
    }
    EntanglementVerdict v;
    v.tolerance = tolerance;
    v.min_pt_eigenvalue = second[0];
    for (double e : second) {
        if (e < 0) {
            v.negativity -= e;
        }
    }
    v.entangled = v.min_pt_eigenvalue < -tolerance;
    v.indeterminate = std::abs(v.min_pt_eigenvalue) <= tolerance;
    return v;
}

double von_neumann_entropy(const DensityMatrix &rho) {
    auto spectrum = hermitian_eigensystem(rho.matrix());
    double s = 0;
    for (double p : spectrum.eigenvalues) {
        if (p > 1e-14) {
            s -= p * std::log2(p);
        }
    }
    return std::clamp(s, 0.0, 2.0);
}

double mixedness_fraction(const DensityMatrix &rho) {
    return von_neumann_entropy(rho) / 2;
}

}  // namespace entcap
