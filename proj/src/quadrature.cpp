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

#include "entcap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "entcap/error.hpp"

namespace entcap {

namespace {

// Implicit-shift QL on a symmetric tridiagonal matrix. `diag` receives the
// eigenvalues; `first` receives the first component of each normalized
// eigenvector, which is all Golub-Welsch needs.
void tridiagonal_ql(std::vector<double> &diag, std::vector<double> off, std::vector<double> &first) {
    const std::size_t n = diag.size();
    first.assign(n, 0.0);
    first[0] = 1.0;
    off.resize(n, 0.0);
    const double eps = std::numeric_limits<double>::epsilon();

    for (std::size_t l = 0; l < n; l++) {
        int iterations = 0;
        std::size_t m;
        do {
            for (m = l; m + 1 < n; m++) {
                double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(off[m]) <= eps * dd) {
                    break;
                }
            }
            if (m == l) {
                break;
            }
            if (iterations++ == 100) {
                fail(ErrorCode::NumericalFailure, "quadrature: tridiagonal QL did not converge");
            }
            double g = (diag[l + 1] - diag[l]) / (2 * off[l]);
            double r = std::hypot(g, 1.0);
            g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
            double s = 1, c = 1, p = 0;
            bool underflow = false;
            for (std::size_t i = m; i-- > l;) {
                double f = s * off[i];
                double b = c * off[i];
                r = std::hypot(f, g);
                off[i + 1] = r;
                if (r == 0) {
                    diag[i + 1] -= p;
                    off[m] = 0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                double zf = first[i + 1];
                first[i + 1] = s * first[i] + c * zf;
                first[i] = c * first[i] - s * zf;
            }
            if (underflow) {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0;
        } while (m != l);
    }
}

QuadratureRule golub_welsch(std::vector<double> diag, std::vector<double> off, double total_mass) {
    std::vector<double> first;
    tridiagonal_ql(diag, std::move(off), first);
    std::vector<std::size_t> order(diag.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });
    QuadratureRule rule;
    for (std::size_t k : order) {
        rule.nodes.push_back(diag[k]);
        rule.weights.push_back(total_mass * first[k] * first[k]);
    }
    return rule;
}

using Builder = QuadratureRule (*)(std::size_t);

std::shared_ptr<const QuadratureRule> cached(std::map<std::size_t, std::shared_ptr<const QuadratureRule>> &cache,
                                             std::size_t n, Builder build) {
    static std::mutex mu;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    auto rule = std::make_shared<const QuadratureRule>(build(n));
    cache.emplace(n, rule);
    return rule;
}

QuadratureRule build_hermite(std::size_t n) {
    std::vector<double> diag(n, 0.0), off(n, 0.0);
    for (std::size_t k = 1; k < n; k++) {
        off[k - 1] = std::sqrt(static_cast<double>(k) / 2);
    }
    return golub_welsch(diag, off, std::sqrt(std::numbers::pi));
}

QuadratureRule build_laguerre(std::size_t n) {
    std::vector<double> diag(n), off(n, 0.0);
    for (std::size_t k = 0; k < n; k++) {
        diag[k] = 2.0 * k + 1;
    }
    for (std::size_t k = 1; k < n; k++) {
        off[k - 1] = static_cast<double>(k);
    }
    return golub_welsch(diag, off, 1.0);
}

}  // namespace

std::shared_ptr<const QuadratureRule> gauss_hermite(std::size_t n) {
    require(n >= 1 && n <= 400, "Gauss-Hermite node count must be in [1, 400]");
    static std::map<std::size_t, std::shared_ptr<const QuadratureRule>> cache;
    return cached(cache, n, build_hermite);
}

std::shared_ptr<const QuadratureRule> gauss_laguerre(std::size_t n) {
    require(n >= 1 && n <= 400, "Gauss-Laguerre node count must be in [1, 400]");
    static std::map<std::size_t, std::shared_ptr<const QuadratureRule>> cache;
    return cached(cache, n, build_laguerre);
}

}  // namespace entcap
