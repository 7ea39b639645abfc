// Copyright 2026 The qjpeg Authors
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

#include "qjpeg/quadrature.h"

#include <cmath>
#include <numbers>

#include "qjpeg/errors.h"

namespace qjpeg {

QuadratureRule gauss_legendre(unsigned n) {
    if (n < 1 || n > 512) {
        throw ValidationError("gauss-legendre order must be in [1, 512]");
    }
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    // Roots are symmetric; solve for the upper half.
    const unsigned half = (n + 1) / 2;
    for (unsigned i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (unsigned k = 2; k <= n; ++k) {
                double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            // p1 = P_n(x), p0 = P_{n-1}(x).
            dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        if (n == 1) {
            x = 0.0;
            dp = 1.0;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

QuadratureRule composite_gauss_legendre(double a, double b, unsigned order, unsigned panels) {
    if (panels < 1) {
        throw ValidationError("composite rule needs at least one panel");
    }
    if (!(b > a)) {
        throw ValidationError("composite rule needs b > a");
    }
    const QuadratureRule base = gauss_legendre(order);
    const double h = (b - a) / panels;
    QuadratureRule out;
    out.nodes.reserve(order * panels);
    out.weights.reserve(order * panels);
    for (unsigned p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (unsigned i = 0; i < order; ++i) {
            out.nodes.push_back(mid + 0.5 * h * base.nodes[i]);
            out.weights.push_back(0.5 * h * base.weights[i]);
        }
    }
    return out;
}

}  // namespace qjpeg
