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

#include <gtest/gtest.h>

#include "qjpeg/errors.h"

using namespace qjpeg;

TEST(GaussLegendre, LowOrderNodes) {
    QuadratureRule r1 = gauss_legendre(1);
    EXPECT_DOUBLE_EQ(r1.nodes[0], 0.0);
    EXPECT_DOUBLE_EQ(r1.weights[0], 2.0);
    QuadratureRule r2 = gauss_legendre(2);
    EXPECT_NEAR(r2.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(r2.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
    QuadratureRule r3 = gauss_legendre(3);
    EXPECT_NEAR(r3.nodes[2], std::sqrt(0.6), 1e-15);
    EXPECT_NEAR(r3.weights[1], 8.0 / 9.0, 1e-15);
}

TEST(GaussLegendre, ExactForPolynomialsUpToDegree2nMinus1) {
    for (unsigned n = 1; n <= 20; ++n) {
        QuadratureRule r = gauss_legendre(n);
        for (unsigned k = 0; k < 2 * n; ++k) {
            double q = 0.0;
            for (std::size_t i = 0; i < r.nodes.size(); ++i) q += r.weights[i] * std::pow(r.nodes[i], k);
            const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
            EXPECT_NEAR(q, exact, 1e-13) << n << " " << k;
        }
    }
}

TEST(GaussLegendre, HighOrderWeightsSumToTwo) {
    QuadratureRule r = gauss_legendre(200);
    double s = 0.0;
    for (double w : r.weights) s += w;
    EXPECT_NEAR(s, 2.0, 1e-12);
    EXPECT_THROW(gauss_legendre(0), ValidationError);
    EXPECT_THROW(gauss_legendre(513), ValidationError);
}

TEST(CompositeGaussLegendre, IntegratesGaussian) {
    QuadratureRule r = composite_gauss_legendre(-6.0, 6.0, 8, 16);
    EXPECT_EQ(r.nodes.size(), 128u);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::exp(-r.nodes[i] * r.nodes[i]);
    EXPECT_NEAR(s, std::sqrt(std::numbers::pi), 1e-12);
    EXPECT_THROW(composite_gauss_legendre(1.0, 1.0, 4, 1), ValidationError);
    EXPECT_THROW(composite_gauss_legendre(0.0, 1.0, 4, 0), ValidationError);
}
