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

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qjpeg/image.h"

namespace qjpeg::test_util {

/// Random image with at least one nonzero pixel.
inline PixelImage random_image(std::size_t side, unsigned depth, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint32_t> px(0, (std::uint32_t{1} << depth) - 1);
    std::vector<std::uint32_t> pixels(side * side);
    for (auto &p : pixels) {
        p = px(rng);
    }
    pixels[rng() % pixels.size()] = (std::uint32_t{1} << depth) - 1;
    return PixelImage(side, depth, std::move(pixels));
}

inline std::vector<std::complex<double>> random_state(unsigned n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<std::complex<double>> v(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &a : v) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto &a : v) {
        a /= std::sqrt(norm);
    }
    return v;
}

inline double sum(const std::vector<double> &v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return s;
}

inline double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double m = a.size() == b.size() ? 0.0 : 1e300;
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace qjpeg::test_util
