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

#include "qjpeg/synthetic.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "qjpeg/errors.h"

namespace qjpeg {

namespace {

struct Ellipse {
    double intensity;
    double semi_x;
    double semi_y;
    double cx;
    double cy;
    double angle_deg;
};

// Toft's modified phantom (higher contrast than the original table).
constexpr std::array<Ellipse, 10> kPhantom{{
    {1.0, 0.69, 0.92, 0.0, 0.0, 0.0},
    {-0.8, 0.6624, 0.874, 0.0, -0.0184, 0.0},
    {-0.2, 0.11, 0.31, 0.22, 0.0, -18.0},
    {-0.2, 0.16, 0.41, -0.22, 0.0, 18.0},
    {0.1, 0.21, 0.25, 0.0, 0.35, 0.0},
    {0.1, 0.046, 0.046, 0.0, 0.1, 0.0},
    {0.1, 0.046, 0.046, 0.0, -0.1, 0.0},
    {0.1, 0.046, 0.023, -0.08, -0.605, 0.0},
    {0.1, 0.023, 0.023, 0.0, -0.606, 0.0},
    {0.1, 0.023, 0.046, 0.06, -0.605, 0.0},
}};

}  // namespace

PixelImage lower_triangle_4x4() {
    return PixelImage(4, 1,
                      {1, 0, 0, 0,
                       1, 1, 0, 0,
                       1, 1, 1, 0,
                       1, 1, 1, 1});
}

PixelImage ramp_image(std::size_t side, unsigned depth_bits) {
    const std::size_t n = side * side;
    if (depth_bits < 32 && n - 1 > (std::size_t{1} << depth_bits) - 1) {
        throw ValidationError("ramp does not fit in the requested depth");
    }
    std::vector<std::uint32_t> px(n);
    for (std::size_t j = 0; j < n; ++j) {
        px[j] = static_cast<std::uint32_t>(j);
    }
    return PixelImage(side, depth_bits, std::move(px));
}

PixelImage shepp_logan_phantom(std::size_t side, unsigned depth_bits) {
    PixelImage probe(side, depth_bits);  // validates geometry
    std::vector<double> raw(side * side, 0.0);
    for (std::size_t r = 0; r < side; ++r) {
        const double y = 1.0 - (2.0 * r + 1.0) / static_cast<double>(side);
        for (std::size_t c = 0; c < side; ++c) {
            const double x = (2.0 * c + 1.0) / static_cast<double>(side) - 1.0;
            double v = 0.0;
            for (const auto &e : kPhantom) {
                const double t = e.angle_deg * std::numbers::pi / 180.0;
                const double dx = x - e.cx;
                const double dy = y - e.cy;
                const double u = (dx * std::cos(t) + dy * std::sin(t)) / e.semi_x;
                const double w = (-dx * std::sin(t) + dy * std::cos(t)) / e.semi_y;
                if (u * u + w * w <= 1.0) {
                    v += e.intensity;
                }
            }
            raw[r * side + c] = std::max(v, 0.0);
        }
    }
    const double peak = *std::max_element(raw.begin(), raw.end());
    const double top = probe.max_value();
    std::vector<std::uint32_t> px(raw.size(), 0);
    if (peak > 0.0) {
        for (std::size_t j = 0; j < px.size(); ++j) {
            px[j] = static_cast<std::uint32_t>(std::lround(raw[j] / peak * top));
        }
    }
    return PixelImage(side, depth_bits, std::move(px));
}

}  // namespace qjpeg
