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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qjpeg {

/// Square greyscale image with side N (a power of two, N >= 2) and depth c
/// bits, so every pixel lies in [0, 2^c - 1]. Pixels are stored row-major.
class PixelImage {
  public:
    PixelImage(std::size_t side, unsigned depth_bits, std::vector<std::uint32_t> pixels);

    /// All-black image.
    PixelImage(std::size_t side, unsigned depth_bits);

    std::size_t side() const { return side_; }
    unsigned depth_bits() const { return depth_bits_; }
    /// L = 2^c.
    std::uint32_t levels() const { return std::uint32_t{1} << depth_bits_; }
    std::uint32_t max_value() const { return levels() - 1; }

    std::uint32_t at(std::size_t row, std::size_t col) const { return pixels_[row * side_ + col]; }
    void set(std::size_t row, std::size_t col, std::uint32_t value);

    std::span<const std::uint32_t> pixels() const { return pixels_; }
    std::uint64_t total_brightness() const;

    bool operator==(const PixelImage &other) const = default;

  private:
    std::size_t side_;
    unsigned depth_bits_;
    std::vector<std::uint32_t> pixels_;
};

/// Row-major d x d grid of reals (probabilities or derived quantities).
struct ProbabilityGrid {
    std::size_t side = 0;
    std::vector<double> values;

    double at(std::size_t row, std::size_t col) const { return values[row * side + col]; }
};

/// Row-wise flattening: index k = row * N + col.
std::vector<double> vectorize(const PixelImage &image);

/// Inverse of the row-wise flattening. `values.size()` must equal side^2.
ProbabilityGrid devectorize(std::span<const double> values, std::size_t side);

/// Row-major split of an image into square sub-images.
struct TiledImage {
    std::size_t image_side = 0;
    std::size_t block_side = 0;
    std::size_t blocks_per_axis = 0;
    std::vector<PixelImage> blocks;
};

/// Splits into blocks of side 2^{b/2} for a device with at most b qubits.
/// Requires b even, b >= 2, and 2^{b/2} <= N. Produces (N / 2^{b/2})^2 =
/// N^2 / 2^b blocks in row-major block order.
TiledImage tile(const PixelImage &image, unsigned max_qubits);

PixelImage untile(const TiledImage &tiles);

}  // namespace qjpeg
