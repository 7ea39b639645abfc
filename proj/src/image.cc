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

#include "qjpeg/image.h"

#include <bit>
#include <string>
#include <utility>

#include "qjpeg/errors.h"

namespace qjpeg {

namespace {

void check_geometry(std::size_t side, unsigned depth_bits) {
    if (side < 2 || !std::has_single_bit(side)) {
        throw ValidationError("image side must be a power of two >= 2, got " +
                              std::to_string(side));
    }
    if (depth_bits < 1 || depth_bits > 16) {
        throw ValidationError("bit depth must be in [1, 16], got " + std::to_string(depth_bits));
    }
}

}  // namespace

PixelImage::PixelImage(std::size_t side, unsigned depth_bits, std::vector<std::uint32_t> pixels)
    : side_(side), depth_bits_(depth_bits), pixels_(std::move(pixels)) {
    check_geometry(side, depth_bits);
    if (pixels_.size() != side * side) {
        throw ValidationError("expected " + std::to_string(side * side) + " pixels, got " +
                              std::to_string(pixels_.size()));
    }
    for (auto v : pixels_) {
        if (v > max_value()) {
            throw ValidationError("pixel value " + std::to_string(v) + " exceeds " +
                                  std::to_string(max_value()) + " for depth " +
                                  std::to_string(depth_bits));
        }
    }
}

PixelImage::PixelImage(std::size_t side, unsigned depth_bits)
    : PixelImage(side, depth_bits, std::vector<std::uint32_t>(side * side, 0)) {}

void PixelImage::set(std::size_t row, std::size_t col, std::uint32_t value) {
    if (value > max_value()) {
        throw ValidationError("pixel value " + std::to_string(value) + " exceeds max " +
                              std::to_string(max_value()));
    }
    pixels_[row * side_ + col] = value;
}

std::uint64_t PixelImage::total_brightness() const {
    std::uint64_t total = 0;
    for (auto v : pixels_) {
        total += v;
    }
    return total;
}

std::vector<double> vectorize(const PixelImage &image) {
    // Storage is already row-major.
    return {image.pixels().begin(), image.pixels().end()};
}

ProbabilityGrid devectorize(std::span<const double> values, std::size_t side) {
    if (values.size() != side * side) {
        throw ValidationError("cannot devectorize " + std::to_string(values.size()) +
                              " values into a " + std::to_string(side) + "x" +
                              std::to_string(side) + " grid");
    }
    return {side, {values.begin(), values.end()}};
}

TiledImage tile(const PixelImage &image, unsigned max_qubits) {
    if (max_qubits < 2 || max_qubits % 2 != 0) {
        throw ValidationError("tiling qubit budget b must be even and >= 2, got " +
                              std::to_string(max_qubits));
    }
    if (max_qubits / 2 >= 64 || (std::size_t{1} << (max_qubits / 2)) > image.side()) {
        throw ValidationError("block side 2^" + std::to_string(max_qubits / 2) +
                              " exceeds image side " + std::to_string(image.side()));
    }

    TiledImage out;
    out.image_side = image.side();
    out.block_side = std::size_t{1} << (max_qubits / 2);
    out.blocks_per_axis = image.side() / out.block_side;
    out.blocks.reserve(out.blocks_per_axis * out.blocks_per_axis);

    const std::size_t bs = out.block_side;
    for (std::size_t br = 0; br < out.blocks_per_axis; ++br) {
        for (std::size_t bc = 0; bc < out.blocks_per_axis; ++bc) {
            std::vector<std::uint32_t> px(bs * bs);
            for (std::size_t r = 0; r < bs; ++r) {
                for (std::size_t c = 0; c < bs; ++c) {
                    px[r * bs + c] = image.at(br * bs + r, bc * bs + c);
                }
            }
            out.blocks.emplace_back(bs, image.depth_bits(), std::move(px));
        }
    }
    return out;
}

PixelImage untile(const TiledImage &tiles) {
    const std::size_t per_axis = tiles.blocks_per_axis;
    if (tiles.blocks.size() != per_axis * per_axis || per_axis * tiles.block_side != tiles.image_side ||
        tiles.blocks.empty()) {
        throw ValidationError("inconsistent tiling metadata");
    }
    const std::size_t bs = tiles.block_side;
    PixelImage out(tiles.image_side, tiles.blocks.front().depth_bits());
    for (std::size_t b = 0; b < tiles.blocks.size(); ++b) {
        const auto &block = tiles.blocks[b];
        if (block.side() != bs) {
            throw ValidationError("block " + std::to_string(b) + " has wrong side");
        }
        const std::size_t br = b / per_axis;
        const std::size_t bc = b % per_axis;
        for (std::size_t r = 0; r < bs; ++r) {
            for (std::size_t c = 0; c < bs; ++c) {
                out.set(br * bs + r, bc * bs + c, block.at(r, c));
            }
        }
    }
    return out;
}

}  // namespace qjpeg
