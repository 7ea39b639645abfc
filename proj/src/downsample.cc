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

#include "qjpeg/downsample.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "qjpeg/errors.h"

namespace qjpeg {

namespace {

unsigned register_size_for_side(std::size_t side) {
    if (side < 2 || !std::has_single_bit(side)) {
        throw ValidationError("image side must be a power of two >= 2, got " +
                              std::to_string(side));
    }
    return 2 * static_cast<unsigned>(std::countr_zero(side));
}

void check_image(const QuantumImage &image) {
    if (register_size_for_side(image.side) != image.num_qubits()) {
        throw ValidationError("quantum image side " + std::to_string(image.side) +
                              " does not match its " + std::to_string(image.num_qubits()) +
                              "-qubit register");
    }
}

std::vector<unsigned> all_qubits(unsigned n) {
    std::vector<unsigned> q(n);
    std::iota(q.begin(), q.end(), 0u);
    return q;
}

}  // namespace

QuantumImage encode_image(const PixelImage &image) {
    const unsigned n0 = register_size_for_side(image.side());
    const auto total = image.total_brightness();
    if (total == 0) {
        throw DegenerateInputError("cannot encode an all-black image (zero total brightness)");
    }
    const auto theta = vectorize(image);
    std::vector<Amplitude> amps(theta.size());
    const double inv_total = 1.0 / static_cast<double>(total);
    for (std::size_t j = 0; j < theta.size(); ++j) {
        amps[j] = std::sqrt(theta[j] * inv_total);
    }
    return {Statevector(n0, std::move(amps)), image.side()};
}

QuantumImage quantum_image_from_amplitudes(std::vector<Amplitude> amps, std::size_t side) {
    const unsigned n0 = register_size_for_side(side);
    return {Statevector(n0, std::move(amps)), side};
}

RegisterLayout plan_discards(unsigned n0, unsigned nt) {
    if (n0 < 2 || n0 % 2 != 0) {
        throw ValidationError("register size n0 must be even and >= 2, got " + std::to_string(n0));
    }
    if (nt >= n0 / 2) {
        throw ValidationError("downsampling factor must satisfy nt < n0/2 = " +
                              std::to_string(n0 / 2) + ", got " + std::to_string(nt));
    }
    RegisterLayout layout;
    layout.n0 = n0;
    layout.nt = nt;
    for (unsigned q = n0 - nt; q < n0; ++q) {
        layout.rule1_discards.push_back(q);
    }
    for (unsigned q = n0 / 2 - nt; q < n0 / 2; ++q) {
        layout.rule2_discards.push_back(q);
    }
    for (unsigned q = 0; q < n0 / 2 - nt; ++q) {
        layout.kept.push_back(q);
    }
    for (unsigned q = n0 / 2; q < n0 - nt; ++q) {
        layout.kept.push_back(q);
    }
    return layout;
}

CompressedImage downsample(const QuantumImage &image, unsigned nt, bool hadamard) {
    check_image(image);
    const RegisterLayout layout = plan_discards(image.num_qubits(), nt);
    const unsigned n0 = layout.n0;

    Statevector s = image.state;
    if (hadamard) {
        s = apply_hadamard_layer(std::move(s), all_qubits(n0));
    }
    s = apply_qft(std::move(s), {0, n0 - 1}, false);
    // Rule 1 qubits are untouched from here on.
    s = apply_qft(std::move(s), {0, layout.n1() - 1}, true);
    if (hadamard) {
        s = apply_hadamard_layer(std::move(s), layout.kept);
    }
    const Distribution p = probabilities(s);
    return {marginalize(p, n0, layout.kept), image.side >> nt};
}

Distribution downsample_preserving(const QuantumImage &image, unsigned nt, ResetMode mode) {
    check_image(image);
    const RegisterLayout layout = plan_discards(image.num_qubits(), nt);
    const unsigned n0 = layout.n0;
    const std::size_t low_dim = std::size_t{1} << layout.n1();

    const Statevector freq = apply_qft(image.state, {0, n0 - 1}, false);

    if (mode == ResetMode::kProject) {
        std::vector<Amplitude> amps(freq.dim(), Amplitude{0.0, 0.0});
        double weight = 0.0;
        for (std::size_t m = 0; m < low_dim; ++m) {
            amps[m] = freq[m];
            weight += std::norm(freq[m]);
        }
        if (weight < 1e-24) {
            throw DegenerateInputError("no weight left on the low-frequency subspace after reset");
        }
        const double scale = 1.0 / std::sqrt(weight);
        for (auto &a : amps) {
            a *= scale;
        }
        return probabilities(apply_qft(Statevector(n0, std::move(amps)), {0, n0 - 1}, true));
    }

    // Trace-and-replace: one unnormalized pure branch per value l of the reset qubits.
    Distribution out(freq.dim(), 0.0);
    const std::size_t branches = std::size_t{1} << nt;
    for (std::size_t l = 0; l < branches; ++l) {
        std::vector<Amplitude> amps(freq.dim(), Amplitude{0.0, 0.0});
        bool any = false;
        for (std::size_t m = 0; m < low_dim; ++m) {
            amps[m] = freq[l * low_dim + m];
            any = any || amps[m] != Amplitude{0.0, 0.0};
        }
        if (!any) {
            continue;
        }
        const Statevector branch = apply_qft(Statevector(n0, std::move(amps)), {0, n0 - 1}, true);
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[j] += std::norm(branch[j]);
        }
    }
    return out;
}

PixelImage distribution_to_image(const ProbabilityGrid &grid, unsigned depth_bits) {
    if (depth_bits < 1 || depth_bits > 16) {
        throw ValidationError("bit depth must be in [1, 16], got " + std::to_string(depth_bits));
    }
    const double top = static_cast<double>((std::uint32_t{1} << depth_bits) - 1);
    const double pmax = grid.values.empty()
                            ? 0.0
                            : *std::max_element(grid.values.begin(), grid.values.end());
    std::vector<std::uint32_t> px(grid.values.size(), 0);
    if (pmax > 0.0) {
        for (std::size_t j = 0; j < px.size(); ++j) {
            const double v = std::max(grid.values[j], 0.0) * top / pmax;
            px[j] = static_cast<std::uint32_t>(std::min(std::floor(v + 0.5), top));
        }
    }
    return PixelImage(grid.side, depth_bits, std::move(px));
}

ProbabilityGrid downsample_tiled(const TiledImage &tiles, unsigned nt, bool hadamard) {
    if (tiles.blocks.empty()) {
        throw ValidationError("no blocks to downsample");
    }
    std::uint64_t total = 0;
    for (const auto &b : tiles.blocks) {
        total += b.total_brightness();
    }
    if (total == 0) {
        throw DegenerateInputError("cannot encode an all-black image (zero total brightness)");
    }

    const std::size_t out_block = tiles.block_side >> nt;
    const std::size_t out_side = out_block * tiles.blocks_per_axis;
    ProbabilityGrid out{out_side, std::vector<double>(out_side * out_side, 0.0)};

    for (std::size_t b = 0; b < tiles.blocks.size(); ++b) {
        const auto &block = tiles.blocks[b];
        const auto brightness = block.total_brightness();
        if (brightness == 0) {
            // Still validates nt for this block size.
            plan_discards(register_size_for_side(block.side()), nt);
            continue;
        }
        const double weight = static_cast<double>(brightness) / static_cast<double>(total);
        const CompressedImage c = downsample(encode_image(block), nt, hadamard);
        const std::size_t br = b / tiles.blocks_per_axis;
        const std::size_t bc = b % tiles.blocks_per_axis;
        for (std::size_t r = 0; r < out_block; ++r) {
            for (std::size_t col = 0; col < out_block; ++col) {
                out.values[(br * out_block + r) * out_side + bc * out_block + col] =
                    weight * c.dist[r * out_block + col];
            }
        }
    }
    return out;
}

}  // namespace qjpeg
