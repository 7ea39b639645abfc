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

#include "qjpeg/advantage.h"

#include <bit>
#include <cmath>
#include <complex>
#include <iomanip>
#include <string>

#include "qjpeg/errors.h"
#include "qjpeg/fft.h"

namespace qjpeg {

namespace {

void check_register(unsigned n0) {
    if (n0 < 2 || n0 % 2 != 0) {
        throw ValidationError("n0 must be even and >= 2, got " + std::to_string(n0));
    }
}

void check_depth(unsigned c) {
    if (c > 16) {
        throw ValidationError("depth c must be <= 16, got " + std::to_string(c));
    }
}

}  // namespace

double quantum_cost(unsigned n0, unsigned nt, unsigned depth_bits) {
    check_register(n0);
    check_depth(depth_bits);
    if (nt == 0 || nt >= n0 / 2) {
        throw ValidationError("quantum cost needs 0 < nt < n0/2");
    }
    const double levels_sq = std::ldexp(1.0, 2 * static_cast<int>(depth_bits));
    const double n = n0;
    return 8.0 * levels_sq * std::log2(n) * n * std::ldexp(1.0, static_cast<int>(n0 - 2 * nt));
}

double classical_cost(unsigned n0) {
    if (n0 < 1) {
        throw ValidationError("n0 must be >= 1");
    }
    return static_cast<double>(n0) * std::ldexp(1.0, static_cast<int>(n0));
}

double advantage_lhs(unsigned n0, unsigned depth_bits) {
    check_register(n0);
    check_depth(depth_bits);
    const double loglog = n0 == 2 ? 0.0 : std::log2(std::log2(static_cast<double>(n0)));
    return 3.0 + 2.0 * depth_bits + loglog;
}

std::vector<unsigned> advantage_region(unsigned n0, unsigned depth_bits) {
    const double lhs = advantage_lhs(n0, depth_bits);
    std::vector<unsigned> out;
    for (unsigned nt = 1; 2 * nt < n0; ++nt) {
        if (lhs < 2.0 * nt) {
            out.push_back(nt);
        }
    }
    return out;
}

CostReport cost_report(unsigned n0, unsigned nt, unsigned depth_bits) {
    CostReport r;
    r.n0 = n0;
    r.nt = nt;
    r.depth_bits = depth_bits;
    r.quantum_gates = quantum_cost(n0, nt, depth_bits);
    r.classical_gates = classical_cost(n0);
    r.ratio = r.quantum_gates / r.classical_gates;
    r.lhs = advantage_lhs(n0, depth_bits);
    r.feasible_lo = r.lhs;
    r.feasible_hi = n0;
    r.advantage = r.lhs < 2.0 * nt && 2 * nt < n0;
    return r;
}

nlohmann::json to_json(const CostReport &r) {
    return {
        {"n0", r.n0},
        {"nt", r.nt},
        {"c", r.depth_bits},
        {"quantum_gates", r.quantum_gates},
        {"classical_gates", r.classical_gates},
        {"ratio", r.ratio},
        {"lhs", r.lhs},
        {"feasible_range", {{"lo", r.feasible_lo}, {"hi", r.feasible_hi}}},
        {"advantage", r.advantage},
        {"units", "model gate counts; quantum gates and classical operations compared 1:1"},
    };
}

void write_cost_csv(std::ostream &out, const std::vector<CostReport> &reports) {
    out << "n0,nt,c,quantum_gates,classical_gates,ratio,lhs,advantage\n";
    const auto old_precision = out.precision(17);
    for (const auto &r : reports) {
        out << r.n0 << ',' << r.nt << ',' << r.depth_bits << ',' << r.quantum_gates << ','
            << r.classical_gates << ',' << r.ratio << ',' << r.lhs << ','
            << (r.advantage ? 1 : 0) << '\n';
    }
    out.precision(old_precision);
}

std::vector<CostReport> cost_sweep(unsigned max_n0, unsigned max_depth) {
    std::vector<CostReport> out;
    for (unsigned n0 = 2; n0 <= max_n0; n0 += 2) {
        for (unsigned c = 0; c <= max_depth; ++c) {
            for (unsigned nt = 1; 2 * nt < n0; ++nt) {
                out.push_back(cost_report(n0, nt, c));
            }
        }
    }
    return out;
}

ProbabilityGrid classical_pipeline(const PixelImage &image, unsigned nt, bool hadamard) {
    const std::size_t dim = image.side() * image.side();
    const auto n0 = static_cast<unsigned>(std::countr_zero(dim));
    if (nt >= n0 / 2) {
        throw ValidationError("downsampling factor must satisfy nt < n0/2 = " +
                              std::to_string(n0 / 2));
    }
    const std::uint64_t total = image.total_brightness();
    if (total == 0) {
        throw DegenerateInputError("cannot process an all-black image (zero total brightness)");
    }

    std::vector<std::complex<double>> x(dim);
    const auto pixels = image.pixels();
    for (std::size_t j = 0; j < dim; ++j) {
        x[j] = std::sqrt(static_cast<double>(pixels[j]) / static_cast<double>(total));
    }

    std::vector<unsigned> all_bits(n0);
    for (unsigned b = 0; b < n0; ++b) {
        all_bits[b] = b;
    }
    // Index bits that survive: [0, n0/2 - nt) and [n0/2, n0 - nt).
    std::vector<unsigned> kept_bits;
    for (unsigned b = 0; b < n0 / 2 - nt; ++b) {
        kept_bits.push_back(b);
    }
    for (unsigned b = n0 / 2; b < n0 - nt; ++b) {
        kept_bits.push_back(b);
    }

    if (hadamard) {
        walsh_hadamard_inplace(x, all_bits);
        const double s = 1.0 / std::sqrt(static_cast<double>(dim));
        for (auto &v : x) {
            v *= s;
        }
    }

    // Quantum Fourier convention (+i exponent) is the backward DFT.
    fft_inplace(x, FftDirection::kBackward);
    const double full_scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (auto &v : x) {
        v *= full_scale;
    }

    const std::size_t block = std::size_t{1} << (n0 - nt);
    const double block_scale = 1.0 / std::sqrt(static_cast<double>(block));
    for (std::size_t start = 0; start < dim; start += block) {
        std::span<std::complex<double>> seg(x.data() + start, block);
        fft_inplace(seg, FftDirection::kForward);
        for (auto &v : seg) {
            v *= block_scale;
        }
    }

    if (hadamard) {
        walsh_hadamard_inplace(x, kept_bits);
        const double s = std::ldexp(1.0, -static_cast<int>(kept_bits.size()));
        for (auto &v : x) {
            v *= std::sqrt(s);
        }
    }

    const std::size_t out_side = image.side() >> nt;
    ProbabilityGrid grid{out_side, std::vector<double>(out_side * out_side, 0.0)};
    for (std::size_t j = 0; j < dim; ++j) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < kept_bits.size(); ++i) {
            k |= ((j >> kept_bits[i]) & 1u) << i;
        }
        grid.values[k] += std::norm(x[j]);
    }
    return grid;
}

}  // namespace qjpeg
