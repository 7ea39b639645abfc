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

/**
 * @file
 * Gate-count model for quantum vs. classical downsampling, and the classical
 * FFT version of the same pipeline.
 *
 * Counts are model values with the big-O constants taken literally:
 *   Q(n0, ñ) = 8 L^2 log2(n0) n0 2^{n0 - 2ñ}   (QFT cost times 4 L^2 d^2 shots)
 *   C(n0)    = n0 2^{n0}                        (2 N^2 log2 N for the FFT)
 * The quantum side counts gates and the classical side counts arithmetic
 * operations; the ratio compares them one-for-one with no conversion factor.
 * Q / C < 1 reduces to 3 + 2c + log2(log2 n0) < 2ñ.
 */

#pragma once

#include <ostream>
#include <vector>

#include <nlohmann/json.hpp>

#include "qjpeg/image.h"

namespace qjpeg {

/// Requires n0 even, 0 < ñ < n0/2, c <= 16.
double quantum_cost(unsigned n0, unsigned nt, unsigned depth_bits);

/// n0 2^{n0}. Requires n0 >= 1.
double classical_cost(unsigned n0);

/// 3 + 2c + log2(log2 n0), with log2(log2 2) = 0.
double advantage_lhs(unsigned n0, unsigned depth_bits);

/// Integers ñ with lhs < 2ñ < n0, ascending. Requires n0 even and >= 2.
std::vector<unsigned> advantage_region(unsigned n0, unsigned depth_bits);

struct CostReport {
    unsigned n0 = 0;
    unsigned nt = 0;
    unsigned depth_bits = 0;
    double quantum_gates = 0.0;
    double classical_gates = 0.0;
    double ratio = 0.0;
    double lhs = 0.0;
    /// Open interval (lhs, n0) that 2ñ must fall in.
    double feasible_lo = 0.0;
    double feasible_hi = 0.0;
    bool advantage = false;
};

CostReport cost_report(unsigned n0, unsigned nt, unsigned depth_bits);

nlohmann::json to_json(const CostReport &report);

/// Header plus one row per report.
void write_cost_csv(std::ostream &out, const std::vector<CostReport> &reports);

/// All valid (n0, ñ, c) for even n0 in [2, max_n0], c in [0, max_depth].
std::vector<CostReport> cost_sweep(unsigned max_n0, unsigned max_depth);

/// The downsampling pipeline evaluated classically on the length-N^2 vector:
/// optional Walsh-Hadamard on all index bits, a length-2^{n0} FFT, a
/// blockwise inverse FFT of length 2^{n0 - ñ}, Walsh-Hadamard on the kept
/// bits, then summing |.|^2 over the discarded bits.
ProbabilityGrid classical_pipeline(const PixelImage &image, unsigned nt, bool hadamard);

}  // namespace qjpeg
