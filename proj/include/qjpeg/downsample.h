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
 * Quantum image encoding and QFT-based downsampling.
 *
 * An N x N image is loaded into n0 = 2 log2(N) qubits. The downsampler
 * applies a QFT to the whole register, drops the ñ most significant qubits
 * (high spatial frequencies), applies an inverse QFT on the remaining
 * n0 - ñ qubits, and finally drops the ñ qubits just below the middle of
 * the register, which only carry redundant row information at that point.
 * The result lives on n2 = n0 - 2ñ qubits and devectorizes into a
 * (N / 2^ñ) x (N / 2^ñ) image.
 *
 * Discards are deferred: every unitary after a discard acts only on kept
 * qubits, so the pipeline runs on the pure state and probabilities are
 * marginalized once at the end.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "qjpeg/image.h"
#include "qjpeg/statevector.h"

namespace qjpeg {

/// Amplitude-encoded image |Psi>_0 on n0 = 2 log2(side) qubits.
struct QuantumImage {
    Statevector state;
    std::size_t side;

    unsigned num_qubits() const { return state.num_qubits(); }
};

/// Which qubits each discard step removes and which survive.
struct RegisterLayout {
    unsigned n0 = 0;
    unsigned nt = 0;
    /// Qubits n0 - ñ ... n0 - 1 (high frequencies after the QFT).
    std::vector<unsigned> rule1_discards;
    /// Qubits n0/2 - ñ ... n0/2 - 1 (redundant after the partial inverse QFT).
    std::vector<unsigned> rule2_discards;
    /// [0, n0/2 - ñ) ∪ [n0/2, n0 - ñ), ascending.
    std::vector<unsigned> kept;

    unsigned n1() const { return n0 - nt; }
    unsigned n2() const { return n0 - 2 * nt; }
};

/// Downsampled output: exact distribution on the n2 kept qubits.
struct CompressedImage {
    Distribution dist;
    std::size_t side;

    ProbabilityGrid grid() const { return devectorize(dist, side); }
};

/// amps_j = sqrt(I_j / sum I). Throws DegenerateInputError for an all-black image.
QuantumImage encode_image(const PixelImage &image);

/// Wraps a normalized amplitude vector of length side^2.
QuantumImage quantum_image_from_amplitudes(std::vector<Amplitude> amps, std::size_t side);

/// Requires n0 even, n0 >= 2 and 0 <= ñ < n0/2.
RegisterLayout plan_discards(unsigned n0, unsigned nt);

/// Runs the downsampling circuit; `hadamard` toggles both Hadamard layers
/// (before the QFT on all qubits, and at the end on the kept qubits).
CompressedImage downsample(const QuantumImage &image, unsigned nt, bool hadamard);

/// How the resolution-preserving variant reinitializes the high-frequency
/// qubits to |0>.
enum class ResetMode {
    /// Zero every amplitude with a high-frequency bit set and renormalize.
    /// Keeps a pure state; scales to any register size.
    kProject,
    /// Trace the qubits out and tensor in |0><0|. The result is the mixture
    /// sum_l |0>|phi_l><phi_l|<0| over the discarded values l, evaluated one
    /// pure branch at a time.
    kTraceAndReplace,
};

/// QFT, reset the ñ high-frequency qubits, inverse QFT on the full register.
/// Output has the input's length. kProject throws DegenerateInputError when
/// the state has no weight left on the low-frequency subspace.
Distribution downsample_preserving(const QuantumImage &image, unsigned nt,
                                   ResetMode mode = ResetMode::kProject);

/// Exact probability grid scaled to integer grey levels:
/// round(p_j * (levels - 1) / max_j p_j). All-zero grids stay black.
PixelImage distribution_to_image(const ProbabilityGrid &grid, unsigned depth_bits);

/// Downsamples each block of a tiled image and stitches the outputs. Each
/// block's distribution is weighted by its share of the total brightness so
/// the stitched grid is again a distribution; all-black blocks contribute
/// zeros without being encoded.
ProbabilityGrid downsample_tiled(const TiledImage &tiles, unsigned nt, bool hadamard);

}  // namespace qjpeg
