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
 * Dense statevector engine.
 *
 * Index convention: basis index j holds qubit q in bit q of j, so qubit n-1
 * is the most significant. Every discard list in the library is expressed
 * in this convention.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qjpeg {

using Amplitude = std::complex<double>;

/// Probability vector over the computational basis of a register.
using Distribution = std::vector<double>;

/// Largest register the dense engine accepts (2^28 amplitudes = 4 GiB).
inline constexpr unsigned kMaxQubits = 28;

/// Contiguous, inclusive span of qubits [lo, hi].
struct QubitRange {
    unsigned lo = 0;
    unsigned hi = 0;

    unsigned size() const { return hi - lo + 1; }
};

class Statevector {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit Statevector(unsigned num_qubits);

    /// Takes ownership of `amps`; its length must be 2^num_qubits.
    Statevector(unsigned num_qubits, std::vector<Amplitude> amps);

    unsigned num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> amplitudes() { return amps_; }

    const Amplitude &operator[](std::size_t j) const { return amps_[j]; }
    Amplitude &operator[](std::size_t j) { return amps_[j]; }

    /// Euclidean norm of the amplitude vector.
    double norm() const;

  private:
    unsigned num_qubits_;
    std::vector<Amplitude> amps_;
};

Statevector basis_state(unsigned num_qubits, std::uint64_t j);

/// H on each listed qubit. Indices must be distinct and < n.
Statevector apply_hadamard_layer(Statevector state, std::span<const unsigned> qubits);

/// Exact QFT (or its inverse) on the subregister `range`, identity elsewhere.
///
/// With m = range.size() and k the local index of the subregister,
/// |j> -> 2^{-m/2} sum_k exp(+-2 pi i j k / 2^m) |k>, '+' for the forward
/// transform. Built as the textbook ladder: Hadamard and controlled phase
/// rotations from the most significant local qubit down, then a qubit
/// reversal.
Statevector apply_qft(Statevector state, QubitRange range, bool inverse);

/// Born-rule probabilities |amps_j|^2.
Distribution probabilities(const Statevector &state);

/// Sums probabilities over every qubit not in `kept`.
///
/// `kept` must be nonempty, strictly ascending, and every entry < n. Output
/// bit i is the value of qubit kept[i].
Distribution marginalize(std::span<const double> dist, unsigned num_qubits,
                         std::span<const unsigned> kept);

/// Gathers the bits of `index` at positions `kept` into a packed integer.
std::uint64_t gather_bits(std::uint64_t index, std::span<const unsigned> kept);

}  // namespace qjpeg
