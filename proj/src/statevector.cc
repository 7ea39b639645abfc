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

#include "qjpeg/statevector.h"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qjpeg/errors.h"

namespace qjpeg {

namespace {

void check_qubit_count(unsigned n) {
    if (n < 1 || n > kMaxQubits) {
        throw ValidationError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                              "], got " + std::to_string(n));
    }
}

void hadamard(std::span<Amplitude> amps, unsigned q) {
    const double s = std::numbers::sqrt2 / 2;
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t j = 0; j < amps.size(); ++j) {
        if (j & bit) {
            continue;
        }
        Amplitude a = amps[j];
        Amplitude b = amps[j | bit];
        amps[j] = s * (a + b);
        amps[j | bit] = s * (a - b);
    }
}

// Diagonal phase on basis states where both `control` and `target` are 1.
void controlled_phase(std::span<Amplitude> amps, unsigned control, unsigned target,
                      double angle) {
    const std::size_t mask = (std::size_t{1} << control) | (std::size_t{1} << target);
    const Amplitude phase = std::polar(1.0, angle);
    for (std::size_t j = 0; j < amps.size(); ++j) {
        if ((j & mask) == mask) {
            amps[j] *= phase;
        }
    }
}

void swap_qubits(std::span<Amplitude> amps, unsigned a, unsigned b) {
    const std::size_t ba = std::size_t{1} << a;
    const std::size_t bb = std::size_t{1} << b;
    for (std::size_t j = 0; j < amps.size(); ++j) {
        // Visit each (..1..0..) / (..0..1..) pair once.
        if ((j & ba) && !(j & bb)) {
            std::swap(amps[j], amps[(j & ~ba) | bb]);
        }
    }
}

}  // namespace

Statevector::Statevector(unsigned num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

Statevector::Statevector(unsigned num_qubits, std::vector<Amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
    check_qubit_count(num_qubits);
    if (amps_.size() != (std::size_t{1} << num_qubits)) {
        throw ValidationError("amplitude vector length " + std::to_string(amps_.size()) +
                              " does not match 2^" + std::to_string(num_qubits));
    }
}

double Statevector::norm() const {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

Statevector basis_state(unsigned num_qubits, std::uint64_t j) {
    check_qubit_count(num_qubits);
    if (j >= (std::uint64_t{1} << num_qubits)) {
        throw ValidationError("basis index " + std::to_string(j) + " out of range for " +
                              std::to_string(num_qubits) + " qubits");
    }
    Statevector s(num_qubits);
    s[0] = 0.0;
    s[j] = 1.0;
    return s;
}

Statevector apply_hadamard_layer(Statevector state, std::span<const unsigned> qubits) {
    std::vector<bool> seen(state.num_qubits(), false);
    for (unsigned q : qubits) {
        if (q >= state.num_qubits()) {
            throw ValidationError("hadamard target " + std::to_string(q) + " out of range");
        }
        if (seen[q]) {
            throw ValidationError("duplicate hadamard target " + std::to_string(q));
        }
        seen[q] = true;
    }

    for (unsigned q : qubits) {
        hadamard(state.amplitudes(), q);
    }
    return state;
}

Statevector apply_qft(Statevector state, QubitRange range, bool inverse) {
    if (range.lo > range.hi) {
        throw ValidationError("empty qubit range");
    }
    if (range.hi >= state.num_qubits()) {
        throw ValidationError("qubit range [" + std::to_string(range.lo) + ", " +
                              std::to_string(range.hi) + "] exceeds register of " +
                              std::to_string(state.num_qubits()) + " qubits");
    }

    auto amps = state.amplitudes();
    const double sign = inverse ? -1.0 : 1.0;
    const unsigned m = range.size();

    for (unsigned t = m; t-- > 0;) {
        hadamard(amps, range.lo + t);
        for (unsigned s = t; s-- > 0;) {
            double angle = sign * std::numbers::pi / static_cast<double>(std::uint64_t{1} << (t - s));
            controlled_phase(amps, range.lo + s, range.lo + t, angle);
        }
    }
    for (unsigned t = 0; t < m / 2; ++t) {
        swap_qubits(amps, range.lo + t, range.lo + m - 1 - t);
    }
    return state;
}

Distribution probabilities(const Statevector &state) {
    Distribution p(state.dim());
    auto amps = state.amplitudes();
    for (std::size_t j = 0; j < p.size(); ++j) {
        p[j] = std::norm(amps[j]);
    }
    return p;
}

std::uint64_t gather_bits(std::uint64_t index, std::span<const unsigned> kept) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        out |= ((index >> kept[i]) & 1u) << i;
    }
    return out;
}

Distribution marginalize(std::span<const double> dist, unsigned num_qubits,
                         std::span<const unsigned> kept) {
    check_qubit_count(num_qubits);
    if (dist.size() != (std::size_t{1} << num_qubits)) {
        throw ValidationError("distribution length does not match 2^" +
                              std::to_string(num_qubits));
    }
    if (kept.empty()) {
        throw ValidationError("marginalize needs at least one kept qubit");
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept[i] >= num_qubits) {
            throw ValidationError("kept qubit " + std::to_string(kept[i]) + " out of range");
        }
        if (i > 0 && kept[i] <= kept[i - 1]) {
            throw ValidationError("kept qubits must be distinct and ascending");
        }
    }

    Distribution out(std::size_t{1} << kept.size(), 0.0);
    for (std::size_t j = 0; j < dist.size(); ++j) {
        out[gather_bits(j, kept)] += dist[j];
    }
    return out;
}

}  // namespace qjpeg
