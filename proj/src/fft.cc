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

#include "qjpeg/fft.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qjpeg/errors.h"

namespace qjpeg {

void fft_inplace(std::span<std::complex<double>> data, FftDirection direction) {
    const std::size_t n = data.size();
    if (n == 0 || !std::has_single_bit(n)) {
        throw ValidationError("fft length must be a power of two, got " + std::to_string(n));
    }

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) {
            j ^= bit;
        }
        j ^= bit;
        if (i < j) {
            std::swap(data[i], data[j]);
        }
    }

    // Twiddles from std::polar per index rather than by repeated
    // multiplication, which drifts at 2^18 points.
    const double sign = direction == FftDirection::kForward ? -1.0 : 1.0;
    const double theta = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
    std::vector<std::complex<double>> twiddle(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        twiddle[k] = std::polar(1.0, theta * static_cast<double>(k));
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t stride = n / len;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::complex<double> u = data[start + k];
                const std::complex<double> v = data[start + k + half] * twiddle[k * stride];
                data[start + k] = u + v;
                data[start + k + half] = u - v;
            }
        }
    }
}

void walsh_hadamard_inplace(std::span<std::complex<double>> data,
                            std::span<const unsigned> bits) {
    const std::size_t n = data.size();
    if (n == 0 || !std::has_single_bit(n)) {
        throw ValidationError("transform length must be a power of two");
    }
    for (unsigned b : bits) {
        const std::size_t stride = std::size_t{1} << b;
        if (stride >= n) {
            throw ValidationError("walsh-hadamard bit " + std::to_string(b) + " out of range");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (j & stride) {
                continue;
            }
            auto a = data[j];
            auto c = data[j | stride];
            data[j] = a + c;
            data[j | stride] = a - c;
        }
    }
}

}  // namespace qjpeg
