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

#include <complex>
#include <span>

namespace qjpeg {

/// Sign of the exponent: kForward computes sum_j x_j e^{-2 pi i jk/M},
/// kBackward uses e^{+2 pi i jk/M}.
enum class FftDirection { kForward, kBackward };

/// In-place radix-2 FFT, unnormalized. Length must be a power of two.
/// Iterative Cooley-Tukey with an initial bit-reversal permutation, so both
/// input and output are in natural order.
void fft_inplace(std::span<std::complex<double>> data, FftDirection direction);

/// In-place unnormalized Walsh-Hadamard butterflies on the listed index bits.
/// Passing every bit gives the full transform H^{(x)n} up to 2^{n/2}.
void walsh_hadamard_inplace(std::span<std::complex<double>> data,
                            std::span<const unsigned> bits);

}  // namespace qjpeg
