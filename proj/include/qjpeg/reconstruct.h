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
 * Shot-based reconstruction of a downsampled image.
 *
 * RNG stream contract (bit-reproducible across platforms):
 *  - The engine is std::mt19937_64 seeded with the 64-bit seed. Its output
 *    sequence is fixed by the C++ standard.
 *  - Every shot consumes exactly one engine output x and maps it to
 *    u = (x >> 11) * 2^-53 in [0, 1).
 *  - The shot lands in the first bin whose running cumulative probability
 *    (summed in index order) exceeds u * total.
 *  - Repeat r of a fluctuation study uses seed derive_seed(seed, r), a
 *    SplitMix64 finalizer over seed + r * 0x9E3779B97F4A7C15.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "qjpeg/image.h"
#include "qjpeg/statevector.h"

namespace qjpeg {

/// Inverse-CDF multinomial sampler bound to the stream contract above.
class ShotSampler {
  public:
    /// `dist` must be nonnegative and sum to 1 within 1e-9.
    ShotSampler(std::span<const double> dist, std::uint64_t seed);

    std::size_t next();
    /// Adds `shots` samples into `counts` (which must have dist.size() entries).
    void sample_into(std::span<std::uint64_t> counts, std::uint64_t shots);

    std::size_t size() const { return cumulative_.size(); }

  private:
    std::vector<double> cumulative_;
    std::mt19937_64 engine_;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

struct ShotHistogram {
    std::vector<std::uint64_t> counts;
    std::uint64_t total_shots = 0;

    std::vector<double> frequencies() const;
};

ShotHistogram sample_shots(std::span<const double> dist, std::uint64_t shots, std::uint64_t seed);

/// Grey levels g_j = round(f_j L / f_w) with f_w = max_j f_j. Every pixel
/// tied with the maximum gets exactly L (the white sentinel); the rest land
/// in [0, L]. Clamping white to L - 1 happens only at file export.
struct GreyReconstruction {
    std::vector<std::uint32_t> levels;
    std::uint32_t grey_levels = 0;
    double white_freq = 0.0;
    /// 95% normal-approximation half-widths 2 sqrt(f_j (1 - f_j) L^2 / (f_w^2 S)).
    std::vector<double> ci_halfwidths;
    std::uint64_t shots = 0;

    /// Fraction of pixels whose half-width is <= `tolerance` grey levels.
    double fraction_within(double tolerance) const;
};

GreyReconstruction grey_levels(const ShotHistogram &hist, std::uint32_t levels);

/// Conservative shot budget for a d x d output with L grey levels.
/// Without a hint this is the worst case 4 L^2 d^2 (all-white image,
/// f_w = 1/d^2). With an expected white frequency f_w: ceil(L^2 / f_w^2)
/// for f_w >= 0.5, otherwise ceil(4 L^2 / f_w^2).
std::uint64_t sample_size(std::uint32_t levels, std::uint64_t side,
                          std::optional<double> white_freq_hint = std::nullopt);

/// d^2 L^{3/2}, the "average reconstruction" budget used for large demos.
std::uint64_t figure_sample_size(std::uint32_t levels, std::uint64_t side);

struct AdaptiveResult {
    GreyReconstruction reconstruction;
    std::uint64_t shots_used = 0;
    /// False when the run stopped on max_shots instead.
    bool target_reached = false;
};

/// Samples in batches until at least `target_fraction` of the pixels have a
/// half-width <= 1 grey level, or `max_shots` is spent. The final batch is
/// truncated so shots_used never exceeds max_shots.
AdaptiveResult adaptive_reconstruct(std::span<const double> dist, std::uint32_t levels,
                                    double target_fraction, std::uint64_t batch,
                                    std::uint64_t max_shots, std::uint64_t seed);

struct StdHistogram {
    std::vector<double> edges;
    std::vector<std::uint64_t> counts;
};

struct FluctuationStudy {
    /// Per-pixel sample standard deviation (n - 1) of g_j over repeats.
    std::vector<double> std_map;
    StdHistogram histogram;
    /// Reconstruction from repeat 0, kept for reporting.
    GreyReconstruction first;
    std::uint64_t shots = 0;
    unsigned repeats = 0;

    double median_std() const;
};

/// Repeats the shot reconstruction `repeats` times (repeat r seeded with
/// derive_seed(seed, r)) and bins per-pixel standard deviations into
/// fixed-width bins starting at 0.
FluctuationStudy fluctuation_study(std::span<const double> dist, std::uint64_t shots,
                                   unsigned repeats, std::uint32_t levels, std::uint64_t seed,
                                   double bin_width = 0.25);

/// Reconstructed levels as an image of depth c = log2(L); white (L) is
/// written as L - 1.
PixelImage reconstruction_to_image(const GreyReconstruction &recon, std::size_t side);

/// {shots, f_w, grey_levels[], ci_halfwidths[], std_map[], histogram{edges[], counts[]}}.
/// std_map and the histogram are empty when `study` is null.
nlohmann::json reconstruction_stats_json(const GreyReconstruction &recon,
                                         const FluctuationStudy *study = nullptr);

}  // namespace qjpeg
