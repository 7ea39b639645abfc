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

#include "qjpeg/reconstruct.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "qjpeg/errors.h"

namespace qjpeg {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t checked_u64(u128 v, const char *what) {
    if (v > std::numeric_limits<std::uint64_t>::max()) {
        throw ValidationError(std::string(what) + " overflows a 64-bit shot count");
    }
    return static_cast<std::uint64_t>(v);
}

}  // namespace

ShotSampler::ShotSampler(std::span<const double> dist, std::uint64_t seed) : engine_(seed) {
    if (dist.empty()) {
        throw ValidationError("cannot sample from an empty distribution");
    }
    cumulative_.resize(dist.size());
    double running = 0.0;
    for (std::size_t j = 0; j < dist.size(); ++j) {
        if (!(dist[j] >= 0.0) || !std::isfinite(dist[j])) {
            throw ValidationError("distribution entry " + std::to_string(j) +
                                  " is negative or not finite");
        }
        running += dist[j];
        cumulative_[j] = running;
    }
    if (std::abs(running - 1.0) > 1e-9) {
        throw ValidationError("distribution sums to " + std::to_string(running) + ", not 1");
    }
}

std::size_t ShotSampler::next() {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double target = u * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    return static_cast<std::size_t>(it - cumulative_.begin());
}

void ShotSampler::sample_into(std::span<std::uint64_t> counts, std::uint64_t shots) {
    if (counts.size() != cumulative_.size()) {
        throw ValidationError("count buffer does not match distribution length");
    }
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++counts[next()];
    }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + stream * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::vector<double> ShotHistogram::frequencies() const {
    std::vector<double> f(counts.size(), 0.0);
    if (total_shots == 0) {
        return f;
    }
    for (std::size_t j = 0; j < counts.size(); ++j) {
        f[j] = static_cast<double>(counts[j]) / static_cast<double>(total_shots);
    }
    return f;
}

ShotHistogram sample_shots(std::span<const double> dist, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw ValidationError("shot count must be >= 1");
    }
    ShotSampler sampler(dist, seed);
    ShotHistogram hist{std::vector<std::uint64_t>(dist.size(), 0), shots};
    sampler.sample_into(hist.counts, shots);
    return hist;
}

double GreyReconstruction::fraction_within(double tolerance) const {
    if (ci_halfwidths.empty()) {
        return 0.0;
    }
    auto n = std::count_if(ci_halfwidths.begin(), ci_halfwidths.end(),
                           [tolerance](double h) { return h <= tolerance; });
    return static_cast<double>(n) / static_cast<double>(ci_halfwidths.size());
}

GreyReconstruction grey_levels(const ShotHistogram &hist, std::uint32_t levels) {
    if (levels < 1) {
        throw ValidationError("grey level count must be >= 1");
    }
    std::uint64_t total = 0;
    std::uint64_t white = 0;
    for (auto c : hist.counts) {
        total += c;
        white = std::max(white, c);
    }
    if (total != hist.total_shots) {
        throw ValidationError("histogram counts sum to " + std::to_string(total) +
                              " but total_shots is " + std::to_string(hist.total_shots));
    }
    if (white == 0) {
        throw DegenerateInputError("empty histogram: no shots recorded");
    }

    GreyReconstruction out;
    out.grey_levels = levels;
    out.shots = total;
    out.white_freq = static_cast<double>(white) / static_cast<double>(total);
    out.levels.resize(hist.counts.size());
    out.ci_halfwidths.resize(hist.counts.size());

    const double L = levels;
    const double s = static_cast<double>(total);
    for (std::size_t j = 0; j < hist.counts.size(); ++j) {
        const std::uint64_t c = hist.counts[j];
        // Round half up in exact integer arithmetic: floor((2 c L + w) / (2 w)).
        const u128 num = u128{2} * c * levels + white;
        const u128 den = u128{2} * white;
        out.levels[j] = static_cast<std::uint32_t>(std::min<u128>(num / den, levels));

        const double f = static_cast<double>(c) / s;
        out.ci_halfwidths[j] =
            2.0 * std::sqrt(f * (1.0 - f) * L * L / (out.white_freq * out.white_freq * s));
    }
    return out;
}

std::uint64_t sample_size(std::uint32_t levels, std::uint64_t side,
                          std::optional<double> white_freq_hint) {
    if (levels < 2) {
        throw ValidationError("sample_size needs L >= 2");
    }
    if (side < 1) {
        throw ValidationError("sample_size needs d >= 1");
    }
    if (!white_freq_hint) {
        return checked_u64(u128{4} * levels * levels * side * side, "4 L^2 d^2");
    }
    const double fw = *white_freq_hint;
    if (!(fw > 0.0 && fw <= 1.0)) {
        throw ValidationError("white frequency hint must lie in (0, 1]");
    }
    const double l2 = static_cast<double>(levels) * static_cast<double>(levels);
    const double bound = fw >= 0.5 ? l2 / (fw * fw) : 4.0 * l2 / (fw * fw);
    const double rounded = std::ceil(bound);
    if (rounded >= 0x1.0p64) {
        throw ValidationError("shot budget overflows a 64-bit count");
    }
    return static_cast<std::uint64_t>(rounded);
}

std::uint64_t figure_sample_size(std::uint32_t levels, std::uint64_t side) {
    if (levels < 1 || side < 1) {
        throw ValidationError("figure_sample_size needs L >= 1 and d >= 1");
    }
    const long double v = static_cast<long double>(side) * static_cast<long double>(side) *
                          static_cast<long double>(levels) * std::sqrt(static_cast<long double>(levels));
    return static_cast<std::uint64_t>(std::ceil(v));
}

AdaptiveResult adaptive_reconstruct(std::span<const double> dist, std::uint32_t levels,
                                    double target_fraction, std::uint64_t batch,
                                    std::uint64_t max_shots, std::uint64_t seed) {
    if (!(target_fraction > 0.0 && target_fraction <= 1.0)) {
        throw ValidationError("target fraction must lie in (0, 1]");
    }
    if (batch < 1 || max_shots < 1) {
        throw ValidationError("batch and max_shots must be >= 1");
    }

    ShotSampler sampler(dist, seed);
    ShotHistogram hist{std::vector<std::uint64_t>(dist.size(), 0), 0};
    AdaptiveResult result;
    while (hist.total_shots < max_shots) {
        const std::uint64_t n = std::min(batch, max_shots - hist.total_shots);
        sampler.sample_into(hist.counts, n);
        hist.total_shots += n;
        result.reconstruction = grey_levels(hist, levels);
        if (result.reconstruction.fraction_within(1.0) >= target_fraction) {
            result.target_reached = true;
            break;
        }
    }
    result.shots_used = hist.total_shots;
    return result;
}

double FluctuationStudy::median_std() const {
    if (std_map.empty()) {
        return 0.0;
    }
    std::vector<double> v = std_map;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double upper = v[mid];
    if (v.size() % 2 == 1) {
        return upper;
    }
    double lower = *std::max_element(v.begin(), v.begin() + mid);
    return 0.5 * (lower + upper);
}

FluctuationStudy fluctuation_study(std::span<const double> dist, std::uint64_t shots,
                                   unsigned repeats, std::uint32_t levels, std::uint64_t seed,
                                   double bin_width) {
    if (repeats < 2) {
        throw ValidationError("fluctuation study needs at least 2 repeats");
    }
    if (!(bin_width > 0.0)) {
        throw ValidationError("histogram bin width must be positive");
    }

    const std::size_t pixels = dist.size();
    std::vector<double> sum(pixels, 0.0);
    std::vector<std::vector<std::uint32_t>> runs;
    runs.reserve(repeats);

    FluctuationStudy out;
    out.shots = shots;
    out.repeats = repeats;
    for (unsigned r = 0; r < repeats; ++r) {
        auto recon = grey_levels(sample_shots(dist, shots, derive_seed(seed, r)), levels);
        for (std::size_t j = 0; j < pixels; ++j) {
            sum[j] += recon.levels[j];
        }
        runs.push_back(recon.levels);
        if (r == 0) {
            out.first = std::move(recon);
        }
    }

    out.std_map.assign(pixels, 0.0);
    for (std::size_t j = 0; j < pixels; ++j) {
        const double mean = sum[j] / repeats;
        double ss = 0.0;
        for (const auto &run : runs) {
            const double d = run[j] - mean;
            ss += d * d;
        }
        out.std_map[j] = std::sqrt(ss / (repeats - 1));
    }

    const double top = *std::max_element(out.std_map.begin(), out.std_map.end());
    const auto bins = static_cast<std::size_t>(std::floor(top / bin_width)) + 1;
    out.histogram.counts.assign(bins, 0);
    out.histogram.edges.resize(bins + 1);
    for (std::size_t k = 0; k <= bins; ++k) {
        out.histogram.edges[k] = static_cast<double>(k) * bin_width;
    }
    for (double s : out.std_map) {
        auto k = static_cast<std::size_t>(std::floor(s / bin_width));
        ++out.histogram.counts[std::min(k, bins - 1)];
    }
    return out;
}

PixelImage reconstruction_to_image(const GreyReconstruction &recon, std::size_t side) {
    const std::uint32_t L = recon.grey_levels;
    if (L < 2 || !std::has_single_bit(L)) {
        throw ValidationError("grey level count must be a power of two >= 2 for export");
    }
    std::vector<std::uint32_t> px(recon.levels.size());
    for (std::size_t j = 0; j < px.size(); ++j) {
        px[j] = std::min(recon.levels[j], L - 1);
    }
    return PixelImage(side, static_cast<unsigned>(std::countr_zero(L)), std::move(px));
}

nlohmann::json reconstruction_stats_json(const GreyReconstruction &recon,
                                         const FluctuationStudy *study) {
    nlohmann::json j;
    j["shots"] = recon.shots;
    j["f_w"] = recon.white_freq;
    j["grey_levels"] = recon.levels;
    j["ci_halfwidths"] = recon.ci_halfwidths;
    j["std_map"] = study ? study->std_map : std::vector<double>{};
    j["histogram"] = {
        {"edges", study ? study->histogram.edges : std::vector<double>{}},
        {"counts", study ? study->histogram.counts : std::vector<std::uint64_t>{}},
    };
    return j;
}

}  // namespace qjpeg
