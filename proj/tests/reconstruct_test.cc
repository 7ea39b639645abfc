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
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qjpeg/errors.h"

using namespace qjpeg;

namespace {

ShotHistogram make_hist(std::vector<std::uint64_t> counts) {
    ShotHistogram h;
    h.counts = std::move(counts);
    for (auto c : h.counts) h.total_shots += c;
    return h;
}

}  // namespace

TEST(ShotSampler, FollowsDocumentedStream) {
    const std::vector<double> dist{0.1, 0.2, 0.3, 0.4};
    ShotSampler s(dist, 42);
    std::mt19937_64 eng(42);
    for (int i = 0; i < 1000; ++i) {
        const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
        std::size_t expect = 0;
        double acc = 0.0;
        for (; expect < 3; ++expect) {
            acc += dist[expect];
            if (u < acc) break;
        }
        ASSERT_EQ(s.next(), expect) << i;
    }
}

TEST(ShotSampler, PointMassAndUniformFrequencies) {
    EXPECT_EQ(sample_shots(std::vector<double>{1, 0, 0}, 500, 1).counts,
              (std::vector<std::uint64_t>{500, 0, 0}));
    ShotHistogram h = sample_shots(std::vector<double>(4, 0.25), 1000000, 8);
    for (double f : h.frequencies()) EXPECT_NEAR(f, 0.25, 0.002);
}

TEST(ShotSampler, NeverSelectsZeroProbabilityBins) {
    const std::vector<double> dist{0.0, 0.5, 0.0, 0.5, 0.0};
    ShotHistogram h = sample_shots(dist, 10000, 3);
    EXPECT_EQ(h.counts[0], 0u);
    EXPECT_EQ(h.counts[2], 0u);
    EXPECT_EQ(h.counts[4], 0u);
    EXPECT_EQ(h.total_shots, 10000u);
}

TEST(ShotSampler, Validation) {
    EXPECT_THROW(ShotSampler(std::vector<double>{0.5, 0.4}, 1), ValidationError);
    EXPECT_THROW(ShotSampler(std::vector<double>{1.5, -0.5}, 1), ValidationError);
    EXPECT_THROW(sample_shots(std::vector<double>{1.0}, 0, 1), ValidationError);
}

TEST(ShotSampler, SameSeedSameCounts) {
    const std::vector<double> dist{0.25, 0.25, 0.25, 0.25};
    EXPECT_EQ(sample_shots(dist, 5000, 9).counts, sample_shots(dist, 5000, 9).counts);
    EXPECT_NE(sample_shots(dist, 5000, 9).counts, sample_shots(dist, 5000, 10).counts);
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
}

TEST(GreyLevels, WhitePixelCarriesL) {
    GreyReconstruction r = grey_levels(make_hist({40, 20, 10, 0}), 16);
    EXPECT_EQ(r.levels, (std::vector<std::uint32_t>{16, 8, 4, 0}));
    EXPECT_DOUBLE_EQ(r.white_freq, 40.0 / 70.0);
}

TEST(GreyLevels, TiesBothMapToWhite) {
    GreyReconstruction r = grey_levels(make_hist({10, 0, 0, 10}), 256);
    EXPECT_EQ(r.levels, (std::vector<std::uint32_t>{256, 0, 0, 256}));
}

TEST(GreyLevels, ConfidenceHalfWidthFormula) {
    GreyReconstruction r = grey_levels(make_hist({100, 50}), 4);
    EXPECT_EQ(r.levels, (std::vector<std::uint32_t>{4, 2}));
    const double fw = 100.0 / 150.0, f1 = 50.0 / 150.0;
    EXPECT_NEAR(r.ci_halfwidths[0], 2 * std::sqrt(fw * (1 - fw) * 16 / (fw * fw * 150)), 1e-12);
    EXPECT_NEAR(r.ci_halfwidths[1], 2 * std::sqrt(f1 * (1 - f1) * 16 / (fw * fw * 150)), 1e-12);
}

TEST(GreyLevels, RoundsHalfUp) {
    // f/f_w * L = 3/8 * 4 = 1.5 -> 2; 1/8 * 4 = 0.5 -> 1.
    GreyReconstruction r = grey_levels(make_hist({8, 3, 1}), 4);
    EXPECT_EQ(r.levels, (std::vector<std::uint32_t>{4, 2, 1}));
}

TEST(GreyLevels, SingleShotGivesOneWhitePixel) {
    ShotHistogram h = sample_shots(std::vector<double>{0.1, 0.2, 0.3, 0.4}, 1, 77);
    GreyReconstruction r = grey_levels(h, 256);
    EXPECT_EQ(std::count(r.levels.begin(), r.levels.end(), 256u), 1);
    EXPECT_EQ(std::count(r.levels.begin(), r.levels.end(), 0u), 3);
}

TEST(GreyLevels, ScaleInvariantInCounts) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::uint64_t> c(16);
        for (auto &x : c) x = rng() % 1000;
        c[0] += 1;
        std::vector<std::uint64_t> k = c;
        const std::uint64_t factor = 2 + rng() % 7;
        for (auto &x : k) x *= factor;
        EXPECT_EQ(grey_levels(make_hist(c), 256).levels, grey_levels(make_hist(k), 256).levels);
    }
}

TEST(GreyLevels, MonotoneInCounts) {
    std::mt19937_64 rng(2);
    std::vector<std::uint64_t> c(64);
    for (auto &x : c) x = rng() % 5000;
    GreyReconstruction r = grey_levels(make_hist(c), 256);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[i] <= c[j]) EXPECT_LE(r.levels[i], r.levels[j]);
}

TEST(GreyLevels, Validation) {
    EXPECT_THROW(grey_levels(make_hist({0, 0}), 16), DegenerateInputError);
    EXPECT_THROW(grey_levels(make_hist({1, 1}), 0), ValidationError);
    ShotHistogram bad = make_hist({1, 1});
    bad.total_shots = 3;
    EXPECT_THROW(grey_levels(bad, 16), ValidationError);
}

TEST(SampleSize, ConservativeFormula) {
    EXPECT_EQ(sample_size(16, 4), 16384u);
    EXPECT_EQ(sample_size(256, 128), 4ull * 256 * 256 * 128 * 128);
    EXPECT_EQ(sample_size(256, 128), 4294967296u);
    EXPECT_EQ(sample_size(256, 1, 1.0), 65536u);
    EXPECT_EQ(sample_size(2, 1, 0.25), 256u);
    EXPECT_EQ(sample_size(16, 4, 0.5), 1024u);
    EXPECT_THROW(sample_size(1, 4), ValidationError);
    EXPECT_THROW(sample_size(16, 4, 0.0), ValidationError);
}

TEST(SampleSize, MonotoneInLevelsAndSide) {
    for (std::uint32_t L = 2; L <= 1024; L *= 2)
        for (std::uint64_t d = 1; d <= 512; d *= 2) {
            EXPECT_LE(sample_size(L, d), sample_size(2 * L, d));
            EXPECT_LE(sample_size(L, d), sample_size(L, 2 * d));
            EXPECT_LE(figure_sample_size(L, d), figure_sample_size(2 * L, d));
            EXPECT_LE(figure_sample_size(L, d), figure_sample_size(L, 2 * d));
        }
}

TEST(SampleSize, FigurePresetIsDSquaredLToThreeHalves) {
    EXPECT_EQ(figure_sample_size(256, 256), 256ull * 256 * 4096);
    EXPECT_EQ(figure_sample_size(256, 128), (1ull << 14) * 4096);
}

TEST(ConfidenceIntervals, WithinOneLevelAtConservativeBudget) {
    std::vector<double> dist(16, 1.0 / 16);
    GreyReconstruction r = grey_levels(sample_shots(dist, sample_size(16, 4), 5), 16);
    EXPECT_DOUBLE_EQ(r.fraction_within(1.0), 1.0);
}

// Over repeated trials the reported intervals cover the true p_j L / p_w.
TEST(ConfidenceIntervals, CoverageAtLeastNinetyPercent) {
    const std::vector<double> dist{0.3, 0.2, 0.15, 0.1, 0.08, 0.07, 0.06, 0.04};
    const std::uint32_t L = 16;
    const double pw = 0.3;
    std::uint64_t covered = 0, total = 0;
    for (std::uint64_t t = 0; t < 200; ++t) {
        GreyReconstruction r = grey_levels(sample_shots(dist, 4000, derive_seed(17, t)), L);
        for (std::size_t j = 1; j < dist.size(); ++j) {
            const double truth = dist[j] * L / pw;
            const double est = static_cast<double>(r.levels[j]);
            covered += std::abs(est - truth) <= r.ci_halfwidths[j] + 0.5;
            ++total;
        }
    }
    EXPECT_GE(static_cast<double>(covered) / static_cast<double>(total), 0.90);
}

TEST(Adaptive, PointMassStopsAfterFirstBatch) {
    std::vector<double> dist(16, 0.0);
    dist[3] = 1.0;
    AdaptiveResult a = adaptive_reconstruct(dist, 256, 1.0, 100, 100000, 1);
    EXPECT_TRUE(a.target_reached);
    EXPECT_EQ(a.shots_used, 100u);
}

TEST(Adaptive, UniformNeedsAtMostTwiceTheConservativeBudget) {
    std::vector<double> dist(16, 1.0 / 16);
    AdaptiveResult a = adaptive_reconstruct(dist, 16, 0.95, 512, 1u << 20, 2);
    EXPECT_TRUE(a.target_reached);
    EXPECT_LE(a.shots_used, 2 * sample_size(16, 4));
    AdaptiveResult one = adaptive_reconstruct(dist, 16, 1.0, 64, 64, 2);
    EXPECT_EQ(one.shots_used, 64u);
}

TEST(Adaptive, StopsWhenTargetReached) {
    std::vector<double> dist(16, 1.0 / 16);
    AdaptiveResult a = adaptive_reconstruct(dist, 16, 0.95, 1000, 100000, 3);
    EXPECT_TRUE(a.target_reached);
    EXPECT_EQ(a.shots_used % 1000, 0u);
    EXPECT_GE(a.reconstruction.fraction_within(1.0), 0.95);
    AdaptiveResult b = adaptive_reconstruct(dist, 16, 1.0, 1000, 2500, 3);
    EXPECT_FALSE(b.target_reached);
    EXPECT_EQ(b.shots_used, 2500u);
}

TEST(Fluctuations, PointMassHasZeroStd) {
    std::vector<double> dist(16, 0.0);
    dist[5] = 1.0;
    FluctuationStudy s = fluctuation_study(dist, 100, 20, 256, 1);
    for (double v : s.std_map) EXPECT_EQ(v, 0.0);
    EXPECT_EQ(s.histogram.counts.at(0), 16u);
}

TEST(Fluctuations, ReproducibleAndBinned) {
    std::vector<double> dist(16, 1.0 / 16);
    FluctuationStudy a = fluctuation_study(dist, 2000, 10, 16, 4);
    FluctuationStudy b = fluctuation_study(dist, 2000, 10, 16, 4);
    EXPECT_EQ(a.std_map, b.std_map);
    std::uint64_t total = 0;
    for (auto c : a.histogram.counts) total += c;
    EXPECT_EQ(total, 16u);
    EXPECT_EQ(a.histogram.edges.size(), a.histogram.counts.size() + 1);
    EXPECT_THROW(fluctuation_study(dist, 100, 1, 16, 4), ValidationError);
}

TEST(Export, ClampsWhiteToMaxValue) {
    GreyReconstruction r = grey_levels(make_hist({4, 2, 1, 0}), 256);
    PixelImage img = reconstruction_to_image(r, 2);
    EXPECT_EQ(img.depth_bits(), 8u);
    EXPECT_EQ(img.at(0, 0), 255u);
    EXPECT_EQ(img.at(0, 1), 128u);
    nlohmann::json j = reconstruction_stats_json(r);
    EXPECT_EQ(j["grey_levels"][0], 256);
    EXPECT_EQ(j["shots"], 7);
}
