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

#include "qjpeg/downsample.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracle/density_matrix.h"
#include "qjpeg/errors.h"
#include "qjpeg/synthetic.h"
#include "test_support.h"

using namespace qjpeg;

TEST(PlanDiscards, RegisterOfEighteenDroppingFour) {
    RegisterLayout l = plan_discards(18, 4);
    EXPECT_EQ(l.rule1_discards, (std::vector<unsigned>{14, 15, 16, 17}));
    EXPECT_EQ(l.rule2_discards, (std::vector<unsigned>{5, 6, 7, 8}));
    EXPECT_EQ(l.kept, (std::vector<unsigned>{0, 1, 2, 3, 4, 9, 10, 11, 12, 13}));
    EXPECT_EQ(l.n1(), 14u);
    EXPECT_EQ(l.n2(), 10u);
}

TEST(PlanDiscards, ZeroDiscardKeepsEverything) {
    RegisterLayout l = plan_discards(4, 0);
    EXPECT_TRUE(l.rule1_discards.empty());
    EXPECT_EQ(l.kept, (std::vector<unsigned>{0, 1, 2, 3}));
}

TEST(PlanDiscards, Validation) {
    EXPECT_THROW(plan_discards(5, 1), ValidationError);
    EXPECT_THROW(plan_discards(4, 2), ValidationError);
    EXPECT_THROW(plan_discards(0, 0), ValidationError);
}

TEST(EncodeImage, SqrtOfNormalizedIntensities) {
    QuantumImage qi = encode_image(lower_triangle_4x4());
    EXPECT_EQ(qi.num_qubits(), 4u);
    EXPECT_NEAR(qi.state[0].real(), std::sqrt(0.1), 1e-15);
    EXPECT_EQ(qi.state[1], Amplitude(0.0));
    EXPECT_NEAR(qi.state.norm(), 1.0, 1e-15);
    EXPECT_THROW(encode_image(PixelImage(4, 1)), DegenerateInputError);
}

TEST(EncodeImage, PermutationCovariance) {
    std::mt19937_64 rng(4);
    PixelImage img = test_util::random_image(8, 8, rng);
    std::vector<std::size_t> perm(64);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::uint32_t> px(64);
    for (std::size_t j = 0; j < 64; ++j) px[perm[j]] = img.pixels()[j];
    QuantumImage a = encode_image(img);
    QuantumImage b = encode_image(PixelImage(8, 8, px));
    for (std::size_t j = 0; j < 64; ++j) {
        EXPECT_EQ(b.state[perm[j]], a.state[j]);
    }
}

TEST(Downsample, TriangleWithoutHadamard) {
    CompressedImage out = downsample(encode_image(lower_triangle_4x4()), 1, false);
    ASSERT_EQ(out.side, 2u);
    const std::vector<double> expected{0.34375, 0.06976, 0.31659, 0.26990};
    EXPECT_LT(test_util::max_abs_diff(out.dist, expected), 1e-4);
}

TEST(Downsample, TriangleWithHadamard) {
    CompressedImage out = downsample(encode_image(lower_triangle_4x4()), 1, true);
    const std::vector<double> expected{0.30, 0.0, 0.4125, 0.2875};
    EXPECT_LT(test_util::max_abs_diff(out.dist, expected), 1e-12);
}

TEST(Downsample, ZeroDiscardReturnsInput) {
    std::mt19937_64 rng(8);
    PixelImage img = test_util::random_image(8, 4, rng);
    const double total = static_cast<double>(img.total_brightness());
    for (bool h : {false, true}) {
        CompressedImage out = downsample(encode_image(img), 0, h);
        for (std::size_t j = 0; j < 64; ++j) {
            EXPECT_NEAR(out.dist[j], img.pixels()[j] / total, 1e-12);
        }
    }
}

TEST(Downsample, MatchesDensityMatrixOracle) {
    std::mt19937_64 rng(21);
    for (std::size_t side : {2u, 4u, 8u, 16u}) {
        const unsigned n0 = 2 * static_cast<unsigned>(std::countr_zero(side));
        PixelImage img = test_util::random_image(side, 8, rng);
        for (unsigned nt = 0; 2 * nt < n0; ++nt) {
            for (bool h : {false, true}) {
                CompressedImage out = downsample(encode_image(img), nt, h);
                EXPECT_EQ(out.dist.size(), (side * side) >> (2 * nt));
                EXPECT_NEAR(test_util::sum(out.dist), 1.0, 1e-10);
                EXPECT_LT(test_util::max_abs_diff(out.dist, oracle::oracle_pipeline(img, nt, h)),
                          1e-12)
                    << side << " " << nt << " " << h;
            }
        }
    }
}

TEST(DownsamplePreserving, ProjectionMatchesOracle) {
    std::mt19937_64 rng(31);
    for (std::size_t side : {4u, 8u, 16u}) {
        PixelImage img = test_util::random_image(side, 8, rng);
        const unsigned n0 = 2 * static_cast<unsigned>(std::countr_zero(side));
        for (unsigned nt = 1; 2 * nt < n0; ++nt) {
            Distribution p = downsample_preserving(encode_image(img), nt, ResetMode::kProject);
            EXPECT_EQ(p.size(), side * side);
            EXPECT_NEAR(test_util::sum(p), 1.0, 1e-10);
            EXPECT_LT(test_util::max_abs_diff(p, oracle::oracle_project(img, nt)), 1e-12);
        }
    }
}

TEST(DownsamplePreserving, TraceAndReplaceMatchesOracle) {
    std::mt19937_64 rng(32);
    for (std::size_t side : {4u, 8u, 16u}) {
        PixelImage img = test_util::random_image(side, 8, rng);
        const unsigned n0 = 2 * static_cast<unsigned>(std::countr_zero(side));
        for (unsigned nt = 1; 2 * nt < n0; ++nt) {
            Distribution p =
                downsample_preserving(encode_image(img), nt, ResetMode::kTraceAndReplace);
            EXPECT_NEAR(test_util::sum(p), 1.0, 1e-10);
            EXPECT_LT(test_util::max_abs_diff(p, oracle::oracle_trace_and_replace(img, nt)), 1e-12);
        }
    }
}

TEST(DownsamplePreserving, ModesDisagreeInGeneral) {
    PixelImage img = lower_triangle_4x4();
    Distribution a = downsample_preserving(encode_image(img), 1, ResetMode::kProject);
    Distribution b = downsample_preserving(encode_image(img), 1, ResetMode::kTraceAndReplace);
    EXPECT_GT(test_util::max_abs_diff(a, b), 1e-3);
}

TEST(DistributionToImage, ScalesToPeak) {
    ProbabilityGrid g{2, {0.5, 0.25, 0.0, 0.25}};
    PixelImage img = distribution_to_image(g, 8);
    EXPECT_EQ(img.at(0, 0), 255u);
    EXPECT_EQ(img.at(0, 1), 128u);
    EXPECT_EQ(img.at(1, 0), 0u);
}

TEST(DownsampleTiled, SingleTileEqualsWholeImage) {
    std::mt19937_64 rng(12);
    PixelImage img = test_util::random_image(8, 8, rng);
    ProbabilityGrid tiled = downsample_tiled(tile(img, 6), 1, true);
    CompressedImage whole = downsample(encode_image(img), 1, true);
    EXPECT_LT(test_util::max_abs_diff(tiled.values, whole.dist), 1e-12);
}

TEST(DownsampleTiled, BlocksAreBrightnessWeighted) {
    std::mt19937_64 rng(13);
    PixelImage img = test_util::random_image(16, 8, rng);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 8; c < 16; ++c) img.set(r, c, 0);  // top-right block black
    TiledImage tiles = tile(img, 6);
    ProbabilityGrid out = downsample_tiled(tiles, 1, false);
    ASSERT_EQ(out.side, 8u);
    EXPECT_NEAR(test_util::sum(out.values), 1.0, 1e-12);
    const double total = static_cast<double>(img.total_brightness());
    for (std::size_t b = 0; b < 4; ++b) {
        const std::size_t br = b / 2, bc = b % 2;
        double block_sum = 0.0;
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) block_sum += out.at(br * 4 + r, bc * 4 + c);
        EXPECT_NEAR(block_sum, tiles.blocks[b].total_brightness() / total, 1e-12);
    }
}
