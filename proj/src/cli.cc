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

#include "qjpeg/cli.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <optional>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "qjpeg/advantage.h"
#include "qjpeg/downsample.h"
#include "qjpeg/errors.h"
#include "qjpeg/pgm.h"
#include "qjpeg/reconstruct.h"
#include "qjpeg/sensor.h"
#include "qjpeg/synthetic.h"

namespace qjpeg {

namespace {

struct RunConfig {
    std::string input;
    std::string output;
    unsigned nt = 1;
    bool hadamard = false;
    std::optional<std::uint64_t> shots;
    std::string preset = "conservative";
    std::uint64_t seed = 1;
    unsigned repeats = 20;
    std::optional<unsigned> depth;
    std::optional<unsigned> tile_b;
    std::string json;
    std::string csv;

    // advantage
    unsigned n0 = 18;
    std::optional<unsigned> sweep_max_n0;
    unsigned sweep_max_depth = 12;

    // sense
    std::string config;
    bool check_convergence = false;

    // phantom
    std::size_t side = 512;
};

void write_json(const std::string &path, const nlohmann::json &j) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << j.dump(2) << '\n';
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

unsigned output_depth(const RunConfig &cfg, const PixelImage &input) {
    const unsigned c = cfg.depth.value_or(input.depth_bits());
    if (c < 1 || c > 16) {
        throw ValidationError("--depth must be in [1, 16]");
    }
    return c;
}

std::uint64_t shot_budget(const RunConfig &cfg, std::uint32_t levels, std::size_t side) {
    if (cfg.shots) {
        if (*cfg.shots < 1) {
            throw ValidationError("--shots must be >= 1");
        }
        return *cfg.shots;
    }
    if (cfg.preset == "conservative") {
        return sample_size(levels, side);
    }
    if (cfg.preset == "figure3") {
        return figure_sample_size(levels, side);
    }
    throw ValidationError("unknown preset '" + cfg.preset + "'");
}

void validate_nt(const PixelImage &image, unsigned nt) {
    const auto n0 = 2u * static_cast<unsigned>(std::countr_zero(image.side()));
    plan_discards(n0, nt);
}

int cmd_compress(const RunConfig &cfg, std::ostream &out) {
    const PixelImage image = read_pgm(cfg.input);
    const unsigned depth = output_depth(cfg, image);

    ProbabilityGrid grid;
    if (cfg.tile_b && (std::size_t{1} << (*cfg.tile_b / 2)) < image.side()) {
        const TiledImage tiles = tile(image, *cfg.tile_b);
        grid = downsample_tiled(tiles, cfg.nt, cfg.hadamard);
    } else {
        if (cfg.tile_b) {
            tile(image, *cfg.tile_b);  // parameter validation only
        }
        validate_nt(image, cfg.nt);
        grid = downsample(encode_image(image), cfg.nt, cfg.hadamard).grid();
    }

    write_pgm(cfg.output, distribution_to_image(grid, depth));
    if (!cfg.json.empty()) {
        write_json(cfg.json, {{"side", grid.side},
                              {"nt", cfg.nt},
                              {"hadamard", cfg.hadamard},
                              {"distribution", grid.values}});
    }
    out << "compressed " << image.side() << "x" << image.side() << " -> " << grid.side << "x"
        << grid.side << "\n";
    return kExitOk;
}

CompressedImage exact_output(const RunConfig &cfg, const PixelImage &image) {
    validate_nt(image, cfg.nt);
    return downsample(encode_image(image), cfg.nt, cfg.hadamard);
}

int cmd_reconstruct(const RunConfig &cfg, std::ostream &out) {
    const PixelImage image = read_pgm(cfg.input);
    const unsigned depth = output_depth(cfg, image);
    const std::uint32_t levels = std::uint32_t{1} << depth;
    const CompressedImage exact = exact_output(cfg, image);
    const std::uint64_t shots = shot_budget(cfg, levels, exact.side);

    const GreyReconstruction recon = grey_levels(sample_shots(exact.dist, shots, cfg.seed), levels);
    write_pgm(cfg.output, reconstruction_to_image(recon, exact.side));
    if (!cfg.json.empty()) {
        write_json(cfg.json, reconstruction_stats_json(recon));
    }
    out << "reconstructed " << exact.side << "x" << exact.side << " from " << shots << " shots\n";
    return kExitOk;
}

int cmd_fluctuations(const RunConfig &cfg, std::ostream &out) {
    const PixelImage image = read_pgm(cfg.input);
    const unsigned depth = output_depth(cfg, image);
    const std::uint32_t levels = std::uint32_t{1} << depth;
    if (cfg.repeats < 2) {
        throw ValidationError("--repeats must be >= 2");
    }
    const CompressedImage exact = exact_output(cfg, image);
    const std::uint64_t shots = shot_budget(cfg, levels, exact.side);

    const FluctuationStudy study =
        fluctuation_study(exact.dist, shots, cfg.repeats, levels, cfg.seed);
    write_pgm(cfg.output, distribution_to_image({exact.side, study.std_map}, depth));
    if (!cfg.json.empty()) {
        write_json(cfg.json, reconstruction_stats_json(study.first, &study));
    }
    out << "median per-pixel std " << study.median_std() << " over " << cfg.repeats
        << " repeats of " << shots << " shots\n";
    return kExitOk;
}

int cmd_advantage(const RunConfig &cfg, std::ostream &out) {
    const unsigned c = cfg.depth.value_or(8);
    const auto region = advantage_region(cfg.n0, c);

    std::vector<CostReport> reports;
    if (cfg.sweep_max_n0) {
        reports = cost_sweep(*cfg.sweep_max_n0, cfg.sweep_max_depth);
    } else {
        for (unsigned nt = 1; 2 * nt < cfg.n0; ++nt) {
            reports.push_back(cost_report(cfg.n0, nt, c));
        }
    }

    if (!cfg.json.empty()) {
        nlohmann::json j;
        j["n0"] = cfg.n0;
        j["c"] = c;
        j["lhs"] = advantage_lhs(cfg.n0, c);
        j["region"] = region;
        j["reports"] = nlohmann::json::array();
        for (const auto &r : reports) {
            j["reports"].push_back(to_json(r));
        }
        write_json(cfg.json, j);
    }
    if (!cfg.csv.empty()) {
        std::ofstream csv(cfg.csv);
        if (!csv) {
            throw IoError("cannot open '" + cfg.csv + "' for writing");
        }
        write_cost_csv(csv, reports);
    }

    out << "n0=" << cfg.n0 << " c=" << c << " lhs=" << advantage_lhs(cfg.n0, c) << " region={";
    for (std::size_t i = 0; i < region.size(); ++i) {
        out << (i ? "," : "") << region[i];
    }
    out << "}\n";
    return kExitOk;
}

int cmd_sense(const RunConfig &cfg, std::ostream &out) {
    const SensorConfig sc = cfg.config.empty() ? SensorConfig{} : load_sensor_config(cfg.config);
    const unsigned depth = cfg.depth.value_or(8);
    if (depth < 1 || depth > 16) {
        throw ValidationError("--depth must be in [1, 16]");
    }
    const Field field = double_gaussian_field(sc.field);
    const SensorReading reading = sense(field, sc.grid, sc.quad);

    if (sc.grid.side >= 2 && std::has_single_bit(sc.grid.side)) {
        write_pgm(cfg.output, distribution_to_image(reading.grid(), depth));
    } else {
        throw ValidationError("PGM export needs a power-of-two lattice side");
    }

    if (!cfg.json.empty()) {
        nlohmann::json j;
        j["side"] = reading.side;
        j["probs"] = reading.probs;
        j["neighbor_overlap"] = reading.neighbor_overlap;
        j["supports_disjoint"] = reading.supports_disjoint;
        j["top_sites"] = nlohmann::json::array();
        for (auto idx : top_sites(reading, 2)) {
            j["top_sites"].push_back({{"row", idx / reading.side}, {"col", idx % reading.side}});
        }
        if (cfg.check_convergence) {
            j["convergence"] = quadrature_convergence(field, sc.grid, sc.quad);
        }
        write_json(cfg.json, j);
    }
    out << "sensed " << reading.side << "x" << reading.side << " lattice\n";
    return kExitOk;
}

int cmd_phantom(const RunConfig &cfg, std::ostream &out) {
    write_pgm(cfg.output, shepp_logan_phantom(cfg.side, cfg.depth.value_or(8)));
    out << "wrote " << cfg.side << "x" << cfg.side << " phantom\n";
    return kExitOk;
}

void add_pipeline_options(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--input", cfg.input, "Input PGM (square, power-of-two side)")->required();
    sub->add_option("--output", cfg.output, "Output PGM")->required();
    sub->add_option("--nt", cfg.nt, "Downsampling factor (qubit pairs discarded)");
    sub->add_flag("--hadamard", cfg.hadamard, "Enable the Hadamard layers");
    sub->add_option("--depth", cfg.depth, "Output bit depth c (L = 2^c); defaults to the input's");
    sub->add_option("--json", cfg.json, "Optional JSON output");
}

void add_shot_options(CLI::App *sub, RunConfig &cfg) {
    auto *shots = sub->add_option("--shots", cfg.shots, "Shot count");
    auto *preset = sub->add_option("--preset", cfg.preset,
                                   "Shot preset: conservative (4 L^2 d^2) or figure3 (d^2 L^1.5)")
                       ->check(CLI::IsMember({"conservative", "figure3"}));
    shots->excludes(preset);
    sub->add_option("--seed", cfg.seed, "RNG seed");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum JPEG: QFT-based image downsampling simulator", "qjpeg"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto *compress = app.add_subcommand("compress", "Exact downsampled image");
    add_pipeline_options(compress, cfg);
    compress->add_option("--tile-b", cfg.tile_b, "Process in 2^{b/2}-sided blocks (b even)");

    auto *reconstruct = app.add_subcommand("reconstruct", "Shot-based reconstruction");
    add_pipeline_options(reconstruct, cfg);
    add_shot_options(reconstruct, cfg);

    auto *fluct = app.add_subcommand("fluctuations", "Per-pixel std over repeated reconstructions");
    add_pipeline_options(fluct, cfg);
    add_shot_options(fluct, cfg);
    fluct->add_option("--repeats", cfg.repeats, "Number of repeated reconstructions");

    auto *adv = app.add_subcommand("advantage", "Gate-count model report");
    adv->add_option("--n0", cfg.n0, "Register size n0 (even)");
    adv->add_option("--depth", cfg.depth, "Bit depth c (default 8)");
    adv->add_option("--json", cfg.json, "JSON report");
    adv->add_option("--csv", cfg.csv, "CSV table");
    adv->add_option("--sweep-max-n0", cfg.sweep_max_n0, "Tabulate every even n0 up to this value");
    adv->add_option("--sweep-max-depth", cfg.sweep_max_depth, "Largest c in the sweep");

    auto *sen = app.add_subcommand("sense", "Simulate the atom-lattice sensor");
    sen->add_option("--config", cfg.config, "key = value sensor configuration");
    sen->add_option("--output", cfg.output, "Probability PGM")->required();
    sen->add_option("--depth", cfg.depth, "PGM bit depth (default 8)");
    sen->add_option("--json", cfg.json, "JSON with probabilities and peak sites");
    sen->add_flag("--check-convergence", cfg.check_convergence,
                  "Also report the change under doubled quadrature resolution");

    auto *ph = app.add_subcommand("phantom", "Write a Shepp-Logan test image");
    ph->add_option("--output", cfg.output, "Output PGM")->required();
    ph->add_option("--side", cfg.side, "Image side (power of two)");
    ph->add_option("--depth", cfg.depth, "Bit depth (default 8)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (*compress) return cmd_compress(cfg, out);
        if (*reconstruct) return cmd_reconstruct(cfg, out);
        if (*fluct) return cmd_fluctuations(cfg, out);
        if (*adv) return cmd_advantage(cfg, out);
        if (*sen) return cmd_sense(cfg, out);
        if (*ph) return cmd_phantom(cfg, out);
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const DegenerateInputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitValidation;
}

}  // namespace qjpeg
