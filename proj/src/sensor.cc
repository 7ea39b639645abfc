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

#include "qjpeg/sensor.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "qjpeg/errors.h"
#include "qjpeg/quadrature.h"

namespace qjpeg {

Field::Field(Evaluator evaluator, Box support)
    : evaluator_(std::move(evaluator)), support_(support) {
    if (!evaluator_) {
        throw ValidationError("field needs an evaluator");
    }
}

Field Field::shifted(double dx, double dy) const {
    Evaluator inner = evaluator_;
    Box box{support_.x_lo + dx, support_.x_hi + dx, support_.y_lo + dy, support_.y_hi + dy};
    return Field([inner, dx, dy](double x, double y) { return inner(x - dx, y - dy); }, box);
}

Field Field::scaled(std::complex<double> factor) const {
    Evaluator inner = evaluator_;
    return Field([inner, factor](double x, double y) { return factor * inner(x, y); }, support_);
}

Field Field::operator+(const Field &other) const {
    Evaluator a = evaluator_;
    Evaluator b = other.evaluator_;
    Box box{std::min(support_.x_lo, other.support_.x_lo), std::max(support_.x_hi, other.support_.x_hi),
            std::min(support_.y_lo, other.support_.y_lo), std::max(support_.y_hi, other.support_.y_hi)};
    return Field([a, b](double x, double y) { return a(x, y) + b(x, y); }, box);
}

Field gaussian_field(const std::vector<GaussianLobe> &lobes) {
    if (lobes.empty()) {
        throw ValidationError("gaussian field needs at least one lobe");
    }
    Box box{INFINITY, -INFINITY, INFINITY, -INFINITY};
    for (const auto &l : lobes) {
        if (!(l.a > 0.0) || !(l.b > 0.0)) {
            throw ValidationError("gaussian lobe widths must be positive");
        }
        // exp(-45) ~ 3e-20: beyond this the lobe is numerically zero.
        const double rx = std::sqrt(45.0 / l.a);
        const double ry = std::sqrt(45.0 / l.b);
        box.x_lo = std::min(box.x_lo, l.x0 - rx);
        box.x_hi = std::max(box.x_hi, l.x0 + rx);
        box.y_lo = std::min(box.y_lo, l.y0 - ry);
        box.y_hi = std::max(box.y_hi, l.y0 + ry);
    }
    return Field(
        [lobes](double x, double y) {
            double s = 0.0;
            for (const auto &l : lobes) {
                const double dx = x - l.x0;
                const double dy = y - l.y0;
                s += l.amplitude * std::exp(-l.a * dx * dx - l.b * dy * dy);
            }
            return std::complex<double>(s, 0.0);
        },
        box);
}

Field double_gaussian_field(const DoubleGaussianParams &params) {
    return gaussian_field({params.lobes.begin(), params.lobes.end()});
}

void CouplingGrid::validate() const {
    if (side < 1) {
        throw ValidationError("lattice side must be >= 1");
    }
    if (!(extent > 0.0) || !(width > 0.0)) {
        throw ValidationError("lattice extent and coupling width must be positive");
    }
    if (!(overlap_tolerance > 0.0)) {
        throw ValidationError("overlap tolerance must be positive");
    }
}

double CouplingGrid::spacing() const {
    return side > 1 ? 2.0 * extent / static_cast<double>(side - 1) : 0.0;
}

double CouplingGrid::radius() const {
    return support_radius > 0.0 ? support_radius : 4.0 / std::sqrt(width);
}

double CouplingGrid::x_center(std::size_t n) const {
    return side > 1 ? -extent + static_cast<double>(n) * spacing() : 0.0;
}

double CouplingGrid::y_center(std::size_t m) const {
    return side > 1 ? extent - static_cast<double>(m) * spacing() : 0.0;
}

double CouplingGrid::coupling(std::size_t m, std::size_t n, double x, double y) const {
    const double dx = x - x_center(n);
    const double dy = y - y_center(m);
    return std::exp(-width * (dx * dx + dy * dy));
}

std::pair<std::size_t, std::size_t> CouplingGrid::nearest_site(double x, double y) const {
    if (side == 1) {
        return {0, 0};
    }
    auto clamp_index = [this](double t) {
        const double r = std::round(t);
        return static_cast<std::size_t>(std::clamp(r, 0.0, static_cast<double>(side - 1)));
    };
    return {clamp_index((extent - y) / spacing()), clamp_index((x + extent) / spacing())};
}

double coupling_overlap(const CouplingGrid &grid) {
    grid.validate();
    if (grid.side < 2) {
        return 0.0;
    }
    // The couplings are separable and share their y profile, so the ratio
    // reduces to a 1-D integral along x.
    const double s = grid.spacing();
    const double reach = 10.0 / std::sqrt(grid.width);
    const auto rule = composite_gauss_legendre(-reach, s + reach, 16, 64);
    double cross = 0.0;
    double self = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = rule.nodes[i];
        const double ga = std::exp(-grid.width * x * x);
        const double gb = std::exp(-grid.width * (x - s) * (x - s));
        cross += rule.weights[i] * ga * gb;
        self += rule.weights[i] * ga * ga;
    }
    return cross / self;
}

SensorReading sense(const Field &field, const CouplingGrid &grid, const QuadratureSpec &quad) {
    grid.validate();
    if (quad.order < 1 || quad.panels < 1) {
        throw ValidationError("quadrature order and panel count must be >= 1");
    }
    const double radius = grid.radius();
    const double nodes_per_width =
        quad.nodes_per_axis() / (2.0 * radius) * (1.0 / std::sqrt(grid.width));
    if (nodes_per_width < 4.0 - 1e-9) {
        throw ValidationError("quadrature resolution " + std::to_string(nodes_per_width) +
                              " nodes per coupling width is below the minimum of 4");
    }

    // Node offsets and coupling weights are the same for every site.
    const auto rule = composite_gauss_legendre(-radius, radius, quad.order, quad.panels);
    const std::size_t q = rule.nodes.size();
    std::vector<double> kernel(q * q);
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t k = 0; k < q; ++k) {
            const double ox = rule.nodes[i];
            const double oy = rule.nodes[k];
            kernel[i * q + k] =
                rule.weights[i] * rule.weights[k] * std::exp(-grid.width * (ox * ox + oy * oy));
        }
    }

    SensorReading out;
    out.side = grid.side;
    out.v.assign(grid.side * grid.side, {0.0, 0.0});
    for (std::size_t m = 0; m < grid.side; ++m) {
        const double yc = grid.y_center(m);
        for (std::size_t n = 0; n < grid.side; ++n) {
            const double xc = grid.x_center(n);
            const Box site{xc - radius, xc + radius, yc - radius, yc + radius};
            if (!site.intersects(field.support())) {
                continue;
            }
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t i = 0; i < q; ++i) {
                const double x = xc + rule.nodes[i];
                for (std::size_t k = 0; k < q; ++k) {
                    acc += field(x, yc + rule.nodes[k]) * kernel[i * q + k];
                }
            }
            out.v[m * grid.side + n] = acc;
        }
    }

    double total = 0.0;
    for (const auto &v : out.v) {
        total += std::norm(v);
    }
    if (!(total > 0.0)) {
        throw DegenerateInputError("sensor reading is all zero: field misses the lattice");
    }
    out.probs.resize(out.v.size());
    for (std::size_t j = 0; j < out.v.size(); ++j) {
        out.probs[j] = std::norm(out.v[j]) / total;
    }
    out.neighbor_overlap = coupling_overlap(grid);
    out.supports_disjoint = out.neighbor_overlap < grid.overlap_tolerance;
    return out;
}

double quadrature_convergence(const Field &field, const CouplingGrid &grid,
                              const QuadratureSpec &quad) {
    const auto coarse = sense(field, grid, quad);
    const auto fine = sense(field, grid, quad.doubled());
    double peak = 0.0;
    for (const auto &v : fine.v) {
        peak = std::max(peak, std::norm(v));
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < fine.v.size(); ++j) {
        worst = std::max(worst, std::abs(std::norm(fine.v[j]) - std::norm(coarse.v[j])) / peak);
    }
    return worst;
}

QuantumImage encode_from_sensor(const SensorReading &reading) {
    double total = 0.0;
    for (const auto &v : reading.v) {
        total += std::norm(v);
    }
    if (!(total > 0.0)) {
        throw DegenerateInputError("cannot encode a zero sensor reading");
    }
    const double scale = 1.0 / std::sqrt(total);
    std::vector<Amplitude> amps(reading.v.size());
    for (std::size_t j = 0; j < amps.size(); ++j) {
        amps[j] = reading.v[j] * scale;
    }
    return quantum_image_from_amplitudes(std::move(amps), reading.side);
}

std::vector<std::size_t> top_sites(const SensorReading &reading, std::size_t k) {
    std::vector<std::size_t> idx(reading.probs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    k = std::min(k, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                      [&](std::size_t a, std::size_t b) {
                          if (reading.probs[a] != reading.probs[b]) {
                              return reading.probs[a] > reading.probs[b];
                          }
                          return a < b;
                      });
    idx.resize(k);
    return idx;
}

SensorConfig parse_sensor_config(std::istream &in) {
    SensorConfig cfg;
    std::map<std::string, double *> reals{
        {"extent", &cfg.grid.extent},
        {"width", &cfg.grid.width},
        {"support_radius", &cfg.grid.support_radius},
        {"overlap_tolerance", &cfg.grid.overlap_tolerance},
    };
    for (int i = 0; i < 2; ++i) {
        auto &lobe = cfg.field.lobes[i];
        const std::string p = "lobe" + std::to_string(i) + ".";
        reals[p + "amplitude"] = &lobe.amplitude;
        reals[p + "x"] = &lobe.x0;
        reals[p + "y"] = &lobe.y0;
        reals[p + "a"] = &lobe.a;
        reals[p + "b"] = &lobe.b;
    }

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        std::string key;
        std::istringstream(line.substr(0, eq)) >> key;
        std::istringstream value_stream(line.substr(eq + 1));
        double value = 0.0;
        std::string trailing;
        if (!(value_stream >> value) || (value_stream >> trailing)) {
            throw ValidationError("config line " + std::to_string(line_no) + ": bad value for '" +
                                  key + "'");
        }

        auto as_count = [&]() {
            if (value < 1 || value != std::floor(value)) {
                throw ValidationError("config key '" + key + "' needs a positive integer");
            }
            return value;
        };
        if (key == "side") {
            cfg.grid.side = static_cast<std::size_t>(as_count());
        } else if (key == "quad_order") {
            cfg.quad.order = static_cast<unsigned>(as_count());
        } else if (key == "quad_panels") {
            cfg.quad.panels = static_cast<unsigned>(as_count());
        } else if (auto it = reals.find(key); it != reals.end()) {
            *it->second = value;
        } else {
            throw ValidationError("config line " + std::to_string(line_no) + ": unknown key '" +
                                  key + "'");
        }
    }
    cfg.grid.validate();
    for (const auto &l : cfg.field.lobes) {
        if (!(l.a > 0.0) || !(l.b > 0.0)) {
            throw ValidationError("gaussian lobe widths must be positive");
        }
    }
    return cfg;
}

SensorConfig load_sensor_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open sensor config '" + path + "'");
    }
    return parse_sensor_config(in);
}

}  // namespace qjpeg
