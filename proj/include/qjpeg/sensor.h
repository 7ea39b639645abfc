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
 * Atom-lattice image sensor in the single-excitation, first-order regime.
 *
 * A coherent field psi(x, y) illuminates an N x N lattice of two-level atoms
 * with Gaussian couplings g_mn(x, y) = exp(-w (x - x_n)^2 - w (y - y_m)^2).
 * After post-selecting away the no-excitation outcome, the lattice holds
 * sum_mn v_mn |1>_mn with
 *
 *   v_mn = integral over P_mn of psi(x, y) conj(g_mn(x, y)),
 *
 * P_mn being the square of half-side support_radius around site (m, n).
 * The common prefactor set by the interaction strength and the coherent
 * amplitude drops out under normalization and is not modeled. The
 * approximation holds while the interaction is weak enough that
 * multi-excitation terms are negligible.
 *
 * Axis convention: column n maps to x_n = -extent + n * spacing (left to
 * right) and row m maps to y_m = +extent - m * spacing (top to bottom), so
 * the probability grid prints with +y up. spacing = 2 extent / (N - 1).
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "qjpeg/downsample.h"

namespace qjpeg {

struct Box {
    double x_lo = 0.0;
    double x_hi = 0.0;
    double y_lo = 0.0;
    double y_hi = 0.0;

    bool intersects(const Box &other) const {
        return x_lo <= other.x_hi && other.x_lo <= x_hi && y_lo <= other.y_hi &&
               other.y_lo <= y_hi;
    }
};

/// Complex field amplitude psi(x, y) with a bounding box outside which it is
/// treated as zero.
class Field {
  public:
    using Evaluator = std::function<std::complex<double>(double, double)>;

    Field(Evaluator evaluator, Box support);

    std::complex<double> operator()(double x, double y) const { return evaluator_(x, y); }
    const Box &support() const { return support_; }

    /// psi(x - dx, y - dy).
    Field shifted(double dx, double dy) const;
    Field scaled(std::complex<double> factor) const;
    Field operator+(const Field &other) const;

  private:
    Evaluator evaluator_;
    Box support_;
};

/// amplitude * exp(-a (x - x0)^2 - b (y - y0)^2).
struct GaussianLobe {
    double amplitude = 1.0;
    double x0 = 0.0;
    double y0 = 0.0;
    double a = 1.0;
    double b = 1.0;
};

/// Two lobes; defaults put the first at (-1.5, 2) elongated along x and the
/// second at (2, -1.5) elongated along y.
struct DoubleGaussianParams {
    std::array<GaussianLobe, 2> lobes{{
        {1.0, -1.5, 2.0, 0.35, 1.0},
        {1.0, 2.0, -1.5, 1.0, 0.35},
    }};
};

Field gaussian_field(const std::vector<GaussianLobe> &lobes);
Field double_gaussian_field(const DoubleGaussianParams &params = {});

struct CouplingGrid {
    std::size_t side = 64;
    /// Sites span [-extent, extent] on both axes.
    double extent = 4.0;
    /// Gaussian sharpness w in exp(-w r^2).
    double width = 5.0;
    /// Half-side of each integration square; <= 0 selects 4 / sqrt(width).
    double support_radius = 0.0;
    /// Neighbor overlap below this counts as disjoint supports.
    double overlap_tolerance = 1e-2;

    void validate() const;
    double spacing() const;
    double radius() const;
    double x_center(std::size_t n) const;
    double y_center(std::size_t m) const;
    double coupling(std::size_t m, std::size_t n, double x, double y) const;
    /// Lattice site (row m, column n) nearest to the point (x, y).
    std::pair<std::size_t, std::size_t> nearest_site(double x, double y) const;
};

/// Composite Gauss-Legendre per axis: `panels` panels of `order` nodes.
struct QuadratureSpec {
    unsigned order = 8;
    unsigned panels = 4;

    unsigned nodes_per_axis() const { return order * panels; }
    QuadratureSpec doubled() const { return {order, panels * 2}; }
};

struct SensorReading {
    std::size_t side = 0;
    /// Row-major v_mn before normalization.
    std::vector<std::complex<double>> v;
    /// |v_mn|^2 / sum |v|^2, row-major.
    std::vector<double> probs;
    /// <g_a, g_b> / <g_a, g_a> for horizontally adjacent sites.
    double neighbor_overlap = 0.0;
    bool supports_disjoint = false;

    ProbabilityGrid grid() const { return {side, probs}; }
};

/// Normalized inner product of two adjacent couplings, by quadrature. 0 for
/// a single-site lattice. Analytically exp(-w s^2 / 2).
double coupling_overlap(const CouplingGrid &grid);

/// Evaluates v_mn for every site. Needs at least 4 quadrature nodes per
/// coupling width 1/sqrt(w). Throws DegenerateInputError when every v_mn is 0.
SensorReading sense(const Field &field, const CouplingGrid &grid, const QuadratureSpec &quad = {});

/// Largest absolute change of |v_mn|^2 / max|v|^2 when the quadrature
/// resolution is doubled.
double quadrature_convergence(const Field &field, const CouplingGrid &grid,
                              const QuadratureSpec &quad = {});

/// Row-major flattening of v, normalized: the binary-register state on
/// 2 log2(N) qubits. N must be a power of two >= 2.
QuantumImage encode_from_sensor(const SensorReading &reading);

/// Indices of the k largest probabilities, descending (ties by index).
std::vector<std::size_t> top_sites(const SensorReading &reading, std::size_t k);

struct SensorConfig {
    DoubleGaussianParams field;
    CouplingGrid grid;
    QuadratureSpec quad;
};

/// Parses `key = value` lines; '#' starts a comment. Keys:
///   side, extent, width, support_radius, overlap_tolerance,
///   quad_order, quad_panels,
///   lobe0.amplitude, lobe0.x, lobe0.y, lobe0.a, lobe0.b (same for lobe1).
/// Unset keys keep their defaults.
SensorConfig parse_sensor_config(std::istream &in);
SensorConfig load_sensor_config(const std::string &path);

}  // namespace qjpeg
