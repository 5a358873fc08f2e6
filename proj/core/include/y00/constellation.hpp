// Copyright 2026 The y00sim Authors
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
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace y00 {

/// A coherent state |alpha>, amplitude in units of sqrt(photons).
struct CoherentPoint {
    std::complex<double> amplitude;

    /// Mean photon number S = |alpha|^2.
    double photons() const { return std::norm(amplitude); }

    bool operator==(const CoherentPoint &) const = default;
};

enum class Modulation { psk, ask };

/// Gaussian optical receivers. Per-quadrature noise variance is 1/4 for
/// homodyne (vacuum only) and 1/2 for heterodyne (vacuum plus the penalty for
/// measuring both quadratures at once).
enum class Quadrature { homodyne, heterodyne };

inline double quadrature_variance(Quadrature mode) {
    return mode == Quadrature::homodyne ? 0.25 : 0.5;
}

/// Ordered set of 2M coherent states; basis k is the pair {k, k + M}.
class Constellation {
  public:
    Modulation kind() const { return kind_; }
    unsigned num_bases() const { return num_bases_; }
    std::size_t size() const { return points_.size(); }
    std::span<const CoherentPoint> points() const { return points_; }
    const CoherentPoint &operator[](std::size_t i) const { return points_[i]; }

    /// Euclidean distance between adjacent points (chord for PSK).
    double neighbor_distance() const;

    /// Nominal design spacing: 2 pi |alpha| / 2M (arc) for PSK,
    /// |alpha_max - alpha_min| / 2M for ASK.
    double design_spacing() const;

    /// Every amplitude scaled by sqrt(transmissivity).
    Constellation attenuated(double transmissivity) const;

    bool operator==(const Constellation &) const = default;

  private:
    friend Constellation make_psk(unsigned, double);
    friend Constellation make_ask(unsigned, double, double, double);

    Constellation(Modulation kind, unsigned num_bases, std::vector<CoherentPoint> points,
                  double design_spacing)
        : kind_(kind), num_bases_(num_bases), points_(std::move(points)),
          design_spacing_(design_spacing) {}

    Modulation kind_;
    unsigned num_bases_;
    std::vector<CoherentPoint> points_;
    double design_spacing_;
};

/// 2M points sqrt(S) exp(i pi s / M); s and s + M are antipodal.
Constellation make_psk(unsigned num_bases, double photons);

/// 2M real amplitudes equally spaced from sqrt(S_min) to sqrt(S_max)
/// inclusive. Requires S_min > 1/transmissivity so the weakest level still
/// carries more than one photon after the channel.
Constellation make_ask(unsigned num_bases, double photons_min, double photons_max,
                       double transmissivity);

/// <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a) b).
std::complex<double> overlap(const CoherentPoint &a, const CoherentPoint &b);

/// |<a|b>|^2 = exp(-|a - b|^2).
double overlap_squared(const CoherentPoint &a, const CoherentPoint &b);

/// Gram matrix of the points. PSK constellations are filled from one row so
/// the result is exactly circulant.
Eigen::MatrixXcd gram_matrix(const Constellation &c);
Eigen::MatrixXcd gram_matrix(std::span<const CoherentPoint> points);

/// Overlap <alpha_0|alpha_m> for N equally spaced phases at S photons,
/// m = 0..N-1. Built from exp(-S(1 - cos)) in log form so large S underflows
/// to 0 instead of producing garbage.
std::vector<std::complex<double>> symmetric_overlap_sequence(std::size_t n_states, double photons);

/// Probability that a Gaussian (per-quadrature sigma = 1/2) sample lands on
/// the wrong side of the midpoint between two points a distance d apart:
/// 1/2 - Phi_0(t0) with t0 = (d/2)/sigma = d.
double neighbor_error_from_distance(double distance);

/// neighbor_error_from_distance(c.neighbor_distance()); needs >= 2 points.
double neighbor_error(const Constellation &c);

struct DesignRequest {
    Modulation kind = Modulation::psk;
    /// PSK: photons per pulse. ASK: S_max.
    double photons = 0.0;
    /// ASK only.
    double photons_min = 0.0;
    double transmissivity = 1.0;
};

/// Smallest number of bases M whose neighbor_error reaches target_pe, for
/// 0.2 <= target_pe < 0.5. Pe grows with M, so every larger M also meets it.
unsigned design_bases(double target_pe, const DesignRequest &request);

/// Largest PSK photon number at which neighbor_error(make_psk(M, S)) is still
/// >= target_pe, for target_pe in (0, 0.5).
double design_photons(unsigned num_bases, double target_pe);

} // namespace y00
