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

#include "y00/constellation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "y00/numerics.hpp"

namespace y00 {

namespace {

constexpr unsigned kMaxBases = 1u << 30;

} // namespace

Constellation make_psk(unsigned num_bases, double photons) {
    if (num_bases == 0) throw std::invalid_argument("make_psk: num_bases must be >= 1");
    if (!(photons >= 0.0)) throw std::invalid_argument("make_psk: photons must be >= 0");
    const double radius = std::sqrt(photons);
    const std::size_t n = 2 * static_cast<std::size_t>(num_bases);
    std::vector<CoherentPoint> points(n);
    for (std::size_t s = 0; s < n; ++s) {
        points[s].amplitude = std::polar(radius, kPi * static_cast<double>(s) / num_bases);
    }
    // Exact antipodes keep the bit-flip map s -> s + M clean.
    for (std::size_t s = 0; s < num_bases; ++s) points[s + num_bases].amplitude = -points[s].amplitude;
    return Constellation(Modulation::psk, num_bases, std::move(points),
                         2.0 * kPi * radius / static_cast<double>(n));
}

Constellation make_ask(unsigned num_bases, double photons_min, double photons_max,
                       double transmissivity) {
    if (num_bases == 0) throw std::invalid_argument("make_ask: num_bases must be >= 1");
    if (!(transmissivity > 0.0 && transmissivity <= 1.0))
        throw std::invalid_argument("make_ask: transmissivity must be in (0, 1]");
    if (!(photons_max > photons_min)) throw std::invalid_argument("make_ask: need S_max > S_min");
    if (!(photons_min > 1.0 / transmissivity))
        throw std::invalid_argument("make_ask: S_min = " + std::to_string(photons_min) +
                                    " must exceed 1/transmissivity = " + std::to_string(1.0 / transmissivity));
    const double lo = std::sqrt(photons_min);
    const double hi = std::sqrt(photons_max);
    const std::size_t n = 2 * static_cast<std::size_t>(num_bases);
    std::vector<CoherentPoint> points(n);
    for (std::size_t s = 0; s < n; ++s) {
        const double t = static_cast<double>(s) / static_cast<double>(n - 1);
        points[s].amplitude = {lo + (hi - lo) * t, 0.0};
    }
    points.back().amplitude = {hi, 0.0};
    return Constellation(Modulation::ask, num_bases, std::move(points), (hi - lo) / static_cast<double>(n));
}

double Constellation::neighbor_distance() const {
    if (points_.size() < 2) throw std::invalid_argument("neighbor_distance: need at least 2 points");
    return std::abs(points_[1].amplitude - points_[0].amplitude);
}

double Constellation::design_spacing() const { return design_spacing_; }

Constellation Constellation::attenuated(double transmissivity) const {
    if (!(transmissivity > 0.0 && transmissivity <= 1.0))
        throw std::invalid_argument("attenuated: transmissivity must be in (0, 1]");
    const double scale = std::sqrt(transmissivity);
    Constellation out = *this;
    for (auto &p : out.points_) p.amplitude *= scale;
    out.design_spacing_ *= scale;
    return out;
}

std::complex<double> overlap(const CoherentPoint &a, const CoherentPoint &b) {
    const std::complex<double> exponent =
        -0.5 * std::norm(a.amplitude) - 0.5 * std::norm(b.amplitude) + std::conj(a.amplitude) * b.amplitude;
    return std::exp(exponent);
}

double overlap_squared(const CoherentPoint &a, const CoherentPoint &b) {
    return std::exp(-std::norm(a.amplitude - b.amplitude));
}

std::vector<std::complex<double>> symmetric_overlap_sequence(std::size_t n_states, double photons) {
    std::vector<std::complex<double>> seq(n_states);
    for (std::size_t m = 0; m < n_states; ++m) {
        const double theta = 2.0 * kPi * static_cast<double>(m) / static_cast<double>(n_states);
        const double half = std::sin(0.5 * theta);
        // -S(1 - cos theta) = -2 S sin^2(theta/2), no cancellation near theta = 0.
        const double log_mag = -2.0 * photons * half * half;
        seq[m] = std::polar(std::exp(log_mag), photons * std::sin(theta));
    }
    return seq;
}

Eigen::MatrixXcd gram_matrix(std::span<const CoherentPoint> points) {
    const auto n = static_cast<Eigen::Index>(points.size());
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        g(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            g(i, j) = overlap(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
            g(j, i) = std::conj(g(i, j));
        }
    }
    return g;
}

Eigen::MatrixXcd gram_matrix(const Constellation &c) {
    if (c.size() == 0) throw std::invalid_argument("gram_matrix: empty constellation");
    if (c.kind() != Modulation::psk) return gram_matrix(c.points());
    const auto row = symmetric_overlap_sequence(c.size(), c[0].photons());
    const auto n = static_cast<Eigen::Index>(c.size());
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) g(i, j) = row[static_cast<std::size_t>(((j - i) % n + n) % n)];
    }
    return g;
}

double neighbor_error_from_distance(double distance) { return normal_tail(distance); }

double neighbor_error(const Constellation &c) { return neighbor_error_from_distance(c.neighbor_distance()); }

namespace {

double design_error(unsigned m, const DesignRequest &req) {
    if (req.kind == Modulation::psk) {
        // Chord between adjacent points without building the constellation.
        return neighbor_error_from_distance(2.0 * std::sqrt(req.photons) * std::sin(kPi / (2.0 * m)));
    }
    const double span = std::sqrt(req.photons) - std::sqrt(req.photons_min);
    return neighbor_error_from_distance(span / (2.0 * m - 1.0));
}

} // namespace

unsigned design_bases(double target_pe, const DesignRequest &request) {
    if (!(target_pe >= 0.2 && target_pe < 0.5))
        throw std::invalid_argument("design_bases: target_pe must be in [0.2, 0.5)");
    if (request.kind == Modulation::psk) {
        if (!(request.photons >= 0.0)) throw std::invalid_argument("design_bases: photons must be >= 0");
    } else {
        (void)make_ask(1, request.photons_min, request.photons, request.transmissivity);
    }
    if (design_error(1, request) >= target_pe) return 1;
    unsigned hi = 2;
    while (design_error(hi, request) < target_pe) {
        if (hi >= kMaxBases) throw std::invalid_argument("design_bases: target unreachable below 2^30 bases");
        hi *= 2;
    }
    unsigned lo = hi / 2; // design_error(lo) < target
    while (hi - lo > 1) {
        const unsigned mid = lo + (hi - lo) / 2;
        if (design_error(mid, request) >= target_pe)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

double design_photons(unsigned num_bases, double target_pe) {
    if (num_bases == 0) throw std::invalid_argument("design_photons: need at least one basis");
    if (!(target_pe > 0.0 && target_pe < 0.5)) throw std::invalid_argument("design_photons: target_pe must be in (0, 0.5)");
    // Chord distance d with Q(d) = target, then invert d = 2 sqrt(S) sin(pi / 2M).
    double lo = 0.0, hi = 40.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (normal_tail(mid) >= target_pe ? lo : hi) = mid;
    }
    const double half_angle = std::sin(kPi / (2.0 * num_bases));
    double s = std::pow(lo / (2.0 * half_angle), 2);
    while (s > 0.0 && neighbor_error(make_psk(num_bases, s)) < target_pe) s = std::nextafter(s, 0.0);
    return s;
}

} // namespace y00
