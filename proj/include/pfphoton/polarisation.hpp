// Copyright 2026 The pfphoton Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "pfphoton/errors.hpp"
#include "pfphoton/induction.hpp"
#include "pfphoton/minkowski.hpp"

namespace pfphoton {

/// Linearly polarised single-photon state |theta, k, u>, scaled by an
/// amplitude (1 for a freshly prepared state, cos(...) after a polariser).
/// Observables depend on theta mod pi.
struct LinearPolState {
    double theta = 0.0;
    PhotonKinematics kin;
    std::complex<double> amplitude{1.0, 0.0};

    /// (a+, a-) = amplitude * (e^{i theta}, e^{-i theta}) / sqrt(2).
    std::array<std::complex<double>, 2> helicity_amplitudes() const {
        const double r = amplitude_scale();
        return {amplitude * std::polar(r, theta), amplitude * std::polar(r, -theta)};
    }

  private:
    static double amplitude_scale() { return 1.0 / std::sqrt(2.0); }
};

inline LinearPolState make_linear_state(double theta, const PhotonKinematics& kin) {
    return {theta, kin, {1.0, 0.0}};
}

/// U(Lambda)|theta, k, u> = |theta + phi(Lambda, k, u), Lambda k, Lambda u>.
inline LinearPolState transform_state(const LorentzTransform& l, const LinearPolState& s) {
    const WignerAngle w = pf_wigner(s.kin, l);
    return {s.theta + w.phi, s.kin.transformed(l), s.amplitude};
}

/// Ideal polariser at transmission angle `angle`, accepting momenta within
/// `half_angle` of `axis`, defined in the frame with PF velocity `frame`.
struct Polariser {
    double angle = 0.0;
    Vec3 axis{0.0, 0.0, 1.0};
    double half_angle = pi;
    FrameVelocity frame;

    void validate() const {
        require_unit(axis, "polariser axis");
        if (!(half_angle > 0.0 && half_angle <= pi)) {
            throw DomainError("polariser half-opening must lie in (0, pi]");
        }
    }
};

/// std::nullopt is the absorbed (zero) outcome.
using PolariserOutcome = std::optional<LinearPolState>;

inline PolariserOutcome apply_polariser(const Polariser& p, const LinearPolState& s) {
    p.validate();
    if (!(max_abs_diff(p.frame.four_velocity(), s.kin.frame().four_velocity()) <= tolerance::construction)) {
        throw FrameMismatch("polariser and state are labelled by different frame velocities");
    }
    if (angle_between(s.kin.momentum().spatial(), p.axis) > p.half_angle) {
        return std::nullopt;
    }
    return LinearPolState{p.angle, s.kin, s.amplitude * std::cos(p.angle - s.theta)};
}

inline double malus_probability(double theta, double polariser_angle) {
    const double c = std::cos(polariser_angle - theta);
    return c * c;
}

namespace detail {
/// Uniform double in [0, 1) from the top 53 bits; identical on every
/// standard library, unlike std::uniform_real_distribution.
inline double unit_uniform(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}
} // namespace detail

/// Fraction of n_samples Bernoulli(cos^2(Theta - theta)) trials that pass.
inline double monte_carlo_malus(double theta, double polariser_angle, std::uint64_t n_samples,
                                std::uint64_t seed) {
    if (n_samples < 1) {
        throw DomainError("monte_carlo_malus needs at least one sample");
    }
    const double p = malus_probability(theta, polariser_angle);
    std::mt19937_64 engine(seed);
    std::uint64_t passed = 0;
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        passed += detail::unit_uniform(engine) < p ? 1 : 0;
    }
    return static_cast<double>(passed) / static_cast<double>(n_samples);
}

struct MalusPoint {
    double delta = 0.0;
    double probability = 0.0;
    /// phi_PF[R(delta)] - delta.
    double phase_shift = 0.0;
};

/// Polariser turned by delta about the photon while the state turns by the
/// preferred-frame phase phi[R(delta), k, u]:
///   p(delta) = cos^2(polariser_angle + delta - theta - phi[R(delta)]).
inline std::vector<MalusPoint> anomalous_malus_curve(const PhotonKinematics& kin, double theta,
                                                     double polariser_angle, std::span<const double> deltas) {
    std::vector<MalusPoint> out;
    out.reserve(deltas.size());
    const Vec3 axis = kin.direction();
    for (double delta : deltas) {
        const double phi = pf_wigner(kin, rotation_about(axis, delta)).phi;
        const double shift = wrap_angle(phi - delta);
        out.push_back({delta, malus_probability(theta + shift, polariser_angle), shift});
    }
    return out;
}

} // namespace pfphoton
