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

#include <algorithm>
#include <cmath>
#include <string>

#include "pfphoton/errors.hpp"
#include "pfphoton/induction.hpp"
#include "pfphoton/minkowski.hpp"

/// Closed-form phases for the two polarisation experiments, and the matching
/// matrix constructions used to cross-check them.
///
/// Scenario geometry (the "canonical frame"): the photon moves along +x with
/// unit energy, the preferred frame moves with velocity
/// pf_speed * (cos chi, sin chi, 0), and the transformation is an active boost
/// with signed speed V along the photon, or an active rotation by delta about
/// it. In this frame the matrix angle of a rotation reproduces
/// rotation_phase() exactly, and the matrix angle of a boost equals
/// -2 * boost_phase().
namespace pfphoton {

namespace detail {
inline void require_range(bool ok, const char* what) {
    if (!ok) {
        throw DomainError(what);
    }
}

inline void check_pf_and_chi(double pf_speed, double chi) {
    require_range(pf_speed >= 0.0 && pf_speed < 1.0, "pf_speed must lie in [0, 1)");
    require_range(chi >= 0.0 && chi <= pi + tolerance::construction, "chi must lie in [0, pi]");
}

/// sqrt(1 - v^2) without cancellation near |v| = 1.
inline double inverse_gamma(double v) { return std::sqrt((1.0 - v) * (1.0 + v)); }
} // namespace detail

struct BoostScenario {
    double velocity = 0.0;
    double pf_speed = 0.0;
    double chi = 0.0;

    void validate() const {
        detail::require_range(velocity > -1.0 && velocity < 1.0, "boost speed must lie in (-1, 1)");
        detail::check_pf_and_chi(pf_speed, chi);
    }
};

struct RotationScenario {
    double delta = 0.0;
    double pf_speed = 0.0;
    double chi = 0.0;

    void validate() const {
        detail::require_range(std::isfinite(delta), "rotation angle must be finite");
        detail::check_pf_and_chi(pf_speed, chi);
    }
};

/// arcsin[ V t sin(chi) / sqrt(2 (1 + sV)(1 + st)(V t cos(chi) + sV st + 1)) ]
/// with sV = sqrt(1 - V^2), st = sqrt(1 - t^2), t the preferred-frame speed.
inline double boost_phase(const BoostScenario& s) {
    s.validate();
    const double v = s.velocity;
    const double t = s.pf_speed;
    const double sv = detail::inverse_gamma(v);
    const double st = detail::inverse_gamma(t);
    const double denom = std::sqrt(2.0 * (1.0 + sv) * (1.0 + st) * (v * t * std::cos(s.chi) + sv * st + 1.0));
    const double arg = v * t * std::sin(s.chi) / denom;
    if (!(std::abs(arg) <= 1.0 + 1e-14)) {
        throw DomainError("boost phase arcsin argument left [-1, 1]");
    }
    return std::asin(std::clamp(arg, -1.0, 1.0));
}

/// Limit of boost_phase for V -> +1 (direction > 0) or V -> -1.
inline double boost_phase_asymptote(double pf_speed, double chi, int direction = 1) {
    detail::check_pf_and_chi(pf_speed, chi);
    const double sign = direction >= 0 ? 1.0 : -1.0;
    const double st = detail::inverse_gamma(pf_speed);
    const double denom = std::sqrt(2.0 * (1.0 + st) * (1.0 + sign * pf_speed * std::cos(chi)));
    return sign * std::asin(pf_speed * std::sin(chi) / denom);
}

/// phi[R(delta), k, u] in the cot-free form
///   2 atan2(N sin(delta/2), D1 cos(delta/2) + D2 sin(delta/2)),
/// N = st + A cos(chi), D1 = 1 - t cos(chi), D2 = A sin(chi),
/// A = (1 - st) cos(chi) - t. Wrapped to (-pi, pi].
inline double rotation_phase(const RotationScenario& s) {
    s.validate();
    const double t = s.pf_speed;
    const double st = detail::inverse_gamma(t);
    const double cc = std::cos(s.chi);
    const double sc = std::sin(s.chi);
    const double a = (1.0 - st) * cc - t;
    const double num = st + a * cc;
    const double d1 = 1.0 - t * cc;
    const double d2 = a * sc;
    const double half = 0.5 * s.delta;
    return wrap_angle(2.0 * std::atan2(num * std::sin(half), d1 * std::cos(half) + d2 * std::sin(half)));
}

/// delta - phi[R(delta), k, u], wrapped.
inline double rotation_phase_shift(const RotationScenario& s) {
    return wrap_angle(s.delta - rotation_phase(s));
}

/// Small-speed form t sin(chi) (1 - cos(delta)), regular at delta = pi.
inline double rotation_shift_approx(const RotationScenario& s) {
    s.validate();
    return s.pf_speed * std::sin(s.chi) * (1.0 - std::cos(s.delta));
}

// Matrix cross-checks in the canonical frame.

inline PhotonKinematics canonical_kinematics(double pf_speed, double chi, double energy = 1.0) {
    detail::check_pf_and_chi(pf_speed, chi);
    const FrameVelocity u =
        FrameVelocity::from_velocity({pf_speed * std::cos(chi), pf_speed * std::sin(chi), 0.0});
    return PhotonKinematics::make({energy, energy, 0.0, 0.0}, u, tolerance::construction);
}

inline LorentzTransform boost_along_photon(const PhotonKinematics& kin, double velocity) {
    return boost_velocity(scaled(kin.direction(), velocity));
}

inline LorentzTransform rotation_about_photon(const PhotonKinematics& kin, double delta) {
    return rotation_about(kin.direction(), delta);
}

inline WignerAngle boost_phase_matrix(const BoostScenario& s) {
    s.validate();
    const PhotonKinematics kin = canonical_kinematics(s.pf_speed, s.chi);
    return pf_wigner(kin, boost_along_photon(kin, s.velocity));
}

inline WignerAngle rotation_phase_matrix(const RotationScenario& s) {
    s.validate();
    const PhotonKinematics kin = canonical_kinematics(s.pf_speed, s.chi);
    return pf_wigner(kin, rotation_about_photon(kin, s.delta));
}

} // namespace pfphoton
