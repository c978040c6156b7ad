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

#include <cmath>

#include "pfphoton/errors.hpp"
#include "pfphoton/minkowski.hpp"

/// Little-group machinery for photon states, with and without a preferred
/// frame.
///
/// A state label (k, u) is reached from the standard pair (q, u_PF) by the
/// standard element L_u R_n, where L_u is the pure boost taking u_PF to u and
/// R_n the minimal rotation taking z_hat to n(k, u). For any transformation
/// Lambda the element
///
///     W = (L_{Lambda u} R_{n(Lambda k, Lambda u)})^-1  Lambda  L_u R_{n(k, u)}
///
/// fixes both q and u_PF, so it is a rotation about z_hat; its angle is the
/// phase picked up by the helicity states (with a factor of the helicity).
///
/// Without a preferred frame the label is k alone, with standard element
/// L_k = R_{k_hat} B_z(|k|), and the little group of q is E(2). Only its SO(2)
/// angle enters the phase.
namespace pfphoton {

/// Wrap to (-pi, pi].
inline double wrap_angle(double a) {
    const double r = std::remainder(a, 2.0 * pi);
    return r <= -pi ? r + 2.0 * pi : r;
}

struct WignerAngle {
    double phi = 0.0;
    /// Max entry deviation of the little-group element from its exact SO(2)
    /// (or, in the E(2) case, unit-circle) form.
    double residual = 0.0;
    /// Max component of |Wq - q| and |W u_PF - u_PF|.
    double stabiliser = 0.0;
};

struct StandardPair {
    FourVector q;
    FourVector u_pf;
    double kappa = 1.0;

    static StandardPair make(double kappa) {
        if (!(kappa > 0.0)) {
            throw DomainError("kappa must be positive");
        }
        return {standard_null(kappa), pfphoton::u_pf, kappa};
    }
};

/// n(k, u): the unit vector with L_u R_n q = k for kappa = u.k, i.e. the
/// photon direction seen from the preferred frame.
inline Vec3 direction_in_pf(const PhotonKinematics& kin) {
    const FourVector in_pf = boost_to(kin.frame()).inverse() * kin.momentum();
    return normalized(in_pf.spatial());
}

/// L_u R_{n(k,u)}; maps (q, u_PF) to (k, u).
inline LorentzTransform pf_standard_element(const PhotonKinematics& kin) {
    return boost_to(kin.frame()) * rotation_z_to(direction_in_pf(kin));
}

inline LorentzTransform pf_wigner_element(const PhotonKinematics& kin, const LorentzTransform& l) {
    const PhotonKinematics image = kin.transformed(l);
    return pf_standard_element(image).inverse() * l * pf_standard_element(kin);
}

/// Angle of a little-group element of (q, u_PF). Throws StabilityError when
/// w fails to fix q or u_PF.
inline WignerAngle pf_angle_of(const LorentzTransform& w) {
    const FourVector q = standard_null();
    const double stab = std::max(max_abs_diff(w * q, q), max_abs_diff(w * u_pf, u_pf));
    if (!(stab <= tolerance::stabiliser)) {
        throw StabilityError("preferred-frame Wigner element does not fix (q, u_PF)");
    }
    const double phi = wrap_angle(std::atan2(w(2, 1), w(1, 1)));
    return {phi, w.distance(rotation_about({0.0, 0.0, 1.0}, phi)), stab};
}

/// Angle of the z-rotation W(k, u, Lambda).
inline WignerAngle pf_wigner(const PhotonKinematics& kin, const LorentzTransform& l) {
    return pf_angle_of(pf_wigner_element(kin, l));
}

/// Boost along z_hat with Doppler factor d, mapping q(1) to q(d).
inline LorentzTransform doppler_z(double d) {
    if (!(d > 0.0)) {
        throw DomainError("Doppler factor must be positive");
    }
    const double ch = 0.5 * (d + 1.0 / d);
    const double sh = 0.5 * (d - 1.0 / d);
    return detail::make_unchecked({{{ch, 0.0, 0.0, sh}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {sh, 0.0, 0.0, ch}}});
}

/// L_k = R_{k_hat} B_z(|k|), mapping q = (1; 0, 0, 1) to k.
inline LorentzTransform standard_element(const FourVector& k) {
    if (!(k.t > 0.0) || !is_null(k, tolerance::propagation)) {
        throw DomainError("standard element needs a null momentum with positive energy");
    }
    const Vec3 p = k.spatial();
    const double magnitude = norm(p);
    return rotation_z_to(scaled(p, 1.0 / magnitude)) * doppler_z(magnitude);
}

inline LorentzTransform standard_wigner_element(const FourVector& k, const LorentzTransform& l) {
    return standard_element(l * k).inverse() * l * standard_element(k);
}

/// SO(2) angle of an E(2) element fixing q. The image of e_x only moves by
/// multiples of q under null translations, and q is orthogonal to e_x and
/// e_y, so the extraction ignores the translation part.
inline WignerAngle standard_angle_of(const LorentzTransform& e) {
    const FourVector q = standard_null();
    const double stab = max_abs_diff(e * q, q);
    if (!(stab <= tolerance::stabiliser)) {
        throw StabilityError("standard Wigner element does not fix q");
    }
    const FourVector ex_image = e * FourVector{0.0, 1.0, 0.0, 0.0};
    const double c = -minkowski_dot(ex_image, {0.0, 1.0, 0.0, 0.0});
    const double s = -minkowski_dot(ex_image, {0.0, 0.0, 1.0, 0.0});
    return {wrap_angle(std::atan2(s, c)), std::abs(std::hypot(c, s) - 1.0), stab};
}

/// SO(2) angle of L_{Lambda k}^-1 Lambda L_k.
inline WignerAngle standard_wigner(const FourVector& k, const LorentzTransform& l) {
    return standard_angle_of(standard_wigner_element(k, l));
}

/// phi(Lambda, k, u) - phi(Lambda, k), wrapped.
inline double phase_difference(const PhotonKinematics& kin, const LorentzTransform& l) {
    return wrap_angle(pf_wigner(kin, l).phi - standard_wigner(kin.momentum(), l).phi);
}

} // namespace pfphoton
