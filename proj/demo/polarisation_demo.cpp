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

// Walks a linearly polarised photon through a rotation about its momentum in
// an observer moving with the CMB dipole speed, then through a crossed polariser.

#include <cstdio>

#include "pfphoton/pfphoton.hpp"

int main() {
    using namespace pfphoton;
    const double theta_pf = 1.2336e-3;
    const double chi = pi / 2.0;

    const PhotonKinematics kin = canonical_kinematics(theta_pf, chi);
    const LinearPolState prepared = make_linear_state(0.0, kin);
    std::printf("photon k = (%g; %g, %g, %g), kappa = %.6g\n", kin.momentum().t, kin.momentum().x,
                kin.momentum().y, kin.momentum().z, kin.kappa());

    for (double delta : {pi / 4.0, pi / 2.0, pi}) {
        const LorentzTransform r = rotation_about_photon(kin, delta);
        const LinearPolState rotated = transform_state(r, prepared);
        const double dphi = phase_difference(kin, r);

        // Polariser crossed with the original plane, rotated along with the light.
        const Polariser crossed{wrap_angle(delta + pi / 2.0), rotated.kin.direction(), pi, rotated.kin.frame()};
        const PolariserOutcome out = apply_polariser(crossed, rotated);
        const double leak = out ? std::norm(out->amplitude) : 0.0;

        std::printf("delta = %7.4f  phi_PF = %+.12f  dphi = %+.6e  closed form dphi = %+.6e  leakage = %.6e\n",
                    delta, rotated.theta, dphi, -rotation_phase_shift({delta, theta_pf, chi}), leak);
    }

    for (double v : {0.5, 0.9, 0.99}) {
        const WignerAngle w = boost_phase_matrix({v, theta_pf, chi});
        std::printf("boost V = %.2f  matrix phase = %+.6e  residual = %.1e\n", v, w.phi, w.residual);
    }
    return 0;
}
