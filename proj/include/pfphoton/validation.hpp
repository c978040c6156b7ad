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
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "pfphoton/closed_form.hpp"
#include "pfphoton/induction.hpp"
#include "pfphoton/minkowski.hpp"
#include "pfphoton/polarisation.hpp"

/// Release-gate checks: oracle equivalence grids, composition laws,
/// reductions and Monte Carlo statistics. Each check reports its worst
/// residual against its tolerance.
namespace pfphoton::validation {

struct CheckResult {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string detail;
    /// Worst stabiliser residual seen while running the check (0 if none).
    double stabiliser = 0.0;
};

struct Options {
    /// Multiplies every tolerance; values below 1 tighten the gate.
    double tolerance_scale = 1.0;
    std::uint64_t seed = 20261014;
};

inline std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

/// Grids shared by the oracle checks.
namespace grid {
inline std::vector<double> boost_speeds() {
    std::vector<double> v;
    for (int i = 0; i <= 66; ++i) {
        v.push_back(-0.99 + 0.03 * i);
    }
    return v;
}
inline constexpr std::array<double, 4> pf_speeds{0.0, 1e-3, 0.1, 0.5};
inline std::vector<double> chis() {
    std::vector<double> c;
    for (int j = 0; j <= 6; ++j) {
        c.push_back(j * pi / 6.0);
    }
    return c;
}
/// delta in (0, 2 pi), step pi/24.
inline std::vector<double> deltas() {
    std::vector<double> d;
    for (int m = 1; m < 48; ++m) {
        d.push_back(m * pi / 24.0);
    }
    return d;
}
} // namespace grid

namespace detail {
struct Sampler {
    std::mt19937_64 engine;

    explicit Sampler(std::uint64_t seed) : engine(seed) {}

    double uniform(double lo, double hi) { return lo + (hi - lo) * pfphoton::detail::unit_uniform(engine); }

    Vec3 unit() {
        const double cz = uniform(-1.0, 1.0);
        const double az = uniform(0.0, 2.0 * pi);
        const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
        return {sz * std::cos(az), sz * std::sin(az), cz};
    }

    LorentzTransform rotation() { return rotation_about(unit(), uniform(-pi, pi)); }

    LorentzTransform boost(double vmax) { return boost_velocity(scaled(unit(), uniform(0.0, vmax))); }

    /// R2 B R1 with |V| <= vmax.
    LorentzTransform lorentz(double vmax) { return rotation() * boost(vmax) * rotation(); }

    PhotonKinematics kinematics(double vmax) {
        const FrameVelocity u = FrameVelocity::from_velocity(scaled(unit(), uniform(0.0, vmax)));
        return PhotonKinematics::from_momentum(scaled(unit(), uniform(0.1, 10.0)), u);
    }
};

inline CheckResult finish(std::string name, double value, double tol, std::string detail, double stab = 0.0) {
    return {std::move(name), value, tol, value <= tol, std::move(detail), stab};
}
} // namespace detail

/// |boost_phase - matrix angle| over the boost grid.
inline CheckResult check_boost_oracle(const Options& opt = {}) {
    const double tol = 1e-9 * opt.tolerance_scale;
    double worst = 0.0;
    double worst_half = 0.0;
    double stab = 0.0;
    for (double t : grid::pf_speeds) {
        for (double chi : grid::chis()) {
            for (double v : grid::boost_speeds()) {
                const BoostScenario s{v, t, chi};
                const double cf = boost_phase(s);
                const WignerAngle mx = boost_phase_matrix(s);
                worst = std::max(worst, std::abs(cf - mx.phi));
                worst_half = std::max(worst_half, std::abs(-2.0 * cf - mx.phi));
                stab = std::max(stab, mx.stabiliser);
            }
        }
    }
    return detail::finish("boost_oracle_equivalence", worst, tol,
                          "max |phi_cf - phi_mx| = " + format_number(worst) +
                              "; max |-2 phi_cf - phi_mx| = " + format_number(worst_half),
                          stab);
}

/// ||rotation_phase| - |matrix angle|| over the rotation grid; the signed
/// relation is reported in the detail and must hold at every point.
inline CheckResult check_rotation_oracle(const Options& opt = {}) {
    const double tol = 1e-9 * opt.tolerance_scale;
    double worst_abs = 0.0;
    double worst_signed = 0.0;
    double stab = 0.0;
    int points = 0;
    for (double t : grid::pf_speeds) {
        for (double chi : grid::chis()) {
            for (double d : grid::deltas()) {
                const RotationScenario s{d, t, chi};
                const double cf = rotation_phase(s);
                const WignerAngle mx = rotation_phase_matrix(s);
                worst_abs = std::max(worst_abs, std::abs(std::abs(cf) - std::abs(mx.phi)));
                worst_signed = std::max(worst_signed, std::abs(wrap_angle(cf - mx.phi)));
                stab = std::max(stab, mx.stabiliser);
                ++points;
            }
        }
    }
    CheckResult r = detail::finish("rotation_oracle_equivalence", worst_abs, tol,
                                   "max ||phi_cf| - |phi_mx|| = " + format_number(worst_abs) +
                                       "; oracle sign: phi_mx = +phi_cf, max |wrap(phi_cf - phi_mx)| = " +
                                       format_number(worst_signed) + " over " + std::to_string(points) +
                                       " points",
                                   stab);
    r.passed = r.passed && worst_signed <= tol;
    return r;
}

/// W(k,u,L2 L1) = W(L1 k, L1 u, L2) W(k,u,L1) on wrapped angles.
inline CheckResult check_composition_law(const Options& opt = {}, int trials = 1000) {
    const double tol = 1e-9 * opt.tolerance_scale;
    detail::Sampler rng(opt.seed);
    double worst = 0.0;
    double stab = 0.0;
    for (int i = 0; i < trials; ++i) {
        const PhotonKinematics kin = rng.kinematics(0.99);
        const LorentzTransform l1 = rng.lorentz(0.99);
        const LorentzTransform l2 = rng.lorentz(0.99);
        const WignerAngle whole = pf_wigner(kin, l2 * l1);
        const WignerAngle first = pf_wigner(kin, l1);
        const WignerAngle second = pf_wigner(kin.transformed(l1), l2);
        worst = std::max(worst, std::abs(wrap_angle(whole.phi - second.phi - first.phi)));
        stab = std::max({stab, whole.stabiliser, first.stabiliser, second.stabiliser});
    }
    return detail::finish("composition_law_pf", worst, tol,
                          std::to_string(trials) + " random (k, u, L1, L2), |V| <= 0.99", stab);
}

inline CheckResult check_standard_composition(const Options& opt = {}, int trials = 1000) {
    const double tol = 1e-9 * opt.tolerance_scale;
    detail::Sampler rng(opt.seed + 1);
    double worst = 0.0;
    double stab = 0.0;
    for (int i = 0; i < trials; ++i) {
        const FourVector k = rng.kinematics(0.0).momentum();
        const LorentzTransform l1 = rng.lorentz(0.99);
        const LorentzTransform l2 = rng.lorentz(0.99);
        const WignerAngle whole = standard_wigner(k, l2 * l1);
        const WignerAngle first = standard_wigner(k, l1);
        const WignerAngle second = standard_wigner(l1 * k, l2);
        worst = std::max(worst, std::abs(wrap_angle(whole.phi - second.phi - first.phi)));
        stab = std::max({stab, whole.stabiliser, first.stabiliser, second.stabiliser});
    }
    return detail::finish("composition_law_standard", worst, tol,
                          std::to_string(trials) + " random (k, L1, L2), |V| <= 0.99", stab);
}

/// Boost along k gives phi_std = 0; rotation by delta about k gives delta.
inline CheckResult check_standard_anchors(const Options& opt = {}, int trials = 100) {
    const double tol = 1e-10 * opt.tolerance_scale;
    detail::Sampler rng(opt.seed + 2);
    double worst_boost = 0.0;
    double worst_rot = 0.0;
    for (int i = 0; i < trials; ++i) {
        const FourVector k = rng.kinematics(0.0).momentum();
        const Vec3 dir = normalized(k.spatial());
        const double delta = rng.uniform(-pi, pi);
        const double v = rng.uniform(-0.99, 0.99);
        worst_boost = std::max(worst_boost, std::abs(standard_wigner(k, boost_velocity(scaled(dir, v))).phi));
        worst_rot = std::max(worst_rot, std::abs(wrap_angle(standard_wigner(k, rotation_about(dir, delta)).phi - delta)));
    }
    return detail::finish("standard_case_anchors", std::max(worst_boost, worst_rot), tol,
                          "boost along k: max |phi_std| = " + format_number(worst_boost) +
                              "; rotation about k: max |phi_std - delta| = " + format_number(worst_rot));
}

/// With the preferred frame at rest (theta = 0) before and after the
/// transformation, i.e. for rotations, the two constructions agree.
inline CheckResult check_no_pf_reduction(const Options& opt = {}, int trials = 500) {
    const double tol = 1e-9 * opt.tolerance_scale;
    detail::Sampler rng(opt.seed + 3);
    double worst = 0.0;
    double general = 0.0;
    for (int i = 0; i < trials; ++i) {
        const PhotonKinematics kin = rng.kinematics(0.0);
        worst = std::max(worst, std::abs(phase_difference(kin, rng.rotation())));
        general = std::max(general, std::abs(phase_difference(kin, rng.lorentz(0.99))));
    }
    return detail::finish("no_pf_reduction", worst, tol,
                          std::to_string(trials) + " random rotations at u = u_PF; for comparison, general "
                                                   "transforms (PF no longer at rest) reach max |dphi| = " +
                              format_number(general));
}

struct ApproximationOrder {
    std::array<double, 3> speeds{1e-2, 1e-3, 1e-4};
    std::array<double, 3> max_error{};
    double slope = 0.0;
};

/// Max over the (delta, chi) grid of ||rotation_phase_shift| - approx| per speed,
/// and the least-squares log-log slope.
inline ApproximationOrder approximation_order() {
    ApproximationOrder out;
    for (std::size_t i = 0; i < out.speeds.size(); ++i) {
        double worst = 0.0;
        for (double d : grid::deltas()) {
            for (double chi : grid::chis()) {
                const RotationScenario s{d, out.speeds[i], chi};
                worst = std::max(worst, std::abs(std::abs(rotation_phase_shift(s)) - rotation_shift_approx(s)));
            }
        }
        out.max_error[i] = worst;
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        mx += std::log(out.speeds[i]) / 3.0;
        my += std::log(out.max_error[i]) / 3.0;
    }
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const double dx = std::log(out.speeds[i]) - mx;
        sxy += dx * (std::log(out.max_error[i]) - my);
        sxx += dx * dx;
    }
    out.slope = sxy / sxx;
    return out;
}

inline CheckResult check_approximation_order(const Options& opt = {}) {
    const ApproximationOrder a = approximation_order();
    std::string detail = "slope = " + format_number(a.slope) + "; C = err/theta^2:";
    for (std::size_t i = 0; i < 3; ++i) {
        detail += " " + format_number(a.max_error[i] / (a.speeds[i] * a.speeds[i]));
    }
    return detail::finish("approximation_order", std::abs(a.slope - 2.0), 0.1 * opt.tolerance_scale, detail);
}

/// boost_phase(chi = 0) is exactly zero and |boost_phase| peaks at chi = pi/2
/// on the chi grid.
inline CheckResult check_chi_behaviour(const Options& opt = {}) {
    (void)opt;
    double worst_zero = 0.0;
    int misplaced = 0;
    const std::vector<double> chis = grid::chis();
    for (double t : grid::pf_speeds) {
        for (double v : grid::boost_speeds()) {
            worst_zero = std::max(worst_zero, std::abs(boost_phase({v, t, 0.0})));
            if (t == 0.0 || std::abs(v) < 1e-12) {
                continue;
            }
            std::size_t best = 0;
            for (std::size_t j = 1; j < chis.size(); ++j) {
                if (std::abs(boost_phase({v, t, chis[j]})) > std::abs(boost_phase({v, t, chis[best]}))) {
                    best = j;
                }
            }
            misplaced += best == 3 ? 0 : 1;
        }
    }
    CheckResult r = detail::finish("chi_behaviour", worst_zero, 0.0,
                                   "max |phi(chi=0)| = " + format_number(worst_zero) +
                                       "; grid points with argmax != pi/2: " + std::to_string(misplaced));
    r.passed = worst_zero == 0.0 && misplaced == 0;
    return r;
}

/// 20 random (theta, Theta) settings at n = 10^6: frequency within 4
/// binomial standard errors in at least 19, and byte-identical on rerun.
inline CheckResult check_malus_monte_carlo(const Options& opt = {}, std::uint64_t samples = 1000000) {
    detail::Sampler rng(opt.seed + 4);
    int within = 0;
    bool reproducible = true;
    double worst_z = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double theta = rng.uniform(0.0, pi);
        const double polariser = rng.uniform(0.0, pi);
        const std::uint64_t seed = opt.seed + 100 + static_cast<std::uint64_t>(i);
        const double p = malus_probability(theta, polariser);
        const double f = monte_carlo_malus(theta, polariser, samples, seed);
        const double again = monte_carlo_malus(theta, polariser, samples, seed);
        reproducible = reproducible && std::memcmp(&f, &again, sizeof f) == 0;
        const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
        const double dev = std::abs(f - p);
        if (dev <= 4.0 * se * opt.tolerance_scale) {
            ++within;
        }
        if (se > 0.0) {
            worst_z = std::max(worst_z, dev / se);
        }
    }
    CheckResult r{"malus_monte_carlo", static_cast<double>(20 - within), 1.0, false,
                  std::to_string(within) + "/20 settings within 4 sigma; max |z| = " + format_number(worst_z) +
                      (reproducible ? "; reruns byte-identical" : "; reruns DIFFER"),
                  0.0};
    r.passed = within >= 19 && reproducible;
    return r;
}

/// Worst stabiliser residual over the given results.
inline CheckResult check_stabiliser(const std::vector<CheckResult>& sources, const Options& opt = {}) {
    double worst = 0.0;
    std::string names;
    for (const auto& s : sources) {
        worst = std::max(worst, s.stabiliser);
        names += (names.empty() ? "" : ", ") + s.name;
    }
    return detail::finish("stabiliser_residuals", worst, tolerance::stabiliser * opt.tolerance_scale,
                          "over " + names);
}

inline std::vector<CheckResult> run_all(const Options& opt = {}) {
    std::vector<CheckResult> out;
    out.push_back(check_boost_oracle(opt));
    out.push_back(check_rotation_oracle(opt));
    out.push_back(check_composition_law(opt));
    out.push_back(check_standard_composition(opt));
    out.push_back(check_stabiliser({out[0], out[1], out[2], out[3]}, opt));
    out.push_back(check_standard_anchors(opt));
    out.push_back(check_no_pf_reduction(opt));
    out.push_back(check_approximation_order(opt));
    out.push_back(check_chi_behaviour(opt));
    out.push_back(check_malus_monte_carlo(opt));
    return out;
}

} // namespace pfphoton::validation
