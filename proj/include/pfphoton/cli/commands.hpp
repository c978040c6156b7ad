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
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfphoton/cli/table.hpp"
#include "pfphoton/closed_form.hpp"
#include "pfphoton/errors.hpp"
#include "pfphoton/induction.hpp"
#include "pfphoton/minkowski.hpp"
#include "pfphoton/polarisation.hpp"

namespace pfphoton::cli {

/// Speed of the CMB rest frame, ~369.8 km/s, in units of c.
inline constexpr double cmb_dipole_speed = 1.2336e-3;

enum class Format { csv, json };

struct RunConfig {
    double pf_speed = cmb_dipole_speed;
    double chi = pi / 2.0;
    double v_min = -0.99;
    double v_max = 0.99;
    double v_step = 0.01;
    double delta_min = 0.0;
    double delta_max = 2.0 * pi;
    double delta_step = pi / 24.0;
    int chi_steps = 13;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 12345;
    double theta = 0.0;
    double polariser_angle = pi / 2.0;
    std::optional<Vec3> momentum;
    std::optional<Vec3> pf_velocity;
    std::string transform;
    std::string output_path;
    Format format = Format::csv;

    void validate() const {
        auto require = [](bool ok, const char* what) {
            if (!ok) {
                throw DomainError(what);
            }
        };
        require(pf_speed >= 0.0 && pf_speed < 1.0, "--pf-speed must lie in [0, 1)");
        require(chi >= 0.0 && chi <= pi + tolerance::construction, "--chi must lie in [0, pi]");
        require(v_min > -1.0 && v_max < 1.0 && v_min <= v_max, "V range must satisfy -1 < v-min <= v-max < 1");
        require(v_step > 0.0, "--v-step must be positive");
        require(std::isfinite(delta_min) && std::isfinite(delta_max) && delta_min <= delta_max,
                "delta range must satisfy delta-min <= delta-max");
        require(delta_step > 0.0, "--delta-step must be positive");
        require(chi_steps >= 2, "--chi-steps must be at least 2");
        require(samples >= 1, "--samples must be at least 1");
        if (pf_velocity) {
            require(norm(*pf_velocity) < 1.0, "--pf-velocity must have magnitude below 1");
        }
        if (momentum) {
            require(norm(*momentum) > 0.0, "--momentum must be non-zero");
        }
    }
};

/// lo, lo + step, ... up to hi (inclusive when hi lands on the grid).
inline std::vector<double> make_grid(double lo, double hi, double step) {
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9));
    std::vector<double> g;
    g.reserve(count + 1);
    for (std::size_t i = 0; i <= count; ++i) {
        g.push_back(lo + static_cast<double>(i) * step);
    }
    return g;
}

/// chi_steps points spanning [0, pi].
inline std::vector<double> chi_grid(int chi_steps) {
    std::vector<double> g;
    for (int j = 0; j < chi_steps; ++j) {
        g.push_back(pi * j / (chi_steps - 1));
    }
    return g;
}

/// Canonical scenario frame unless --momentum / --pf-velocity override it.
inline PhotonKinematics config_kinematics(const RunConfig& c) {
    if (!c.momentum && !c.pf_velocity) {
        return canonical_kinematics(c.pf_speed, c.chi);
    }
    const FrameVelocity u = c.pf_velocity ? FrameVelocity::from_velocity(*c.pf_velocity)
                                          : canonical_kinematics(c.pf_speed, c.chi).frame();
    const Vec3 p = c.momentum ? *c.momentum : Vec3{1.0, 0.0, 0.0};
    return PhotonKinematics::from_momentum(p, u);
}

inline Table boost_scan(const RunConfig& c) {
    c.validate();
    Table t{{"V", "phi_cf", "phi_mx", "abs_diff"}, {}};
    for (double v : make_grid(c.v_min, c.v_max, c.v_step)) {
        const BoostScenario s{v, c.pf_speed, c.chi};
        const double cf = boost_phase(s);
        const double mx = boost_phase_matrix(s).phi;
        t.rows.push_back({v, cf, mx, std::abs(cf - mx)});
    }
    return t;
}

/// dphi_ex = phi_PF - phi_std = phi_ex - delta (wrapped), the sign carried by
/// the matrix construction; dphi_ap is the small-speed form.
inline Table rotation_scan(const RunConfig& c) {
    c.validate();
    Table t{{"delta", "chi", "phi_ex", "dphi_ex", "dphi_ap", "abs_err"}, {}};
    for (double d : make_grid(c.delta_min, c.delta_max, c.delta_step)) {
        for (double chi : chi_grid(c.chi_steps)) {
            const RotationScenario s{d, c.pf_speed, chi};
            const double phi = rotation_phase(s);
            const double dphi = wrap_angle(phi - d);
            const double approx = rotation_shift_approx(s);
            t.rows.push_back({d, chi, phi, dphi, approx, std::abs(dphi - approx)});
        }
    }
    return t;
}

inline Table malus(const RunConfig& c) {
    c.validate();
    const PhotonKinematics kin = config_kinematics(c);
    const std::vector<double> deltas = make_grid(c.delta_min, c.delta_max, c.delta_step);
    const std::vector<MalusPoint> curve = anomalous_malus_curve(kin, c.theta, c.polariser_angle, deltas);
    const double classical = malus_probability(c.theta, c.polariser_angle);
    Table t{{"delta", "p_classical", "p_pf", "mc_freq", "mc_err"}, {}};
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const MalusPoint& pt = curve[i];
        const double f = monte_carlo_malus(c.theta + pt.phase_shift, c.polariser_angle, c.samples, c.seed + i);
        t.rows.push_back({pt.delta, classical, pt.probability, f, std::abs(f - pt.probability)});
    }
    return t;
}

namespace detail {
inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) {
        out.push_back(item);
    }
    return out;
}

inline double parse_number(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("not a number: '" + s + "'");
    }
    if (used != s.size()) {
        throw DomainError("not a number: '" + s + "'");
    }
    return v;
}
} // namespace detail

/// "x,y,z" -> Vec3.
inline Vec3 parse_vec3(const std::string& s) {
    const auto parts = detail::split(s, ',');
    if (parts.size() != 3) {
        throw DomainError("expected three comma-separated components, got '" + s + "'");
    }
    return {detail::parse_number(parts[0]), detail::parse_number(parts[1]), detail::parse_number(parts[2])};
}

/// Semicolon-separated steps "boost:AXIS:V" or "rotate:AXIS:ANGLE", where
/// AXIS is "k" (the photon direction), one of "x", "y", "z", or a vector
/// "ax,ay,az". Steps act in the order listed; an empty string is the identity.
inline LorentzTransform parse_transform(const std::string& steps, const PhotonKinematics& kin) {
    LorentzTransform total;
    for (const std::string& step : detail::split(steps, ';')) {
        if (step.empty()) {
            continue;
        }
        const auto fields = detail::split(step, ':');
        if (fields.size() != 3) {
            throw DomainError("transform step must be KIND:AXIS:VALUE, got '" + step + "'");
        }
        Vec3 axis;
        if (fields[1] == "k") {
            axis = kin.direction();
        } else if (fields[1] == "x" || fields[1] == "y" || fields[1] == "z") {
            axis = {fields[1] == "x" ? 1.0 : 0.0, fields[1] == "y" ? 1.0 : 0.0, fields[1] == "z" ? 1.0 : 0.0};
        } else {
            axis = normalized(parse_vec3(fields[1]));
        }
        const double value = detail::parse_number(fields[2]);
        if (fields[0] == "boost") {
            total = boost_velocity(scaled(axis, value)) * total;
        } else if (fields[0] == "rotate") {
            total = rotation_about(axis, value) * total;
        } else {
            throw DomainError("unknown transform kind '" + fields[0] + "' (use boost or rotate)");
        }
    }
    return total;
}

inline nlohmann::ordered_json wigner(const RunConfig& c) {
    c.validate();
    const PhotonKinematics kin = config_kinematics(c);
    const LorentzTransform l = parse_transform(c.transform, kin);
    const WignerAngle pf = pf_wigner(kin, l);
    const WignerAngle std_angle = standard_wigner(kin.momentum(), l);
    const Vec3 n = direction_in_pf(kin);
    nlohmann::ordered_json j;
    j["phi_pf"] = pf.phi;
    j["phi_std"] = std_angle.phi + 0.0;
    j["delta_phi"] = wrap_angle(pf.phi - std_angle.phi);
    j["pf_residual"] = pf.residual;
    j["pf_stabiliser"] = pf.stabiliser;
    j["std_residual"] = std_angle.residual;
    j["std_stabiliser"] = std_angle.stabiliser;
    j["kappa"] = kin.kappa();
    j["n"] = {n[0], n[1], n[2]};
    return j;
}

} // namespace pfphoton::cli
