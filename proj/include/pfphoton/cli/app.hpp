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

#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "pfphoton/cli/commands.hpp"
#include "pfphoton/cli/table.hpp"
#include "pfphoton/errors.hpp"
#include "pfphoton/validation.hpp"

namespace pfphoton::cli {

enum ExitCode : int { ok = 0, validation_failed = 1, usage_error = 2, numerical_error = 3 };

inline void print_report(const std::vector<validation::CheckResult>& results, std::ostream& os) {
    for (const auto& r : results) {
        os << (r.passed ? "PASS " : "FAIL ") << r.name << " value=" << validation::format_number(r.value)
           << " tol=" << validation::format_number(r.tolerance) << " | " << r.detail << '\n';
    }
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Preferred-frame photon polarisation numerics", "pfphoton"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file; command-line flags take precedence");
    app.allow_config_extras(CLI::config_extras_mode::error);

    RunConfig c;
    std::string momentum;
    std::string pf_velocity;
    double tolerance_scale = 1.0;

    app.add_option("--pf-speed", c.pf_speed, "preferred-frame speed in units of c (default: CMB dipole)");
    app.add_option("--chi", c.chi, "angle between photon and PF velocity, radians");
    app.add_option("--v-min", c.v_min, "boost scan lower speed");
    app.add_option("--v-max", c.v_max, "boost scan upper speed");
    app.add_option("--v-step", c.v_step, "boost scan step");
    app.add_option("--delta-min", c.delta_min, "rotation grid lower angle, radians");
    app.add_option("--delta-max", c.delta_max, "rotation grid upper angle, radians");
    app.add_option("--delta-step", c.delta_step, "rotation grid step, radians");
    app.add_option("--chi-steps", c.chi_steps, "number of chi points spanning [0, pi]");
    app.add_option("--samples", c.samples, "Monte Carlo trials per row");
    app.add_option("--seed", c.seed, "Monte Carlo seed");
    app.add_option("--theta", c.theta, "prepared polarisation angle, radians");
    app.add_option("--polariser-angle", c.polariser_angle, "polariser transmission angle, radians");
    app.add_option("--momentum", momentum, "photon 3-momentum x,y,z (overrides canonical frame)");
    app.add_option("--pf-velocity", pf_velocity, "PF 3-velocity x,y,z (overrides canonical frame)");
    app.add_option("--transform", c.transform, "steps boost:AXIS:V;rotate:AXIS:ANGLE (AXIS = k, x, y, z or ax,ay,az)");
    app.add_option("--output", c.output_path, "output file (default: stdout)");
    const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};
    app.add_option("--format", c.format, "csv or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    auto* boost_cmd = app.add_subcommand("boost-scan", "closed-form vs matrix boost phase over a V grid");
    auto* rotation_cmd = app.add_subcommand("rotation-scan", "rotation phase shift over a (delta, chi) grid");
    auto* wigner_cmd = app.add_subcommand("wigner", "Wigner angles for one (k, u, transform)");
    auto* malus_cmd = app.add_subcommand("malus", "anomalous Malus curve with Monte Carlo counts");
    auto* validate_cmd = app.add_subcommand("validate", "run the invariant suite");
    validate_cmd->add_option("--tolerance-scale", tolerance_scale, "multiply every tolerance")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage_error;
    }

    try {
        if (!momentum.empty()) {
            c.momentum = parse_vec3(momentum);
        }
        if (!pf_velocity.empty()) {
            c.pf_velocity = parse_vec3(pf_velocity);
        }
        c.validate();

        std::ofstream file;
        if (!c.output_path.empty()) {
            file.open(c.output_path, std::ios::binary);
            if (!file) {
                err << "cannot open output file " << c.output_path << '\n';
                return usage_error;
            }
        }
        std::ostream& sink = c.output_path.empty() ? out : file;

        auto emit = [&](const Table& t) {
            if (c.format == Format::json) {
                write_json(t, sink);
            } else {
                write_csv(t, sink);
            }
        };

        if (boost_cmd->parsed()) {
            emit(boost_scan(c));
        } else if (rotation_cmd->parsed()) {
            emit(rotation_scan(c));
        } else if (malus_cmd->parsed()) {
            emit(malus(c));
        } else if (wigner_cmd->parsed()) {
            sink << wigner(c).dump(2) << '\n';
        } else if (validate_cmd->parsed()) {
            const auto results = validation::run_all({tolerance_scale, c.seed});
            print_report(results, sink);
            for (const auto& r : results) {
                if (!r.passed) {
                    return validation_failed;
                }
            }
        }
        return ok;
    } catch (const StabilityError& e) {
        err << "numerical error: " << e.what() << '\n';
        return numerical_error;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const FrameMismatch& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return numerical_error;
    }
}

} // namespace pfphoton::cli
