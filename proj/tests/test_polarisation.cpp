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

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "pfphoton/closed_form.hpp"
#include "pfphoton/polarisation.hpp"

namespace {

using namespace pfphoton;

constexpr double cmb = 1.2336e-3;
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

PhotonKinematics z_photon(const FrameVelocity& u = {}) { return PhotonKinematics::from_momentum({0.0, 0.0, 1.0}, u); }

TEST(LinearState, HelicityAmplitudes) {
    const auto a0 = make_linear_state(0.0, z_photon()).helicity_amplitudes();
    EXPECT_NEAR(std::abs(a0[0] - std::complex<double>(inv_sqrt2, 0.0)), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(a0[1] - std::complex<double>(inv_sqrt2, 0.0)), 0.0, 1e-16);

    const auto a90 = make_linear_state(pi / 2.0, z_photon()).helicity_amplitudes();
    EXPECT_NEAR(std::abs(a90[0] - std::complex<double>(0.0, inv_sqrt2)), 0.0, 1e-16);
    EXPECT_NEAR(std::abs(a90[1] - std::complex<double>(0.0, -inv_sqrt2)), 0.0, 1e-16);

    const auto a = make_linear_state(0.7, z_photon()).helicity_amplitudes();
    const auto b = make_linear_state(0.7 + pi, z_photon()).helicity_amplitudes();
    EXPECT_NEAR(std::abs(a[0] + b[0]), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(a[1] + b[1]), 0.0, 1e-15);
}

TEST(LinearState, NormMatchesAmplitude) {
    LinearPolState s = make_linear_state(1.234, z_photon());
    s.amplitude = {0.3, -0.4};
    const auto a = s.helicity_amplitudes();
    EXPECT_NEAR(std::norm(a[0]) + std::norm(a[1]), std::norm(s.amplitude), 1e-16);
}

TEST(TransformState, Identity) {
    const LinearPolState s = make_linear_state(0.4, canonical_kinematics(0.2, 1.0));
    const LinearPolState t = transform_state(LorentzTransform::identity(), s);
    EXPECT_EQ(t.theta, s.theta);
    EXPECT_EQ(t.kin.momentum(), s.kin.momentum());
    EXPECT_EQ(t.amplitude, s.amplitude);
}

TEST(TransformState, ParallelBoostKeepsAngle) {
    const PhotonKinematics kin = canonical_kinematics(0.3, 0.0);
    const LinearPolState t = transform_state(boost_along_photon(kin, 0.7), make_linear_state(0.25, kin));
    EXPECT_NEAR(t.theta, 0.25, 1e-10);
}

TEST(TransformState, CmbBoostShiftsByWignerAngle) {
    const PhotonKinematics kin = canonical_kinematics(cmb, pi / 2.0);
    const LinearPolState t = transform_state(boost_along_photon(kin, 0.5), make_linear_state(0.0, kin));
    EXPECT_NEAR(t.theta, boost_phase_matrix({0.5, cmb, pi / 2.0}).phi, 0.0);
    EXPECT_NEAR(t.theta, -3.305422465257785e-4, 1e-16);
    EXPECT_NEAR(std::abs(t.theta), 2.0 * 1.6527112326288887e-4, 1e-16);
    EXPECT_NEAR(t.kin.momentum().t, std::sqrt(3.0), 1e-14);
}

TEST(TransformState, PreservesAmplitude) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> a(-pi, pi), v(0.0, 0.99);
    for (int i = 0; i < 200; ++i) {
        LinearPolState s = make_linear_state(a(rng), PhotonKinematics::from_momentum(
                                                         {std::cos(a(rng)), std::sin(a(rng)), 0.3},
                                                         FrameVelocity::from_velocity({0.1, v(rng) * 0.5, 0.0})));
        s.amplitude = std::polar(0.8, a(rng));
        const LorentzTransform l = rotation_about(normalized({1.0, a(rng), 2.0}), a(rng)) *
                                   boost_velocity(scaled(normalized({a(rng), 1.0, 0.5}), v(rng)));
        EXPECT_EQ(std::abs(transform_state(l, s).amplitude), std::abs(s.amplitude));
    }
}

Polariser polariser(double angle, double half_angle = 0.1, Vec3 axis = {0.0, 0.0, 1.0}) {
    return {angle, axis, half_angle, FrameVelocity{}};
}

TEST(ApplyPolariser, Examples) {
    const LinearPolState s = make_linear_state(0.6, z_photon());

    const auto same = apply_polariser(polariser(0.6), s);
    ASSERT_TRUE(same.has_value());
    EXPECT_NEAR(std::abs(same->amplitude), 1.0, 1e-16);
    EXPECT_EQ(same->theta, 0.6);

    const auto crossed = apply_polariser(polariser(0.6 + pi / 2.0), s);
    ASSERT_TRUE(crossed.has_value());
    EXPECT_NEAR(std::abs(crossed->amplitude), 0.0, 1e-16);

    EXPECT_FALSE(apply_polariser(polariser(0.6, 0.1, normalized({0.0, 1.0, 1.0})), s).has_value());
    EXPECT_TRUE(apply_polariser(polariser(0.6, 0.8, normalized({0.0, 1.0, 1.0})), s).has_value());
}

TEST(ApplyPolariser, FrameMismatch) {
    const LinearPolState s = make_linear_state(0.6, z_photon(FrameVelocity::from_velocity({0.01, 0.0, 0.0})));
    EXPECT_THROW(apply_polariser(polariser(0.0), s), FrameMismatch);
    Polariser p = polariser(0.0);
    p.frame = s.kin.frame();
    EXPECT_NO_THROW(apply_polariser(p, s));
}

TEST(ApplyPolariser, InvalidPolariser) {
    const LinearPolState s = make_linear_state(0.0, z_photon());
    EXPECT_THROW(apply_polariser(polariser(0.0, 0.0), s), DomainError);
    EXPECT_THROW(apply_polariser(polariser(0.0, 0.1, {0.0, 0.0, 2.0}), s), DomainError);
}

TEST(ApplyPolariser, IsAProjector) {
    const LinearPolState s = make_linear_state(0.2, z_photon());
    const Polariser p = polariser(1.1);
    const auto once = apply_polariser(p, s);
    const auto twice = apply_polariser(p, *once);
    EXPECT_EQ(twice->theta, once->theta);
    EXPECT_EQ(twice->amplitude, once->amplitude);
}

TEST(ApplyPolariser, SquaredFactorIsMalus) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> a(-2.0 * pi, 2.0 * pi);
    for (int i = 0; i < 1000; ++i) {
        const double theta = a(rng), big_theta = a(rng);
        const auto out = apply_polariser(polariser(big_theta), make_linear_state(theta, z_photon()));
        EXPECT_NEAR(std::norm(out->amplitude), malus_probability(theta, big_theta), 1e-15);
    }
}

TEST(MalusProbability, Examples) {
    EXPECT_EQ(malus_probability(0.3, 0.3), 1.0);
    EXPECT_NEAR(malus_probability(0.3, 0.3 + pi / 2.0), 0.0, 1e-32);
    EXPECT_NEAR(malus_probability(0.3, 0.3 + pi / 4.0), 0.5, 1e-15);
}

TEST(MonteCarloMalus, DegenerateProbabilities) {
    EXPECT_EQ(monte_carlo_malus(0.2, 0.2, 10000, 1), 1.0);
    // cos^2(pi/2) ~ 3.7e-33: a draw passes only if it is exactly zero.
    EXPECT_EQ(monte_carlo_malus(0.0, pi / 2.0, 10000, 1), 0.0);
    EXPECT_THROW(monte_carlo_malus(0.0, 0.0, 0, 1), DomainError);
}

TEST(MonteCarloMalus, HalfProbability) {
    const double f = monte_carlo_malus(0.0, pi / 4.0, 1000000, 77);
    EXPECT_NEAR(f, 0.5, 0.002);
}

TEST(MonteCarloMalus, SeededAndReproducible) {
    const double a = monte_carlo_malus(0.1, 0.9, 100000, 5);
    const double b = monte_carlo_malus(0.1, 0.9, 100000, 5);
    const double c = monte_carlo_malus(0.1, 0.9, 100000, 6);
    EXPECT_EQ(std::memcmp(&a, &b, sizeof a), 0);
    EXPECT_NE(a, c);
}

TEST(MonteCarloMalus, WithinFourSigma) {
    std::mt19937_64 rng(1234);
    std::uniform_real_distribution<double> a(0.0, pi);
    int within = 0;
    const std::uint64_t n = 1000000;
    for (int i = 0; i < 20; ++i) {
        const double theta = a(rng), big_theta = a(rng);
        const double p = malus_probability(theta, big_theta);
        const double f = monte_carlo_malus(theta, big_theta, n, 1000 + i);
        within += std::abs(f - p) <= 4.0 * std::sqrt(p * (1.0 - p) / n) ? 1 : 0;
    }
    EXPECT_GE(within, 19);
}

TEST(AnomalousMalus, ClassicalLimit) {
    const PhotonKinematics kin = canonical_kinematics(0.0, pi / 2.0);
    std::vector<double> deltas;
    for (int m = 0; m <= 48; ++m) deltas.push_back(m * pi / 24.0);
    const auto curve = anomalous_malus_curve(kin, 0.3, 1.0, deltas);
    ASSERT_EQ(curve.size(), deltas.size());
    for (const auto& pt : curve) {
        EXPECT_NEAR(pt.probability, malus_probability(0.3, 1.0), 1e-12);
    }
}

TEST(AnomalousMalus, ZeroRotationIsClassical) {
    const PhotonKinematics kin = canonical_kinematics(0.2, 1.0);
    const std::vector<double> deltas{0.0};
    EXPECT_NEAR(anomalous_malus_curve(kin, 0.3, 1.0, deltas)[0].probability, malus_probability(0.3, 1.0), 1e-15);
}

TEST(AnomalousMalus, CrossedLeakage) {
    const PhotonKinematics kin = canonical_kinematics(cmb, pi / 2.0);
    const std::vector<double> deltas{pi / 2.0};
    const MalusPoint pt = anomalous_malus_curve(kin, 0.0, pi / 2.0, deltas)[0];
    EXPECT_NEAR(pt.phase_shift, 1.2336003128758932e-3, 1e-15);
    // sin^2(dphi), frozen from numpy.
    EXPECT_NEAR(pt.probability, 1.5217689599999526e-06, 1e-15);
}

} // namespace
