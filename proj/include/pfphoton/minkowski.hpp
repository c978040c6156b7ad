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
#include <cstddef>
#include <string>

#include "pfphoton/errors.hpp"

/// Minkowski-space primitives in signature (+,-,-,-), units c = 1.
namespace pfphoton {

namespace tolerance {
/// Validation applied when a value is built from user-supplied parameters.
inline constexpr double construction = 1e-12;
/// Assertions on values produced by chains of 4x4 products.
inline constexpr double propagation = 1e-10;
/// Little-group elements must fix their standard vectors this well.
inline constexpr double stabiliser = 1e-9;
} // namespace tolerance

inline constexpr double pi = 3.141592653589793238462643383279502884;

using Vec3 = std::array<double, 3>;

constexpr double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::hypot(a[0], a[1], a[2]); }

constexpr Vec3 scaled(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

inline Vec3 normalized(const Vec3& a) {
    const double n = norm(a);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw DomainError("cannot normalise a zero or non-finite 3-vector");
    }
    return scaled(a, 1.0 / n);
}

/// Angle in [0, pi] between two non-zero 3-vectors.
inline double angle_between(const Vec3& a, const Vec3& b) {
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

inline void require_unit(const Vec3& n, const char* what) {
    if (!(std::abs(norm(n) - 1.0) <= tolerance::construction)) {
        throw DomainError(std::string(what) + " must be a unit vector");
    }
}

struct FourVector {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    static constexpr FourVector from_parts(double time, const Vec3& s) {
        return {time, s[0], s[1], s[2]};
    }

    constexpr Vec3 spatial() const { return {x, y, z}; }

    constexpr double operator[](std::size_t i) const {
        return i == 0 ? t : i == 1 ? x : i == 2 ? y : z;
    }

    constexpr double& operator[](std::size_t i) {
        return i == 0 ? t : i == 1 ? x : i == 2 ? y : z;
    }

    friend constexpr bool operator==(const FourVector&, const FourVector&) = default;
};

constexpr FourVector operator+(const FourVector& a, const FourVector& b) {
    return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr FourVector operator-(const FourVector& a, const FourVector& b) {
    return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr FourVector operator*(double s, const FourVector& a) {
    return {s * a.t, s * a.x, s * a.y, s * a.z};
}

/// Rest four-velocity of the preferred frame in its own coordinates.
inline constexpr FourVector u_pf{1.0, 0.0, 0.0, 0.0};

/// Null standard vector q = kappa (1; 0, 0, 1).
constexpr FourVector standard_null(double kappa = 1.0) { return {kappa, 0.0, 0.0, kappa}; }

constexpr double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

inline double max_abs_component(const FourVector& v) {
    return std::max({std::abs(v.t), std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}

inline double max_abs_diff(const FourVector& a, const FourVector& b) {
    return max_abs_component(a - b);
}

/// |eta(v,v)| <= tol * scale^2, scale = largest component magnitude.
inline bool is_null(const FourVector& v, double tol = tolerance::construction) {
    const double scale = max_abs_component(v);
    return std::abs(minkowski_dot(v, v)) <= tol * scale * scale;
}

inline bool is_unit_timelike(const FourVector& v, double tol = tolerance::construction) {
    return v.t > 0.0 && std::abs(minkowski_dot(v, v) - 1.0) <= tol * std::max(1.0, v.t * v.t);
}

class LorentzTransform;
namespace detail {
LorentzTransform make_unchecked(const std::array<std::array<double, 4>, 4>& m);
}

/// Proper orthochronous Lorentz transformation stored as a 4x4 matrix acting
/// on column vectors (t, x, y, z).
class LorentzTransform {
  public:
    using Matrix = std::array<std::array<double, 4>, 4>;

    LorentzTransform() : m_(identity_matrix()) {}

    static LorentzTransform identity() { return LorentzTransform(); }

    /// Validates metric preservation, det = +1 and m[0][0] >= 1. Tolerance is
    /// scaled by the squared entry magnitude so large boosts are not rejected
    /// for rounding alone.
    static LorentzTransform from_matrix(const Matrix& m, double tol = tolerance::construction) {
        LorentzTransform l(m);
        const double scale = std::max(1.0, l.max_abs_entry() * l.max_abs_entry());
        if (!(l.metric_defect() <= tol * scale)) {
            throw DomainError("matrix does not preserve the Minkowski metric");
        }
        if (!(std::abs(l.determinant() - 1.0) <= tol * scale * scale)) {
            throw DomainError("Lorentz matrix must have unit determinant");
        }
        if (!(m[0][0] >= 1.0 - tol * scale)) {
            throw DomainError("Lorentz matrix must be orthochronous");
        }
        return l;
    }

    const Matrix& matrix() const { return m_; }
    double operator()(std::size_t row, std::size_t col) const { return m_[row][col]; }

    /// Exact inverse g m^T g.
    LorentzTransform inverse() const {
        Matrix r{};
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                r[i][j] = metric_sign(i) * m_[j][i] * metric_sign(j);
            }
        }
        return LorentzTransform(r);
    }

    /// max |m^T g m - g| over entries.
    double metric_defect() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < 4; ++k) {
                    s += m_[k][i] * metric_sign(k) * m_[k][j];
                }
                const double target = i == j ? metric_sign(i) : 0.0;
                worst = std::max(worst, std::abs(s - target));
            }
        }
        return worst;
    }

    double determinant() const {
        const auto& a = m_;
        // Laplace expansion over complementary 2x2 minors of rows (0,1) and (2,3).
        const double s0 = a[0][0] * a[1][1] - a[1][0] * a[0][1];
        const double s1 = a[0][0] * a[1][2] - a[1][0] * a[0][2];
        const double s2 = a[0][0] * a[1][3] - a[1][0] * a[0][3];
        const double s3 = a[0][1] * a[1][2] - a[1][1] * a[0][2];
        const double s4 = a[0][1] * a[1][3] - a[1][1] * a[0][3];
        const double s5 = a[0][2] * a[1][3] - a[1][2] * a[0][3];
        const double c5 = a[2][2] * a[3][3] - a[3][2] * a[2][3];
        const double c4 = a[2][1] * a[3][3] - a[3][1] * a[2][3];
        const double c3 = a[2][1] * a[3][2] - a[3][1] * a[2][2];
        const double c2 = a[2][0] * a[3][3] - a[3][0] * a[2][3];
        const double c1 = a[2][0] * a[3][2] - a[3][0] * a[2][2];
        const double c0 = a[2][0] * a[3][1] - a[3][0] * a[2][1];
        return s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;
    }

    double max_abs_entry() const {
        double worst = 0.0;
        for (const auto& row : m_) {
            for (double v : row) {
                worst = std::max(worst, std::abs(v));
            }
        }
        return worst;
    }

    /// max |this - other| over entries.
    double distance(const LorentzTransform& other) const {
        double worst = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                worst = std::max(worst, std::abs(m_[i][j] - other.m_[i][j]));
            }
        }
        return worst;
    }

    FourVector operator*(const FourVector& v) const {
        FourVector r;
        for (std::size_t i = 0; i < 4; ++i) {
            r[i] = m_[i][0] * v.t + m_[i][1] * v.x + m_[i][2] * v.y + m_[i][3] * v.z;
        }
        return r;
    }

    LorentzTransform operator*(const LorentzTransform& rhs) const {
        Matrix r{};
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                double s = 0.0;
                for (std::size_t k = 0; k < 4; ++k) {
                    s += m_[i][k] * rhs.m_[k][j];
                }
                r[i][j] = s;
            }
        }
        return LorentzTransform(r);
    }

  private:
    explicit LorentzTransform(const Matrix& m) : m_(m) {}

    static constexpr double metric_sign(std::size_t i) { return i == 0 ? 1.0 : -1.0; }

    static constexpr Matrix identity_matrix() {
        return {{{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, 1.0}}};
    }

    friend LorentzTransform detail::make_unchecked(const Matrix& m);

    Matrix m_;
};

namespace detail {
/// For builders whose output is a Lorentz matrix by construction.
inline LorentzTransform make_unchecked(const std::array<std::array<double, 4>, 4>& m) {
    return LorentzTransform(m);
}
} // namespace detail

inline FourVector apply(const LorentzTransform& l, const FourVector& v) { return l * v; }

/// L2 * L1: first L1, then L2.
inline LorentzTransform compose(const LorentzTransform& l2, const LorentzTransform& l1) { return l2 * l1; }

inline LorentzTransform inverse(const LorentzTransform& l) { return l.inverse(); }

/// Unit timelike four-velocity of the preferred frame as seen by an observer.
class FrameVelocity {
  public:
    /// The preferred frame at rest: u = (1; 0, 0, 0).
    FrameVelocity() : u_(u_pf) {}

    static FrameVelocity from_four_velocity(const FourVector& u, double tol = tolerance::construction) {
        if (!is_unit_timelike(u, tol)) {
            throw DomainError("frame four-velocity must be unit timelike with u.t > 0");
        }
        return FrameVelocity(u);
    }

    /// From the 3-velocity theta-vector = u / u0, |theta| < 1.
    static FrameVelocity from_velocity(const Vec3& velocity) {
        const double speed = norm(velocity);
        if (!(speed < 1.0)) {
            throw DomainError("frame speed must be below 1 (units of c)");
        }
        const double gamma = 1.0 / std::sqrt((1.0 - speed) * (1.0 + speed));
        return FrameVelocity(FourVector::from_parts(gamma, scaled(velocity, gamma)));
    }

    const FourVector& four_velocity() const { return u_; }
    Vec3 velocity() const { return scaled(u_.spatial(), 1.0 / u_.t); }
    double speed() const { return norm(u_.spatial()) / u_.t; }

  private:
    explicit FrameVelocity(const FourVector& u) : u_(u) {}

    FourVector u_;
};

/// The unique pure boost L_u with L_u u_PF = u.
inline LorentzTransform boost_to(const FrameVelocity& frame) {
    const FourVector& u = frame.four_velocity();
    const Vec3 s = u.spatial();
    LorentzTransform::Matrix m{};
    m[0][0] = u.t;
    for (std::size_t i = 0; i < 3; ++i) {
        m[0][i + 1] = s[i];
        m[i + 1][0] = s[i];
        for (std::size_t j = 0; j < 3; ++j) {
            m[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + s[i] * s[j] / (1.0 + u.t);
        }
    }
    return detail::make_unchecked(m);
}

inline LorentzTransform boost_to(const FourVector& u) { return boost_to(FrameVelocity::from_four_velocity(u)); }

/// Pure boost with 3-velocity V, |V| < 1.
inline LorentzTransform boost_velocity(const Vec3& velocity) {
    return boost_to(FrameVelocity::from_velocity(velocity));
}

namespace detail {
inline LorentzTransform spatial(const std::array<std::array<double, 3>, 3>& r) {
    LorentzTransform::Matrix m{};
    m[0][0] = 1.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            m[i + 1][j + 1] = r[i][j];
        }
    }
    return make_unchecked(m);
}
} // namespace detail

/// Rotation by delta (right-handed) about a unit axis, Rodrigues form.
inline LorentzTransform rotation_about(const Vec3& axis, double delta) {
    require_unit(axis, "rotation axis");
    const double c = std::cos(delta);
    const double s = std::sin(delta);
    const double v = 1.0 - c;
    const auto [x, y, z] = axis;
    return detail::spatial({{{c + x * x * v, x * y * v - z * s, x * z * v + y * s},
                             {y * x * v + z * s, c + y * y * v, y * z * v - x * s},
                             {z * x * v - y * s, z * y * v + x * s, c + z * z * v}}});
}

/// Minimal-angle rotation R with R z_hat = n, about the axis z_hat x n.
/// At n = -z_hat the axis is undefined; the rotation by pi about x_hat is used.
inline LorentzTransform rotation_z_to(const Vec3& n) {
    require_unit(n, "target direction");
    const auto [a, b, c] = normalized(n);
    const double transverse = a * a + b * b;
    if (transverse == 0.0 && c < 0.0) {
        return detail::spatial({{{1.0, 0.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, -1.0}}});
    }
    // 1 + c without cancellation near the south pole.
    const double one_plus_c = c >= 0.0 ? 1.0 + c : transverse / (1.0 - c);
    const double f = 1.0 / one_plus_c;
    return detail::spatial({{{1.0 - a * a * f, -a * b * f, a},
                             {-a * b * f, 1.0 - b * b * f, b},
                             {-a, -b, c}}});
}

/// Null four-momentum k together with the frame velocity u that labels the
/// Hilbert space the state lives in.
class PhotonKinematics {
  public:
    static PhotonKinematics make(const FourVector& k, const FrameVelocity& u,
                                 double tol = tolerance::propagation) {
        if (!(k.t > 0.0)) {
            throw DomainError("photon energy must be positive");
        }
        if (!is_null(k, tol)) {
            throw DomainError("photon four-momentum must be null");
        }
        PhotonKinematics kin(k, u);
        if (!(kin.kappa() > 0.0)) {
            throw DomainError("kappa = u.k must be positive");
        }
        return kin;
    }

    /// Photon of energy |p| moving along p, observed with frame velocity u.
    static PhotonKinematics from_momentum(const Vec3& p, const FrameVelocity& u = {}) {
        return make(FourVector::from_parts(norm(p), p), u, tolerance::construction);
    }

    const FourVector& momentum() const { return k_; }
    const FrameVelocity& frame() const { return u_; }
    double kappa() const { return minkowski_dot(u_.four_velocity(), k_); }
    Vec3 direction() const { return normalized(k_.spatial()); }

    /// (Lk, Lu), validated at propagation tolerance.
    PhotonKinematics transformed(const LorentzTransform& l) const {
        return make(l * k_,
                    FrameVelocity::from_four_velocity(l * u_.four_velocity(), tolerance::propagation));
    }

  private:
    PhotonKinematics(const FourVector& k, const FrameVelocity& u) : k_(k), u_(u) {}

    FourVector k_;
    FrameVelocity u_;
};

} // namespace pfphoton
