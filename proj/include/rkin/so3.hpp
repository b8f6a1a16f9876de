#pragma once

// Rotation algebra on 3x3 matrices. The exponential uses the Rodrigues
// closed form; a power-series version is kept alongside to cross-check it.
//
// Conventions: angles in radians, positive angle = counter-clockwise about
// the axis (right-hand rule). A clockwise turn is expressed by negating the
// angle.

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>

#include "rkin/errors.hpp"

namespace rkin {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Mat3 = Eigen::Matrix<Scalar, 3, 3>;

using Vec3d = Vec3<double>;
using Mat3d = Mat3<double>;

namespace tolerance {
/// Max entry of |R^T R - I| and |det R - 1| for a matrix to count as a rotation.
inline constexpr double kOrthogonality = 1e-9;
/// | |e| - 1 | accepted for a rotation axis.
inline constexpr double kUnitAxis = 1e-9;
/// Max entry of the symmetric part accepted by the general-matrix vee.
inline constexpr double kSkew = 1e-9;
/// Entrywise tolerance for identity / diagonal detection in the logarithm.
inline constexpr double kIdentity = 1e-9;
/// trace(R) <= -1 + kNearPi switches the logarithm to the symmetric-part axis recovery.
inline constexpr double kNearPi = 1e-6;
}  // namespace tolerance

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what) {
    if (!m.allFinite()) throw DomainError(std::string(what) + ": non-finite component");
}

template <typename Scalar>
void require_finite(Scalar x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": non-finite value");
}

/// Proper rotation matrix. Instances built through `from_matrix` (or any of
/// the constructors in this header) satisfy R^T R = I and det R = 1 to
/// `tolerance::kOrthogonality`.
template <typename Scalar>
class Rotation {
public:
    using MatrixType = Mat3<Scalar>;
    using VectorType = Vec3<Scalar>;

    Rotation() : m_(MatrixType::Identity()) {}

    static Rotation identity() { return Rotation(); }

    static bool is_valid(const MatrixType& m) {
        if (!m.allFinite()) return false;
        const MatrixType gram = m.transpose() * m - MatrixType::Identity();
        if (gram.cwiseAbs().maxCoeff() > Scalar(tolerance::kOrthogonality)) return false;
        return std::abs(m.determinant() - Scalar(1)) <= Scalar(tolerance::kOrthogonality);
    }

    /// Validating constructor; throws DomainError for anything that is not a proper rotation.
    static Rotation from_matrix(const MatrixType& m) {
        if (!is_valid(m)) throw DomainError("matrix is not a proper rotation (orthogonality/determinant check failed)");
        return Rotation(m);
    }

    /// Wraps `m` without checking. Only for values that are rotations by construction.
    static Rotation from_matrix_unchecked(const MatrixType& m) { return Rotation(m); }

    const MatrixType& matrix() const { return m_; }
    Scalar operator()(Eigen::Index row, Eigen::Index col) const { return m_(row, col); }

    Rotation transpose() const { return Rotation(m_.transpose()); }
    Rotation inverse() const { return transpose(); }

    template <typename NewScalar>
    Rotation<NewScalar> cast() const {
        return Rotation<NewScalar>::from_matrix_unchecked(m_.template cast<NewScalar>());
    }

    friend Rotation operator*(const Rotation& a, const Rotation& b) { return Rotation(a.m_ * b.m_); }

    template <typename Derived>
    VectorType operator*(const Eigen::MatrixBase<Derived>& v) const {
        return m_ * v;
    }

private:
    explicit Rotation(const MatrixType& m) : m_(m) {}

    MatrixType m_;
};

using Rotationd = Rotation<double>;

/// Skew-symmetric 3x3 matrix held as its three independent entries, so
/// S^T = -S holds structurally.
template <typename Scalar>
class SkewMatrix {
public:
    using VectorType = Vec3<Scalar>;
    using MatrixType = Mat3<Scalar>;

    SkewMatrix() : w_(VectorType::Zero()) {}
    explicit SkewMatrix(const VectorType& w) : w_(w) {}

    const VectorType& vector() const { return w_; }

    MatrixType matrix() const {
        MatrixType m;
        m << Scalar(0), -w_.z(), w_.y(),
             w_.z(), Scalar(0), -w_.x(),
             -w_.y(), w_.x(), Scalar(0);
        return m;
    }

    template <typename Derived>
    VectorType operator*(const Eigen::MatrixBase<Derived>& p) const {
        return matrix() * p;
    }

private:
    VectorType w_;
};

using SkewMatrixd = SkewMatrix<double>;

template <typename Scalar>
Rotation<Scalar> rot_x(Scalar angle) {
    require_finite(angle, "rot_x");
    const Scalar c = std::cos(angle), s = std::sin(angle);
    Mat3<Scalar> m;
    m << Scalar(1), Scalar(0), Scalar(0),
         Scalar(0), c, -s,
         Scalar(0), s, c;
    return Rotation<Scalar>::from_matrix_unchecked(m);
}

template <typename Scalar>
Rotation<Scalar> rot_y(Scalar angle) {
    require_finite(angle, "rot_y");
    const Scalar c = std::cos(angle), s = std::sin(angle);
    Mat3<Scalar> m;
    m << c, Scalar(0), s,
         Scalar(0), Scalar(1), Scalar(0),
         -s, Scalar(0), c;
    return Rotation<Scalar>::from_matrix_unchecked(m);
}

template <typename Scalar>
Rotation<Scalar> rot_z(Scalar angle) {
    require_finite(angle, "rot_z");
    const Scalar c = std::cos(angle), s = std::sin(angle);
    Mat3<Scalar> m;
    m << c, -s, Scalar(0),
         s, c, Scalar(0),
         Scalar(0), Scalar(0), Scalar(1);
    return Rotation<Scalar>::from_matrix_unchecked(m);
}

/// R_z(yaw) * R_y(pitch) * R_x(roll).
template <typename Scalar>
Rotation<Scalar> rpy(Scalar roll, Scalar pitch, Scalar yaw) {
    return rot_z(yaw) * rot_y(pitch) * rot_x(roll);
}

/// Component-wise cross product (a_y b_z - a_z b_y, a_z b_x - a_x b_z, a_x b_y - a_y b_x).
template <typename DerivedA, typename DerivedB>
Vec3<typename DerivedA::Scalar> cross(const Eigen::MatrixBase<DerivedA>& a,
                                      const Eigen::MatrixBase<DerivedB>& b) {
    EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedA, 3);
    EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedB, 3);
    return Vec3<typename DerivedA::Scalar>(a.y() * b.z() - a.z() * b.y(),
                                           a.z() * b.x() - a.x() * b.z(),
                                           a.x() * b.y() - a.y() * b.x());
}

template <typename Derived>
SkewMatrix<typename Derived::Scalar> hat(const Eigen::MatrixBase<Derived>& w) {
    EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3);
    return SkewMatrix<typename Derived::Scalar>(w);
}

template <typename Scalar>
Vec3<Scalar> vee(const SkewMatrix<Scalar>& s) {
    return s.vector();
}

/// vee for an arbitrary 3x3 matrix. Throws ShapeError if the symmetric part
/// exceeds `tolerance::kSkew`; otherwise reads the antisymmetric part.
template <typename Derived>
Vec3<typename Derived::Scalar> vee(const Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    EIGEN_STATIC_ASSERT_MATRIX_SPECIFIC_SIZE(Derived, 3, 3);
    const Mat3<Scalar> sym = (m + m.transpose()) / Scalar(2);
    if (!m.allFinite() || sym.cwiseAbs().maxCoeff() > Scalar(tolerance::kSkew))
        throw ShapeError("vee: matrix is not skew-symmetric");
    return Vec3<Scalar>((m(2, 1) - m(1, 2)) / Scalar(2),
                        (m(0, 2) - m(2, 0)) / Scalar(2),
                        (m(1, 0) - m(0, 1)) / Scalar(2));
}

/// Rodrigues form I + e^ sin(angle) + e^^2 (1 - cos(angle)). The axis must be
/// unit length; it is never normalized here.
template <typename Derived>
Rotation<typename Derived::Scalar> exp_so3(const Eigen::MatrixBase<Derived>& axis,
                                           typename Derived::Scalar angle) {
    using Scalar = typename Derived::Scalar;
    require_finite(axis, "exp_so3 axis");
    require_finite(angle, "exp_so3 angle");
    if (std::abs(axis.norm() - Scalar(1)) > Scalar(tolerance::kUnitAxis))
        throw DomainError("exp_so3: rotation axis is not unit length");
    const Mat3<Scalar> e = hat(axis).matrix();
    const Mat3<Scalar> m = Mat3<Scalar>::Identity() + e * std::sin(angle) + (e * e) * (Scalar(1) - std::cos(angle));
    return Rotation<Scalar>::from_matrix_unchecked(m);
}

/// Rotation vector form: angle = |w|, axis = w / |w|; the zero vector maps to I.
template <typename Derived>
Rotation<typename Derived::Scalar> exp_so3_vec(const Eigen::MatrixBase<Derived>& w) {
    using Scalar = typename Derived::Scalar;
    require_finite(w, "exp_so3_vec");
    const Scalar angle = w.norm();
    if (angle == Scalar(0)) return Rotation<Scalar>::identity();
    return exp_so3(Vec3<Scalar>(w / angle), angle);
}

/// Matrix exponential of (w^ t) from its power series I + A + A^2/2! + ...,
/// keeping `terms` terms (terms = 1 gives I). The series is summed on
/// A / 2^s with |A| / 2^s <= 1/2 and squared back s times, so 20 terms stay
/// accurate to rounding for rotation angles up to pi. Verification oracle for
/// exp_so3; it never uses the closed form.
template <typename Derived>
Mat3<typename Derived::Scalar> exp_taylor(const Eigen::MatrixBase<Derived>& w, typename Derived::Scalar t,
                                          int terms) {
    using Scalar = typename Derived::Scalar;
    if (terms < 1) throw DomainError("exp_taylor: need at least one term");
    Mat3<Scalar> a = hat(w).matrix() * t;
    int squarings = 0;
    for (Scalar size = w.norm() * std::abs(t); size > Scalar(0.5); size /= Scalar(2)) ++squarings;
    a /= std::pow(Scalar(2), Scalar(squarings));

    Mat3<Scalar> term = Mat3<Scalar>::Identity();
    Mat3<Scalar> sum = term;
    for (int k = 1; k < terms; ++k) {
        term = (term * a) / Scalar(k);
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) sum = (sum * sum).eval();
    return sum;
}

/// Checks e^^(2n+1) = (-1)^n e^ and e^^(2n+2) = (-1)^n e^^2 to 1e-12 by
/// repeated multiplication. Non-unit `e` simply fails the identities.
template <typename Derived>
bool hat_powers_check(const Eigen::MatrixBase<Derived>& e, int n) {
    using Scalar = typename Derived::Scalar;
    if (n < 0) return false;
    const Mat3<Scalar> eh = hat(e).matrix();
    const Mat3<Scalar> eh2 = eh * eh;
    Mat3<Scalar> power = eh;
    for (int k = 1; k < 2 * n + 1; ++k) power = power * eh;
    const Mat3<Scalar> odd = power;
    const Mat3<Scalar> even = odd * eh;
    const Scalar sign = (n % 2 == 0) ? Scalar(1) : Scalar(-1);
    constexpr Scalar tol = Scalar(1e-12);
    return (odd - sign * eh).cwiseAbs().maxCoeff() <= tol && (even - sign * eh2).cwiseAbs().maxCoeff() <= tol;
}

/// Rotation vector (axis * angle, angle in [0, pi]) of `r`.
///
///   R = I                      -> (0, 0, 0)
///   R diagonal, R != I         -> (pi/2) (r11 + 1, r22 + 1, r33 + 1)
///   otherwise                  -> theta a / |a|,
///        a = (r32 - r23, r13 - r31, r21 - r12), theta = atan2(|a|, r11 + r22 + r33 - 1)
///
/// Close to pi the antisymmetric part vanishes, so once trace(R) <= -1 + kNearPi
/// the axis is read from the symmetric part (R + R^T)/2 - cos(theta) I = (1 - cos theta) e e^T
/// instead: the column with the largest diagonal entry, normalized, with its
/// sign aligned to `a` when `a` is non-zero.
template <typename Scalar>
Vec3<Scalar> log_so3(const Rotation<Scalar>& rot) {
    const Mat3<Scalar>& r = rot.matrix();
    const Scalar tol = Scalar(tolerance::kIdentity);
    const Scalar pi = std::numbers::pi_v<Scalar>;

    if ((r - Mat3<Scalar>::Identity()).cwiseAbs().maxCoeff() <= tol) return Vec3<Scalar>::Zero();

    Mat3<Scalar> off = r;
    off.diagonal().setZero();
    if (off.cwiseAbs().maxCoeff() <= tol) {
        return (pi / Scalar(2)) * (r.diagonal() + Vec3<Scalar>::Ones());
    }

    const Vec3<Scalar> a = vee(Mat3<Scalar>(r - r.transpose()));
    const Scalar a_norm = a.norm();
    const Scalar trace = r.trace();
    const Scalar theta = std::atan2(a_norm, trace - Scalar(1));

    if (trace > Scalar(-1) + Scalar(tolerance::kNearPi)) return theta * a / a_norm;

    const Scalar cos_theta = std::cos(theta);
    const Mat3<Scalar> outer = (r + r.transpose()) / Scalar(2) - cos_theta * Mat3<Scalar>::Identity();
    Eigen::Index k = 0;
    outer.diagonal().maxCoeff(&k);
    Vec3<Scalar> axis = outer.col(k).normalized();
    if (a_norm > Scalar(0) && axis.dot(a) < Scalar(0)) axis = -axis;
    return theta * axis;
}

/// Validating overload for raw matrices.
template <typename Scalar>
Vec3<Scalar> log_so3(const Mat3<Scalar>& m) {
    return log_so3(Rotation<Scalar>::from_matrix(m));
}

/// Angular velocity expressed after rotating its frame by `r`: R w.
template <typename Scalar, typename Derived>
Vec3<Scalar> rotate_angular_velocity(const Rotation<Scalar>& r, const Eigen::MatrixBase<Derived>& w) {
    return r * w;
}

/// True iff |R (w x p) - (R w) x (R p)| < 1e-12.
template <typename Scalar, typename DerivedW, typename DerivedP>
bool rotate_linear_velocity_identity_check(const Rotation<Scalar>& r, const Eigen::MatrixBase<DerivedW>& w,
                                           const Eigen::MatrixBase<DerivedP>& p) {
    const Vec3<Scalar> lhs = r * cross(w, p);
    const Vec3<Scalar> rhs = cross(r * w, r * p);
    return (lhs - rhs).norm() < Scalar(1e-12);
}

}  // namespace rkin
