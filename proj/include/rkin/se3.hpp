#pragma once

// Homogeneous transforms stored as a (rotation, translation) pair. The
// padded 4x4 form [[R, p], [0, 1]] is available through `matrix()` but is
// never used internally.

#include "rkin/so3.hpp"

namespace rkin {

/// Maps child-frame coordinates into the parent frame: x -> R x + p.
template <typename Scalar>
class Transform {
public:
    Transform() : translation_(Vec3<Scalar>::Zero()) {}
    Transform(const Rotation<Scalar>& rotation, const Vec3<Scalar>& translation)
        : rotation_(rotation), translation_(translation) {}

    static Transform identity() { return Transform(); }

    const Rotation<Scalar>& rotation() const { return rotation_; }
    const Vec3<Scalar>& translation() const { return translation_; }

    Eigen::Matrix<Scalar, 4, 4> matrix() const {
        Eigen::Matrix<Scalar, 4, 4> m = Eigen::Matrix<Scalar, 4, 4>::Identity();
        m.template topLeftCorner<3, 3>() = rotation_.matrix();
        m.template topRightCorner<3, 1>() = translation_;
        return m;
    }

    template <typename NewScalar>
    Transform<NewScalar> cast() const {
        return Transform<NewScalar>(rotation_.template cast<NewScalar>(), translation_.template cast<NewScalar>());
    }

private:
    Rotation<Scalar> rotation_;
    Vec3<Scalar> translation_;
};

using Transformd = Transform<double>;

template <typename Scalar, typename Derived>
Transform<Scalar> make_transform(const Rotation<Scalar>& r, const Eigen::MatrixBase<Derived>& p) {
    require_finite(p, "make_transform translation");
    return Transform<Scalar>(r, p);
}

/// Validating overload: throws DomainError unless `r` is a proper rotation.
template <typename Scalar, typename Derived>
Transform<Scalar> make_transform(const Mat3<Scalar>& r, const Eigen::MatrixBase<Derived>& p) {
    return make_transform(Rotation<Scalar>::from_matrix(r), p);
}

template <typename Scalar, typename Derived>
Vec3<Scalar> apply(const Transform<Scalar>& t, const Eigen::MatrixBase<Derived>& point) {
    return t.rotation() * point + t.translation();
}

/// outer * inner: rotation R_o R_i, translation R_o p_i + p_o.
template <typename Scalar>
Transform<Scalar> compose(const Transform<Scalar>& outer, const Transform<Scalar>& inner) {
    return Transform<Scalar>(outer.rotation() * inner.rotation(),
                             outer.rotation() * inner.translation() + outer.translation());
}

template <typename Scalar>
Transform<Scalar> operator*(const Transform<Scalar>& outer, const Transform<Scalar>& inner) {
    return compose(outer, inner);
}

template <typename Scalar>
Transform<Scalar> invert(const Transform<Scalar>& t) {
    const Rotation<Scalar> rt = t.rotation().transpose();
    return Transform<Scalar>(rt, -(rt * t.translation()));
}

/// Entrywise comparison of rotation and translation (default 1e-12 absolute).
template <typename Scalar>
bool approx_equal(const Transform<Scalar>& a, const Transform<Scalar>& b, Scalar tol = Scalar(1e-12)) {
    return (a.rotation().matrix() - b.rotation().matrix()).cwiseAbs().maxCoeff() <= tol &&
           (a.translation() - b.translation()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace rkin
