#include <gtest/gtest.h>

#include <numbers>

#include "rkin/format.hpp"
#include "rkin/se3.hpp"
#include "support/generators.hpp"

namespace rkin {
namespace {

using std::numbers::pi;
using testing::Rng;
using testing::random_vec;

Transformd random_transform(Rng& rng) {
    return make_transform(Rotationd::from_matrix(testing::random_rotation_matrix(rng)), random_vec(rng, 2.0));
}

TEST(Transform, IdentityLeavesPointsAlone) {
    const Transformd id = make_transform(Rotationd::identity(), Vec3d::Zero());
    const Vec3d p(1.5, -2, 0.25);
    EXPECT_EQ(apply(id, p), p);
    EXPECT_TRUE(approx_equal(id, Transformd::identity(), 0.0));
}

TEST(Transform, OriginMapsToTranslation) {
    Rng rng(1);
    const Transformd t = random_transform(rng);
    EXPECT_EQ(apply(t, Vec3d::Zero()), t.translation());
}

TEST(Transform, ClockwiseSingleLinkArm) {
    // Link of length l2 on a joint at height l1, turned clockwise by theta about x.
    const double l1 = 0.8, l2 = 1.3;
    for (double theta : {pi / 6, pi / 4, pi / 2, 2.0}) {
        const Transformd t = make_transform(rot_x(-theta), Vec3d(0, 0, l1));
        const Vec3d expected(0, l2 * std::sin(theta), l1 + l2 * std::cos(theta));
        EXPECT_LT((apply(t, Vec3d(0, 0, l2)) - expected).norm(), 1e-15) << theta;
    }
    const Transformd quarter = make_transform(rot_x(-pi / 2), Vec3d(0, 0, 1));
    EXPECT_LT((apply(quarter, Vec3d(0, 0, 1)) - Vec3d(0, 1, 1)).norm(), 1e-15);
}

TEST(Transform, AppliesAffinely) {
    Rng rng(2);
    for (int i = 0; i < 50; ++i) {
        const Transformd t = random_transform(rng);
        const Vec3d x = random_vec(rng);
        EXPECT_LT((apply(t, x) - apply(t, Vec3d::Zero()) - t.rotation() * x).norm(), 1e-14);
    }
}

TEST(Transform, ValidatingConstructorRejectsNonRotation) {
    Mat3d reflect = Mat3d::Identity();
    reflect(2, 2) = -1;
    EXPECT_THROW(make_transform(reflect, Vec3d::Zero()), DomainError);
    EXPECT_THROW(make_transform(Rotationd::identity(), Vec3d(0, std::nan(""), 0)), DomainError);
}

TEST(Compose, IdentityIsNeutral) {
    Rng rng(3);
    const Transformd t = random_transform(rng);
    EXPECT_TRUE(approx_equal(compose(Transformd::identity(), t), t, 0.0));
    EXPECT_TRUE(approx_equal(compose(t, Transformd::identity()), t, 0.0));
}

TEST(Compose, BlockFormula) {
    Rng rng(4);
    const Transformd a = random_transform(rng), b = random_transform(rng);
    const Transformd ab = compose(a, b);
    EXPECT_EQ(ab.rotation().matrix(), (a.rotation().matrix() * b.rotation().matrix()).eval());
    EXPECT_EQ(ab.translation(), (a.rotation().matrix() * b.translation() + a.translation()).eval());
    // Same thing through the padded 4x4 product.
    EXPECT_LT((ab.matrix() - a.matrix() * b.matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Compose, TwoLinkClockwiseArm) {
    // l1 = l2 = l3 = 1, both joints turned clockwise by pi/2 about x.
    const Transformd joint_a = make_transform(rot_x(-pi / 2), Vec3d(0, 0, 1));
    const Transformd joint_b = make_transform(rot_x(-pi / 2), Vec3d(0, 0, 1));
    const Vec3d p_e = apply(compose(joint_a, joint_b), Vec3d(0, 0, 1));
    EXPECT_LT((p_e - Vec3d(0, 1, 0)).norm(), 1e-15);
}

TEST(Compose, ApplyIsHomomorphicAndAssociative) {
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const Transformd a = random_transform(rng), b = random_transform(rng), c = random_transform(rng);
        const Vec3d x = random_vec(rng);
        EXPECT_LT((apply(compose(a, b), x) - apply(a, apply(b, x))).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_TRUE(approx_equal(compose(a, compose(b, c)), compose(compose(a, b), c)));
    }
}

TEST(Compose, LongChainsStayOrthogonal) {
    Rng rng(6);
    Transformd t;
    for (int i = 0; i < 100; ++i) t = t * random_transform(rng);
    EXPECT_TRUE(Rotationd::is_valid(t.rotation().matrix()));
    const Mat3d& r = t.rotation().matrix();
    EXPECT_LT((r.transpose() * r - Mat3d::Identity()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Invert, RoundTrip) {
    EXPECT_TRUE(approx_equal(invert(Transformd::identity()), Transformd::identity(), 0.0));
    const Vec3d p(1, -2, 3);
    EXPECT_EQ(invert(make_transform(Rotationd::identity(), p)).translation(), -p);
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const Transformd t = random_transform(rng);
        EXPECT_TRUE(approx_equal(compose(invert(t), t), Transformd::identity()));
        EXPECT_TRUE(approx_equal(compose(t, invert(t)), Transformd::identity()));
    }
}

TEST(Transform, TextRendering) {
    const Transformd t = make_transform(Rotationd::identity(), Vec3d(0.1, -0.0, 3));
    EXPECT_EQ(format_transform(t), "R=[1,0,0;0,1,0;0,0,1] p=[0.10000000000000001,0,3]");
}

TEST(Transform, FloatInstantiation) {
    const Transform<float> t = make_transform(rot_z(0.5f), Vec3<float>(1, 2, 3));
    const Transform<double> d = t.cast<double>();
    EXPECT_NEAR(apply(d, Vec3d::UnitX()).x(), 1.0 + std::cos(0.5), 1e-6);
}

}  // namespace
}  // namespace rkin
