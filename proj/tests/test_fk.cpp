#include <gtest/gtest.h>

#include <numbers>

#include "rkin/fk.hpp"
#include "support/generators.hpp"

namespace rkin {
namespace {

using std::numbers::pi;
using testing::Rng;

LinkRecord joint(LinkId id, std::optional<LinkId> parent, const Vec3d& axis, const Vec3d& offset) {
    LinkRecord r;
    r.self_id = id;
    r.parent_id = parent;
    r.name = "l" + std::to_string(id);
    r.joint_axis = axis;
    r.offset = offset;
    return r;
}

// Base at the origin, joints a and b about x, end marker link at the tip.
RobotModel arm(double l1, double l2, double l3) {
    return build_model({joint(0, std::nullopt, Vec3d::UnitZ(), Vec3d::Zero()),
                        joint(1, 0, Vec3d::UnitX(), Vec3d(0, 0, l1)), joint(2, 1, Vec3d::UnitX(), Vec3d(0, 0, l2)),
                        joint(3, 2, Vec3d::UnitX(), Vec3d(0, 0, l3))});
}

TEST(JointTransform, ZeroAngleIsPureOffset) {
    const LinkRecord link = joint(1, 0, Vec3d(0, 0.6, 0.8), Vec3d(1, 2, 3));
    const Transformd t = joint_transform(link, 0.0);
    EXPECT_EQ(t.rotation().matrix(), Mat3d::Identity());
    EXPECT_EQ(t.translation(), link.offset);
}

TEST(JointTransform, ClockwiseAboutX) {
    const double l1 = 1.2, l2 = 0.7, theta = 0.9;
    const Transformd t = joint_transform(joint(1, 0, Vec3d::UnitX(), Vec3d(0, 0, l1)), -theta);
    EXPECT_LT((apply(t, Vec3d(0, 0, l2)) - Vec3d(0, l2 * std::sin(theta), l1 + l2 * std::cos(theta))).norm(), 1e-15);
}

TEST(JointTransform, HalfTurnAboutZ) {
    const Transformd t = joint_transform(joint(1, 0, Vec3d::UnitZ(), Vec3d::Zero()), pi);
    const Mat3d expected = Vec3d(-1, -1, 1).asDiagonal();
    EXPECT_LT((t.rotation().matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(ForwardKinematics, ZeroConfigurationStacksOffsets) {
    const RobotModel m = arm(1.0, 2.0, 3.0);
    const PoseMap poses = forward_kinematics(m, std::map<LinkId, double>{{1, 0.0}, {2, 0.0}, {3, 0.0}});
    EXPECT_EQ(poses.size(), 4u);
    EXPECT_EQ(poses.at(0).translation(), Vec3d::Zero());
    EXPECT_EQ(poses.at(1).translation(), Vec3d(0, 0, 1));
    EXPECT_EQ(poses.at(2).translation(), Vec3d(0, 0, 3));
    EXPECT_EQ(poses.at(3).translation(), Vec3d(0, 0, 6));
    EXPECT_EQ(poses.at(3).rotation().matrix(), Mat3d::Identity());
}

TEST(ForwardKinematics, TwoClockwiseQuarterTurns) {
    const RobotModel m = arm(1.0, 1.0, 1.0);
    const PoseMap poses = forward_kinematics(m, std::map<LinkId, double>{{1, -pi / 2}, {2, -pi / 2}, {3, 0.0}});
    EXPECT_LT((poses.at(3).translation() - Vec3d(0, 1, 0)).norm(), 1e-15);
    EXPECT_LT((end_point_position(poses, 2, Vec3d(0, 0, 1)) - Vec3d(0, 1, 0)).norm(), 1e-15);
    EXPECT_LT((poses.at(2).translation() - Vec3d(0, 1, 1)).norm(), 1e-15);
}

TEST(ForwardKinematics, RootEntryIsIgnoredAndBaseIsApplied) {
    BaseState base;
    base.transform = make_transform(rot_z(0.3), Vec3d(5, 0, 0));
    auto records = std::vector<LinkRecord>{joint(0, std::nullopt, Vec3d::UnitZ(), Vec3d::Zero()),
                                           joint(1, 0, Vec3d::UnitX(), Vec3d(0, 0, 1))};
    const RobotModel m = build_model(records, base);
    const PoseMap with_root = forward_kinematics(m, std::map<LinkId, double>{{0, 99.0}, {1, 0.2}});
    const PoseMap without_root = forward_kinematics(m, std::map<LinkId, double>{{1, 0.2}});
    EXPECT_TRUE(approx_equal(with_root.at(0), base.transform, 0.0));
    EXPECT_TRUE(approx_equal(with_root.at(1), without_root.at(1), 0.0));
    EXPECT_TRUE(approx_equal(with_root.at(1), compose(base.transform, joint_transform(m.link(1), 0.2))));
}

TEST(ForwardKinematics, InputErrors) {
    const RobotModel m = arm(1, 1, 1);
    try {
        forward_kinematics(m, std::map<LinkId, double>{{1, 0.0}, {3, 0.0}});
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("link id 2"), std::string::npos) << e.what();
    }
    EXPECT_THROW(forward_kinematics(m, std::map<LinkId, double>{{1, 0}, {2, 0}, {3, 0}, {4, 0}}), InputError);
    EXPECT_THROW(forward_kinematics(m, std::map<LinkId, double>{{1, 0}, {2, std::nan("")}, {3, 0}}), InputError);
    const JointStates zero{{1, {}}, {2, {}}, {3, {}}};
    EXPECT_THROW(end_point_position(m, zero, 12, Vec3d::Zero()), LookupError);
    EXPECT_THROW(forward_kinematics(m, zero).at(12), LookupError);
}

TEST(ForwardKinematics, MatchesPaddedMatrixProducts) {
    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const RobotModel m = build_model(testing::random_tree_records(rng, 12));
        const JointStates states = testing::random_states(rng, m);
        const PoseMap poses = forward_kinematics(m, states);
        for (const LinkRecord& r : m.links()) {
            const Eigen::Matrix4d ref = testing::reference_world_matrix(m, states, r.self_id);
            EXPECT_LT((poses.at(r.self_id).matrix() - ref).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(ForwardKinematics, PathProductEqualsPoseMap) {
    Rng rng(42);
    const RobotModel m = build_model(testing::random_tree_records(rng, 20));
    const JointStates states = testing::random_states(rng, m);
    const PoseMap poses = forward_kinematics(m, states);
    for (const LinkRecord& r : m.links()) {
        Transformd t = m.base().transform;
        for (LinkId id : path_to_root(m, r.self_id))
            if (id != m.root_id()) t = t * joint_transform(m.link(id), states.at(id).q);
        EXPECT_TRUE(approx_equal(t, poses.at(r.self_id)));
    }
}

TEST(EndPoint, RigidAndAffine) {
    Rng rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const RobotModel m = build_model(testing::random_chain_records(rng, 5));
        const JointStates states = testing::random_states(rng, m);
        const PoseMap poses = forward_kinematics(m, states);
        const Vec3d x = testing::random_vec(rng), y = testing::random_vec(rng), d = testing::random_vec(rng);
        EXPECT_EQ(end_point_position(poses, 4, Vec3d::Zero()), poses.at(4).translation());
        EXPECT_NEAR((end_point_position(poses, 4, x) - end_point_position(poses, 4, y)).norm(), (x - y).norm(), 1e-12);
        const Vec3d shift = end_point_position(poses, 4, Vec3d(x + d)) - end_point_position(poses, 4, x);
        EXPECT_LT((shift - poses.at(4).rotation() * d).norm(), 1e-12);
        EXPECT_EQ(end_point_position(m, states, 4, x), end_point_position(poses, 4, x));
    }
}

}  // namespace
}  // namespace rkin
