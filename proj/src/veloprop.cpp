#include "rkin/veloprop.hpp"

#include <cmath>

namespace rkin {

namespace {

double rate_of(const JointStates& states, LinkId id) {
    const auto it = states.find(id);
    if (it == states.end()) throw InputError("missing joint rate for link id " + std::to_string(id));
    return it->second.dq;
}

VelocityState path_velocity(const RobotModel& model, const PoseMap& poses, const JointStates& states, LinkId id,
                            const Vec3d& local_point, bool include_base) {
    const Vec3d p_e = end_point_position(poses, id, local_point);
    VelocityState out;
    if (include_base) {
        const BaseState& base = model.base();
        const Vec3d p_base = poses.at(model.root_id()).translation();
        out.angular = base.angular_velocity;
        out.linear = base.linear_velocity + cross(base.angular_velocity, p_e - p_base);
    }
    for (LinkId joint : path_to_root(model, id)) {
        if (joint == model.root_id()) continue;
        const Vec3d w = joint_world_angular_velocity(poses, model, joint, rate_of(states, joint));
        out.angular += w;
        out.linear += cross(w, p_e - poses.at(joint).translation());
    }
    return out;
}

}  // namespace

Vec3d joint_world_angular_velocity(const PoseMap& poses, const RobotModel& model, LinkId id, double dq) {
    const LinkRecord& link = model.link(id);
    if (!link.parent_id) return Vec3d::Zero();
    return rotate_angular_velocity(poses.at(*link.parent_id).rotation(), dq * link.joint_axis);
}

VelocityState end_point_velocity(const RobotModel& model, const PoseMap& poses, const JointStates& states, LinkId id,
                                 const Vec3d& local_point) {
    return path_velocity(model, poses, states, id, local_point, true);
}

VelocityState single_link_velocity(const PoseMap& poses, const RobotModel& model, LinkId joint_id, double dq,
                                   const Vec3d& target_point) {
    const BaseState& base = model.base();
    const Vec3d p_base = poses.at(model.root_id()).translation();
    const Vec3d p_a = poses.at(joint_id).translation();
    const Vec3d v_a = base.linear_velocity + cross(base.angular_velocity, p_a - p_base);
    const Vec3d w_a = base.angular_velocity + joint_world_angular_velocity(poses, model, joint_id, dq);
    return {v_a + cross(w_a, target_point - p_a), w_a};
}

double finite_difference_check(const RobotModel& model, const JointStates& states, LinkId id,
                               const Vec3d& local_point, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("finite_difference_check: step must be positive");
    JointStates plus = states, minus = states;
    for (auto& [joint, s] : plus) s.q += h * s.dq;
    for (auto& [joint, s] : minus) s.q -= h * s.dq;
    const Vec3d fd = (end_point_position(model, plus, id, local_point) -
                      end_point_position(model, minus, id, local_point)) / (2.0 * h);
    const VelocityState analytic =
        path_velocity(model, forward_kinematics(model, states), states, id, local_point, false);
    return (fd - analytic.linear).norm();
}

}  // namespace rkin
