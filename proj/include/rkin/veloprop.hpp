#pragma once

// End-point velocity from joint rates. For a path of revolute joints i with
// world angular velocities w_i and world origins p_i, a point p_e on the last
// link moves with
//
//   angular = w_base + sum_i w_i
//   linear  = v_base + w_base x (p_e - p_base) + sum_i w_i x (p_e - p_i)
//
// All queries read poses from a PoseMap computed by the caller; the map must
// come from the same joint angles as the rates passed alongside it. This is
// not checked.

#include "rkin/fk.hpp"

namespace rkin {

/// Both components in world coordinates: linear in m/s, angular in rad/s.
struct VelocityState {
    Vec3d linear = Vec3d::Zero();
    Vec3d angular = Vec3d::Zero();
};

/// The link's own joint contribution R_parent * (dq * axis). Zero for the root.
Vec3d joint_world_angular_velocity(const PoseMap& poses, const RobotModel& model, LinkId id, double dq);

/// Velocity of `local_point` (in link `id`'s frame). Every non-root link on the
/// path to the root needs an entry in `states`; InputError otherwise.
VelocityState end_point_velocity(const RobotModel& model, const PoseMap& poses, const JointStates& states, LinkId id,
                                 const Vec3d& local_point);

/// Velocity of a world point rigidly attached to `joint_id`'s link when that
/// joint is the only one moving (upstream joints locked, base motion kept):
/// v = v_a + w_a x (p_b - p_a), w_b = w_a.
VelocityState single_link_velocity(const PoseMap& poses, const RobotModel& model, LinkId joint_id, double dq,
                                   const Vec3d& target_point);

/// |[p(q + h dq) - p(q - h dq)] / 2h - v| with p from full forward kinematics
/// and v the joint-driven part of end_point_velocity (base motion excluded,
/// since only the joints are perturbed). Truncation error is O(h^2).
double finite_difference_check(const RobotModel& model, const JointStates& states, LinkId id,
                               const Vec3d& local_point, double h);

}  // namespace rkin
