#pragma once

#include <map>

#include "rkin/kintree.hpp"

namespace rkin {

/// World transform of every link frame (link-local -> world).
class PoseMap {
public:
    PoseMap() = default;
    explicit PoseMap(std::map<LinkId, Transformd> transforms) : transforms_(std::move(transforms)) {}

    /// Throws LookupError for unknown ids.
    const Transformd& at(LinkId id) const;
    bool contains(LinkId id) const { return transforms_.count(id) != 0; }
    std::size_t size() const { return transforms_.size(); }
    const std::map<LinkId, Transformd>& transforms() const { return transforms_; }

private:
    std::map<LinkId, Transformd> transforms_;
};

/// [exp_so3(axis, q), offset]: maps link-local coordinates into the parent's frame.
Transformd joint_transform(const LinkRecord& link, double q);

/// Chains joint transforms from the base outwards. `states` needs an entry
/// for every non-root link; the root's entry, if any, is ignored. Throws
/// InputError for missing or unknown ids and non-finite angles.
PoseMap forward_kinematics(const RobotModel& model, const JointStates& states);

/// Convenience overload taking bare joint angles.
PoseMap forward_kinematics(const RobotModel& model, const std::map<LinkId, double>& angles);

/// World position of a point fixed in link `id`'s frame.
Vec3d end_point_position(const PoseMap& poses, LinkId id, const Vec3d& local_point);
Vec3d end_point_position(const RobotModel& model, const JointStates& states, LinkId id, const Vec3d& local_point);

}  // namespace rkin
