#include "rkin/fk.hpp"

#include <cmath>

namespace rkin {

const Transformd& PoseMap::at(LinkId id) const {
    const auto it = transforms_.find(id);
    if (it == transforms_.end()) throw LookupError("no pose for link id " + std::to_string(id));
    return it->second;
}

Transformd joint_transform(const LinkRecord& link, double q) {
    return Transformd(exp_so3(link.joint_axis, q), link.offset);
}

PoseMap forward_kinematics(const RobotModel& model, const JointStates& states) {
    for (const auto& [id, state] : states) {
        if (!model.contains(id)) throw InputError("joint value given for unknown link id " + std::to_string(id));
        if (!std::isfinite(state.q) || !std::isfinite(state.dq) || !std::isfinite(state.ddq))
            throw InputError("non-finite joint state for link id " + std::to_string(id));
    }

    std::map<LinkId, Transformd> poses;
    for (LinkId id : traverse(model)) {
        const LinkRecord& link = model.link(id);
        if (!link.parent_id) {
            poses.emplace(id, model.base().transform);
            continue;
        }
        const auto state = states.find(id);
        if (state == states.end()) throw InputError("missing joint angle for link id " + std::to_string(id));
        poses.emplace(id, compose(poses.at(*link.parent_id), joint_transform(link, state->second.q)));
    }
    return PoseMap(std::move(poses));
}

PoseMap forward_kinematics(const RobotModel& model, const std::map<LinkId, double>& angles) {
    JointStates states;
    for (const auto& [id, q] : angles) states[id].q = q;
    return forward_kinematics(model, states);
}

Vec3d end_point_position(const PoseMap& poses, LinkId id, const Vec3d& local_point) {
    return apply(poses.at(id), local_point);
}

Vec3d end_point_position(const RobotModel& model, const JointStates& states, LinkId id, const Vec3d& local_point) {
    if (!model.contains(id)) throw LookupError("unknown link id " + std::to_string(id));
    return end_point_position(forward_kinematics(model, states), id, local_point);
}

}  // namespace rkin
