#pragma once

// Robot body model. Each link owns exactly one revolute joint at its proximal
// end (the root owns none), and links are stored as a child/sibling list: a
// link points at its first child and at its next sibling, which turns an
// arbitrary-arity body tree into a binary tree.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rkin/se3.hpp"

namespace rkin {

using LinkId = int;

struct LinkRecord {
    LinkId self_id = 0;
    std::optional<LinkId> child_id;
    std::optional<LinkId> sibling_id;
    std::optional<LinkId> parent_id;  // nullopt only for the root
    /// Unit rotation axis, expressed in the parent's frame.
    Vec3d joint_axis = Vec3d::UnitZ();
    /// Parent joint origin -> this joint origin, in the parent's frame at zero angle (m).
    Vec3d offset = Vec3d::Zero();
    std::string name;
    // Inertial data is carried through parsing and dumps but nothing consumes it.
    double mass = 0.0;
    Vec3d com = Vec3d::Zero();
    Mat3d inertia = Mat3d::Zero();
};

bool operator==(const LinkRecord& a, const LinkRecord& b);

/// q in rad, dq in rad/s, ddq in rad/s^2 (stored only).
struct JointState {
    double q = 0.0;
    double dq = 0.0;
    double ddq = 0.0;
};

using JointStates = std::map<LinkId, JointState>;

/// World pose and velocity of the root. Defaults describe a fixed base at the world origin.
struct BaseState {
    Transformd transform;
    Vec3d linear_velocity = Vec3d::Zero();
    Vec3d angular_velocity = Vec3d::Zero();
};

class RobotModel {
public:
    /// Links in declaration order.
    const std::vector<LinkRecord>& links() const { return links_; }
    std::size_t size() const { return links_.size(); }
    LinkId root_id() const { return root_id_; }
    const BaseState& base() const { return base_; }

    bool contains(LinkId id) const { return index_.count(id) != 0; }
    /// Throws LookupError for unknown ids.
    const LinkRecord& link(LinkId id) const;
    /// Children of `id` in sibling-chain order.
    std::vector<LinkId> children(LinkId id) const;

    friend bool operator==(const RobotModel& a, const RobotModel& b);

private:
    friend RobotModel build_model(std::vector<LinkRecord> records, const BaseState& base);

    std::vector<LinkRecord> links_;
    std::unordered_map<LinkId, std::size_t> index_;
    LinkId root_id_ = 0;
    BaseState base_;
};

/// Validates `records` (parent_id set, child/sibling ignored) and fills the
/// child/sibling pointers: a link's first child is its earliest-declared
/// child, and siblings chain in declaration order.
///
/// Throws ModelError when the records do not form a single rooted tree or a
/// field is out of range. ModelErrorKind says which check failed.
RobotModel build_model(std::vector<LinkRecord> records, const BaseState& base = {});

/// Pre-order over the child/sibling binary tree. A node comes before its
/// children, and a child's whole subtree before the next sibling.
std::vector<LinkId> traverse(const RobotModel& model);

/// Root first, `id` last. Throws LookupError for unknown ids.
std::vector<LinkId> path_to_root(const RobotModel& model, LinkId id);

/// Link names are non-empty and contain no whitespace or '#'.
bool is_valid_link_name(const std::string& name);

}  // namespace rkin
