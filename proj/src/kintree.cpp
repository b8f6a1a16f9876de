#include "rkin/kintree.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace rkin {

namespace {

std::string describe(const LinkRecord& r) { return "link " + std::to_string(r.self_id); }

void validate_fields(const LinkRecord& r, std::size_t i) {
    if (r.self_id < 0) throw ModelError(ModelErrorKind::InvalidField, "negative link id", i);
    if (!is_valid_link_name(r.name))
        throw ModelError(ModelErrorKind::InvalidField, describe(r) + ": invalid name '" + r.name + "'", i);
    if (!r.offset.allFinite() || !r.com.allFinite() || !r.inertia.allFinite() || !std::isfinite(r.mass) ||
        !r.joint_axis.allFinite())
        throw ModelError(ModelErrorKind::InvalidField, describe(r) + ": non-finite value", i);
    if (std::abs(r.joint_axis.norm() - 1.0) > tolerance::kUnitAxis)
        throw ModelError(ModelErrorKind::NonUnitAxis, describe(r) + ": joint axis is not unit length", i);
    if ((r.inertia - r.inertia.transpose()).cwiseAbs().maxCoeff() > 1e-9)
        throw ModelError(ModelErrorKind::AsymmetricInertia, describe(r) + ": inertia is not symmetric", i);
}

}  // namespace

bool operator==(const LinkRecord& a, const LinkRecord& b) {
    return a.self_id == b.self_id && a.child_id == b.child_id && a.sibling_id == b.sibling_id &&
           a.parent_id == b.parent_id && a.joint_axis == b.joint_axis && a.offset == b.offset &&
           a.name == b.name && a.mass == b.mass && a.com == b.com && a.inertia == b.inertia;
}

bool operator==(const RobotModel& a, const RobotModel& b) {
    return a.root_id_ == b.root_id_ && a.links_ == b.links_ &&
           approx_equal(a.base_.transform, b.base_.transform, 0.0) &&
           a.base_.linear_velocity == b.base_.linear_velocity &&
           a.base_.angular_velocity == b.base_.angular_velocity;
}

bool is_valid_link_name(const std::string& name) {
    if (name.empty()) return false;
    return std::none_of(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c) || c == '#'; });
}

const LinkRecord& RobotModel::link(LinkId id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) throw LookupError("unknown link id " + std::to_string(id));
    return links_[it->second];
}

std::vector<LinkId> RobotModel::children(LinkId id) const {
    std::vector<LinkId> out;
    for (auto c = link(id).child_id; c; c = link(*c).sibling_id) out.push_back(*c);
    return out;
}

RobotModel build_model(std::vector<LinkRecord> records, const BaseState& base) {
    RobotModel model;
    model.base_ = base;

    std::optional<std::size_t> root;
    for (std::size_t i = 0; i < records.size(); ++i) {
        LinkRecord& r = records[i];
        validate_fields(r, i);
        r.child_id.reset();
        r.sibling_id.reset();
        if (!model.index_.emplace(r.self_id, i).second)
            throw ModelError(ModelErrorKind::DuplicateId, "duplicate link id " + std::to_string(r.self_id), i);
        if (!r.parent_id) {
            if (root)
                throw ModelError(ModelErrorKind::MultipleRoots,
                                 "links " + std::to_string(records[*root].self_id) + " and " +
                                     std::to_string(r.self_id) + " both have no parent",
                                 i);
            root = i;
        }
    }
    if (!root) throw ModelError(ModelErrorKind::NoRoot, "no link without a parent");

    // Append each link to its parent's child chain; `last_child` tracks chain tails.
    std::unordered_map<LinkId, std::size_t> last_child;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const LinkRecord& r = records[i];
        if (!r.parent_id) continue;
        const auto parent = model.index_.find(*r.parent_id);
        if (parent == model.index_.end())
            throw ModelError(ModelErrorKind::UnknownParent,
                             describe(r) + ": parent " + std::to_string(*r.parent_id) + " does not exist", i);
        const auto tail = last_child.find(*r.parent_id);
        if (tail == last_child.end())
            records[parent->second].child_id = r.self_id;
        else
            records[tail->second].sibling_id = r.self_id;
        last_child[*r.parent_id] = i;
    }

    model.links_ = std::move(records);
    model.root_id_ = model.links_[*root].self_id;

    // Anything not reachable from the root sits on a parent cycle.
    std::vector<bool> seen(model.links_.size(), false);
    for (LinkId id : traverse(model)) seen[model.index_.at(id)] = true;
    const auto orphan = std::find(seen.begin(), seen.end(), false);
    if (orphan != seen.end()) {
        const auto i = static_cast<std::size_t>(orphan - seen.begin());
        throw ModelError(ModelErrorKind::ParentCycle, describe(model.links_[i]) + " is part of a parent cycle", i);
    }
    return model;
}

std::vector<LinkId> traverse(const RobotModel& model) {
    std::vector<LinkId> order;
    order.reserve(model.size());
    std::vector<LinkId> stack{model.root_id()};
    while (!stack.empty()) {
        const LinkId id = stack.back();
        stack.pop_back();
        order.push_back(id);
        const LinkRecord& r = model.link(id);
        if (r.sibling_id) stack.push_back(*r.sibling_id);
        if (r.child_id) stack.push_back(*r.child_id);
    }
    return order;
}

std::vector<LinkId> path_to_root(const RobotModel& model, LinkId id) {
    std::vector<LinkId> path{id};
    for (auto p = model.link(id).parent_id; p; p = model.link(*p).parent_id) path.push_back(*p);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace rkin
