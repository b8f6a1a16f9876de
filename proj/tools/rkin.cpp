// rkin: command-line front end for the kinematics library.
//
//   rkin fk   --robot arm.rkin --joints 1=0.5,2=-0.3 --link 3 [--point x,y,z] [--degrees] [--csv]
//   rkin vel  --robot arm.rkin --joints ... --djoints ... --link 3 [--point ...] [--check-fd h]
//   rkin rot  exp --axis 0,0,1 --angle 1.57 | log --matrix r11,...,r33 | rpy --angles r,p,y
//   rkin tree --robot arm.rkin [--csv]
//
// Exit status: 0 success, 1 domain/model/input errors, 2 usage errors.

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <charconv>
#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rkin/descparser.hpp"
#include "rkin/format.hpp"
#include "rkin/veloprop.hpp"

namespace {

using rkin::LinkId;
using rkin::Vec3d;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr double kDegToRad = std::numbers::pi / 180.0;

double to_real(std::string_view s, const std::string& flag) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(value))
        throw UsageError(flag + ": '" + std::string(s) + "' is not a finite real number");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = s.find(sep, start);
        parts.push_back(s.substr(start, at == std::string_view::npos ? s.npos : at - start));
        if (at == std::string_view::npos) break;
        start = at + 1;
    }
    return parts;
}

std::vector<double> to_reals(const std::string& s, std::size_t count, const std::string& flag) {
    const auto parts = split(s, ',');
    if (parts.size() != count)
        throw UsageError(flag + ": expected " + std::to_string(count) + " comma-separated values");
    std::vector<double> out;
    for (auto p : parts) out.push_back(to_real(p, flag));
    return out;
}

Vec3d to_vec3(const std::string& s, const std::string& flag) {
    const auto v = to_reals(s, 3, flag);
    return Vec3d(v[0], v[1], v[2]);
}

/// "id=value,id=value"; empty string is an empty map.
std::map<LinkId, double> to_joint_map(const std::string& s, const std::string& flag, double scale) {
    std::map<LinkId, double> out;
    if (s.empty()) return out;
    for (auto item : split(s, ',')) {
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw UsageError(flag + ": expected id=value, found '" + std::string(item) + "'");
        const std::string_view id_text = item.substr(0, eq);
        LinkId id = 0;
        const auto [end, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
        if (id_text.empty() || ec != std::errc() || end != id_text.data() + id_text.size())
            throw UsageError(flag + ": '" + std::string(id_text) + "' is not a link id");
        if (!out.emplace(id, to_real(item.substr(eq + 1), flag) * scale).second)
            throw UsageError(flag + ": link id " + std::to_string(id) + " given twice");
    }
    return out;
}

void print_csv(const std::vector<std::string>& header, const std::vector<double>& row) {
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
    std::cout << '\n';
    for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << rkin::format_real(row[i]);
    std::cout << '\n';
}

std::vector<std::string> matrix_header(char prefix) {
    std::vector<std::string> h;
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c) h.push_back(std::string(1, prefix) + std::to_string(r) + std::to_string(c));
    return h;
}

void append_matrix(std::vector<double>& row, const rkin::Mat3d& m) {
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) row.push_back(m(r, c));
}

struct RobotOptions {
    std::string robot;
    std::string joints;
    std::string djoints;
    LinkId link = 0;
    std::string point = "0,0,0";
    std::optional<double> check_fd;
    bool degrees = false;
    bool csv = false;
};

int run_fk(const RobotOptions& o) {
    const Vec3d point = to_vec3(o.point, "--point");
    const auto angles = to_joint_map(o.joints, "--joints", o.degrees ? kDegToRad : 1.0);
    const rkin::RobotModel model = rkin::desc::parse_file(o.robot);
    if (!model.contains(o.link)) throw rkin::LookupError("unknown link id " + std::to_string(o.link));
    const rkin::PoseMap poses = rkin::forward_kinematics(model, angles);
    const Vec3d p = rkin::end_point_position(poses, o.link, point);
    const rkin::Mat3d& r = poses.at(o.link).rotation().matrix();
    if (o.csv) {
        std::vector<std::string> header{"px", "py", "pz"};
        const auto rh = matrix_header('r');
        header.insert(header.end(), rh.begin(), rh.end());
        std::vector<double> row{p.x(), p.y(), p.z()};
        append_matrix(row, r);
        print_csv(header, row);
    } else {
        std::cout << "p=" << rkin::format_vector(p) << '\n' << "R=" << rkin::format_matrix(r) << '\n';
    }
    return 0;
}

int run_vel(const RobotOptions& o) {
    const double scale = o.degrees ? kDegToRad : 1.0;
    const Vec3d point = to_vec3(o.point, "--point");
    const auto angles = to_joint_map(o.joints, "--joints", scale);
    const auto rates = to_joint_map(o.djoints, "--djoints", scale);
    if (o.check_fd && !(*o.check_fd > 0.0)) throw UsageError("--check-fd: step must be positive");
    const rkin::RobotModel model = rkin::desc::parse_file(o.robot);
    if (!model.contains(o.link)) throw rkin::LookupError("unknown link id " + std::to_string(o.link));

    rkin::JointStates states;
    for (const auto& [id, q] : angles) states[id].q = q;
    for (const auto& [id, dq] : rates) {
        if (!model.contains(id)) throw rkin::InputError("joint rate given for unknown link id " + std::to_string(id));
        if (!angles.count(id) && id != model.root_id())
            throw rkin::InputError("missing joint angle for link id " + std::to_string(id));
        states[id].dq = dq;
    }
    for (LinkId id : rkin::path_to_root(model, o.link))
        if (id != model.root_id() && !rates.count(id))
            throw rkin::InputError("missing joint rate for link id " + std::to_string(id));

    const rkin::PoseMap poses = rkin::forward_kinematics(model, states);
    const rkin::VelocityState vel = rkin::end_point_velocity(model, poses, states, o.link, point);
    std::optional<double> residual;
    if (o.check_fd) residual = rkin::finite_difference_check(model, states, o.link, point, *o.check_fd);

    if (o.csv) {
        std::vector<std::string> header{"vx", "vy", "vz", "wx", "wy", "wz"};
        std::vector<double> row{vel.linear.x(), vel.linear.y(), vel.linear.z(),
                                vel.angular.x(), vel.angular.y(), vel.angular.z()};
        if (residual) {
            header.push_back("fd_residual");
            row.push_back(*residual);
        }
        print_csv(header, row);
    } else {
        std::cout << "v=" << rkin::format_vector(vel.linear) << " w=" << rkin::format_vector(vel.angular) << '\n';
        if (residual) std::cout << "fd_residual=" << rkin::format_real(*residual) << '\n';
    }
    return 0;
}

std::string id_or_none(const std::optional<LinkId>& id) { return id ? std::to_string(*id) : "none"; }

int run_tree(const RobotOptions& o) {
    const rkin::RobotModel model = rkin::desc::parse_file(o.robot);
    if (o.csv) {
        std::cout << "id,name,parent,child,sibling,ax,ay,az,ox,oy,oz,mass,cx,cy,cz,"
                     "i11,i12,i13,i21,i22,i23,i31,i32,i33\n";
    }
    for (LinkId id : rkin::traverse(model)) {
        const rkin::LinkRecord& r = model.link(id);
        if (o.csv) {
            std::cout << r.self_id << ',' << r.name << ',' << id_or_none(r.parent_id) << ','
                      << id_or_none(r.child_id) << ',' << id_or_none(r.sibling_id);
            std::vector<double> row{r.joint_axis.x(), r.joint_axis.y(), r.joint_axis.z(), r.offset.x(),
                                    r.offset.y(), r.offset.z(), r.mass, r.com.x(), r.com.y(), r.com.z()};
            append_matrix(row, r.inertia);
            for (double x : row) std::cout << ',' << rkin::format_real(x);
            std::cout << '\n';
            continue;
        }
        std::cout << "id=" << r.self_id << " name=" << r.name << " parent=" << id_or_none(r.parent_id)
                  << " child=" << id_or_none(r.child_id) << " sibling=" << id_or_none(r.sibling_id)
                  << " axis=" << rkin::format_vector(r.joint_axis) << " offset=" << rkin::format_vector(r.offset);
        if (r.mass != 0.0) std::cout << " mass=" << rkin::format_real(r.mass);
        if ((r.com.array() != 0.0).any()) std::cout << " com=" << rkin::format_vector(r.com);
        if ((r.inertia.array() != 0.0).any()) std::cout << " inertia=" << rkin::format_matrix(r.inertia);
        std::cout << '\n';
    }
    return 0;
}

struct RotOptions {
    std::string axis;
    double angle = 0.0;
    std::string matrix;
    std::string angles;
    bool degrees = false;
    bool csv = false;
};

void print_rotation(const rkin::Rotationd& r, bool csv) {
    if (csv) {
        std::vector<double> row;
        append_matrix(row, r.matrix());
        print_csv(matrix_header('r'), row);
    } else {
        std::cout << rkin::format_matrix(r.matrix()) << '\n';
    }
}

int run_rot_exp(const RotOptions& o) {
    const Vec3d axis = to_vec3(o.axis, "--axis");
    print_rotation(rkin::exp_so3(axis, o.degrees ? o.angle * kDegToRad : o.angle), o.csv);
    return 0;
}

int run_rot_log(const RotOptions& o) {
    const auto v = to_reals(o.matrix, 9, "--matrix");
    const rkin::Mat3d m = Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(v.data());
    const Vec3d w = rkin::log_so3(m);
    if (o.csv)
        print_csv({"wx", "wy", "wz"}, {w.x(), w.y(), w.z()});
    else
        std::cout << rkin::format_vector(w) << '\n';
    return 0;
}

int run_rot_rpy(const RotOptions& o) {
    auto a = to_reals(o.angles, 3, "--angles");
    if (o.degrees)
        for (double& x : a) x *= kDegToRad;
    print_rotation(rkin::rpy(a[0], a[1], a[2]), o.csv);
    return 0;
}

void add_robot_flags(CLI::App* cmd, RobotOptions& o, bool with_joints) {
    cmd->add_option("--robot", o.robot, "Robot description file (.rkin)")->required();
    if (with_joints) {
        cmd->add_option("--joints", o.joints, "Joint angles as id=value,... (rad)");
        cmd->add_option("--link", o.link, "Link whose frame holds the point")->required();
        cmd->add_option("--point", o.point, "Point in the link frame: x,y,z (m)");
        cmd->add_flag("--degrees", o.degrees, "Read angles (and rates) in degrees");
    }
    cmd->add_flag("--csv", o.csv, "Emit a CSV header row and data row(s)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rigid-body kinematics: forward kinematics, end-point velocity and rotation utilities"};
    app.require_subcommand(1);

    RobotOptions robot;
    RotOptions rot;

    auto* fk = app.add_subcommand("fk", "World position and orientation of a point on a link");
    add_robot_flags(fk, robot, true);

    auto* vel = app.add_subcommand("vel", "End-point linear and angular velocity");
    add_robot_flags(vel, robot, true);
    vel->add_option("--djoints", robot.djoints, "Joint rates as id=value,... (rad/s)");
    vel->add_option("--check-fd", robot.check_fd, "Also print the central-difference residual for step h");

    auto* tree = app.add_subcommand("tree", "List links in traversal order");
    add_robot_flags(tree, robot, false);

    auto* rot_cmd = app.add_subcommand("rot", "Rotation utilities");
    rot_cmd->require_subcommand(1);
    auto* rot_exp = rot_cmd->add_subcommand("exp", "Rotation from unit axis and angle");
    rot_exp->add_option("--axis", rot.axis, "Unit axis fx,fy,fz")->required();
    rot_exp->add_option("--angle", rot.angle, "Angle (rad)")->required();
    rot_exp->add_flag("--degrees", rot.degrees, "Angle in degrees");
    rot_exp->add_flag("--csv", rot.csv, "CSV output");
    auto* rot_log = rot_cmd->add_subcommand("log", "Rotation vector of a rotation matrix");
    rot_log->add_option("--matrix", rot.matrix, "9 comma-separated entries, row-major")->required();
    rot_log->add_flag("--csv", rot.csv, "CSV output");
    auto* rot_rpy = rot_cmd->add_subcommand("rpy", "Roll-pitch-yaw rotation Rz(yaw) Ry(pitch) Rx(roll)");
    rot_rpy->add_option("--angles", rot.angles, "roll,pitch,yaw (rad)")->required();
    rot_rpy->add_flag("--degrees", rot.degrees, "Angles in degrees");
    rot_rpy->add_flag("--csv", rot.csv, "CSV output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*fk) return run_fk(robot);
        if (*vel) return run_vel(robot);
        if (*tree) return run_tree(robot);
        if (*rot_exp) return run_rot_exp(rot);
        if (*rot_log) return run_rot_log(rot);
        if (*rot_rpy) return run_rot_rpy(rot);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
