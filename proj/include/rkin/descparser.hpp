#pragma once

// Line-oriented robot description (".rkin"):
//
//   link <id> name=<token> parent=<id|none> axis=<x|y|z|fx,fy,fz> offset=<fx,fy,fz>
//        [mass=<f>] [com=<fx,fy,fz>] [inertia=<9 reals, row-major>]
//
// One declaration per line, fields separated by whitespace, '#' comments to
// end of line, blank lines ignored. Declaration order fixes sibling order.

#include <filesystem>
#include <string>
#include <string_view>

#include "rkin/kintree.hpp"

namespace rkin::desc {

/// Builds a validated model or throws ParseError carrying line and column.
RobotModel parse(std::string_view text);

/// Reads and parses a file. I/O failures throw std::runtime_error.
RobotModel parse_file(const std::filesystem::path& path);

/// Canonical text with links in declaration order and reals at 17 significant
/// digits. Inertial fields are written only when non-zero.
/// parse(serialize(m)) == m.
std::string serialize(const RobotModel& model);

}  // namespace rkin::desc
