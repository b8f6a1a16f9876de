#pragma once

// Text rendering shared by the description writer and the CLI. Every real is
// printed with 17 significant digits so it parses back to the same double.

#include <string>

#include "rkin/se3.hpp"

namespace rkin {

/// "%.17g", with negative zero printed as "0".
std::string format_real(double x);

/// "[x,y,z]"
std::string format_vector(const Vec3d& v);

/// Row-major, rows separated by ';', entries by ',': "[r11,r12,r13;r21,...;...,r33]".
std::string format_matrix(const Mat3d& m);

/// "R=[...] p=[x,y,z]"
std::string format_transform(const Transformd& t);

}  // namespace rkin
