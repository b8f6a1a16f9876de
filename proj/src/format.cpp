#include "rkin/format.hpp"

#include <cstdio>

namespace rkin {

std::string format_real(double x) {
    if (x == 0.0) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_vector(const Vec3d& v) {
    return "[" + format_real(v.x()) + "," + format_real(v.y()) + "," + format_real(v.z()) + "]";
}

std::string format_matrix(const Mat3d& m) {
    std::string out = "[";
    for (int r = 0; r < 3; ++r) {
        if (r > 0) out += ';';
        for (int c = 0; c < 3; ++c) {
            if (c > 0) out += ',';
            out += format_real(m(r, c));
        }
    }
    out += ']';
    return out;
}

std::string format_transform(const Transformd& t) {
    return "R=" + format_matrix(t.rotation().matrix()) + " p=" + format_vector(t.translation());
}

}  // namespace rkin
