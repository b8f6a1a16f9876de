#include "rkin/descparser.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "rkin/format.hpp"

namespace rkin::desc {

namespace {

// Explicit axes this close to unit length are normalized; anything already
// unit to the model tolerance is kept bit-for-bit so reparsing is stable.
constexpr double kAxisNormalizeTolerance = 1e-6;
constexpr double kInertiaSymmetryTolerance = 1e-9;

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Declaration {
    std::size_t line = 0;
    std::size_t id_column = 0;
    std::size_t parent_column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

std::optional<double> parse_real(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty() || s.front() == '+') return std::nullopt;
    double value = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value, std::chars_format::general);
    if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(value)) return std::nullopt;
    return value;
}

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
    return value;
}

std::optional<std::vector<double>> parse_reals(std::string_view s, std::size_t count) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        const auto value = parse_real(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
        if (!value) return std::nullopt;
        out.push_back(*value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (out.size() != count) return std::nullopt;
    return out;
}

class LineParser {
public:
    LineParser(std::size_t line, std::vector<Token> tokens) : line_(line), tokens_(std::move(tokens)) {}

    LinkRecord parse(Declaration& decl) {
        decl.line = line_;
        if (tokens_[0].text != "link") fail(tokens_[0].column, "expected 'link', found '" + str(tokens_[0].text) + "'");
        if (tokens_.size() < 2) fail(tokens_[0].column + 4, "missing link id");

        LinkRecord r;
        const auto id = parse_int(tokens_[1].text);
        if (!id || *id < 0) fail(tokens_[1].column, "link id must be a non-negative integer");
        r.self_id = *id;
        decl.id_column = tokens_[1].column;

        bool seen_name = false, seen_parent = false, seen_axis = false, seen_offset = false;
        bool seen_mass = false, seen_com = false, seen_inertia = false;
        for (std::size_t t = 2; t < tokens_.size(); ++t) {
            const Token& tok = tokens_[t];
            const std::size_t eq = tok.text.find('=');
            if (eq == std::string_view::npos || eq == 0) fail(tok.column, "expected key=value, found '" + str(tok.text) + "'");
            const std::string_view key = tok.text.substr(0, eq);
            const std::string_view value = tok.text.substr(eq + 1);
            const std::size_t vcol = tok.column + eq + 1;

            auto once = [&](bool& seen) {
                if (seen) fail(tok.column, "duplicate field '" + str(key) + "'");
                seen = true;
            };

            if (key == "name") {
                once(seen_name);
                if (value.empty()) fail(vcol, "empty name");
                r.name = str(value);
            } else if (key == "parent") {
                once(seen_parent);
                decl.parent_column = vcol;
                if (value == "none") {
                    r.parent_id.reset();
                } else {
                    const auto p = parse_int(value);
                    if (!p || *p < 0) fail(vcol, "parent must be a non-negative integer or 'none'");
                    r.parent_id = *p;
                }
            } else if (key == "axis") {
                once(seen_axis);
                r.joint_axis = parse_axis(value, vcol);
            } else if (key == "offset") {
                once(seen_offset);
                r.offset = vec3(value, vcol, "offset");
            } else if (key == "mass") {
                once(seen_mass);
                const auto m = parse_real(value);
                if (!m) fail(vcol, "mass must be a real number");
                r.mass = *m;
            } else if (key == "com") {
                once(seen_com);
                r.com = vec3(value, vcol, "com");
            } else if (key == "inertia") {
                once(seen_inertia);
                const auto v = parse_reals(value, 9);
                if (!v) fail(vcol, "inertia must be 9 comma-separated reals");
                r.inertia = Eigen::Map<const Eigen::Matrix<double, 3, 3, Eigen::RowMajor>>(v->data());
                if ((r.inertia - r.inertia.transpose()).cwiseAbs().maxCoeff() > kInertiaSymmetryTolerance)
                    throw ParseError(ParseErrorKind::AsymmetricInertia, line_, vcol, "inertia matrix is not symmetric");
            } else {
                fail(tok.column, "unknown field '" + str(key) + "'");
            }
        }

        const std::size_t end_column = tokens_.back().column + tokens_.back().text.size();
        if (!seen_name) fail(end_column, "missing field 'name'");
        if (!seen_parent) fail(end_column, "missing field 'parent'");
        if (!seen_axis) fail(end_column, "missing field 'axis'");
        if (!seen_offset) fail(end_column, "missing field 'offset'");
        return r;
    }

private:
    [[noreturn]] void fail(std::size_t column, const std::string& detail) const {
        throw ParseError(ParseErrorKind::Syntax, line_, column, detail);
    }

    static std::string str(std::string_view s) { return std::string(s); }

    Vec3d vec3(std::string_view value, std::size_t column, const char* what) const {
        const auto v = parse_reals(value, 3);
        if (!v) fail(column, std::string(what) + " must be 3 comma-separated reals");
        return Vec3d((*v)[0], (*v)[1], (*v)[2]);
    }

    Vec3d parse_axis(std::string_view value, std::size_t column) const {
        if (value == "x") return Vec3d::UnitX();
        if (value == "y") return Vec3d::UnitY();
        if (value == "z") return Vec3d::UnitZ();
        Vec3d axis = vec3(value, column, "axis");
        const double deviation = std::abs(axis.norm() - 1.0);
        if (deviation <= tolerance::kUnitAxis) return axis;
        if (deviation <= kAxisNormalizeTolerance) return axis.normalized();
        throw ParseError(ParseErrorKind::NonUnitAxis, line_, column,
                         "axis length " + format_real(axis.norm()) + " is not 1");
    }

    std::size_t line_;
    std::vector<Token> tokens_;
};

ParseErrorKind to_parse_kind(ModelErrorKind kind) {
    switch (kind) {
        case ModelErrorKind::DuplicateId: return ParseErrorKind::DuplicateId;
        case ModelErrorKind::NoRoot: return ParseErrorKind::NoRoot;
        case ModelErrorKind::MultipleRoots: return ParseErrorKind::MultipleRoots;
        case ModelErrorKind::UnknownParent: return ParseErrorKind::UnknownParent;
        case ModelErrorKind::ParentCycle: return ParseErrorKind::ParentCycle;
        case ModelErrorKind::NonUnitAxis: return ParseErrorKind::NonUnitAxis;
        case ModelErrorKind::AsymmetricInertia: return ParseErrorKind::AsymmetricInertia;
        case ModelErrorKind::InvalidField: return ParseErrorKind::Syntax;
    }
    return ParseErrorKind::Syntax;
}

std::string axis_text(const Vec3d& axis) {
    if (axis == Vec3d::UnitX()) return "x";
    if (axis == Vec3d::UnitY()) return "y";
    if (axis == Vec3d::UnitZ()) return "z";
    return format_real(axis.x()) + "," + format_real(axis.y()) + "," + format_real(axis.z());
}

std::string reals_text(const double* data, std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) out += ',';
        out += format_real(data[i]);
    }
    return out;
}

}  // namespace

RobotModel parse(std::string_view text) {
    std::vector<LinkRecord> records;
    std::vector<Declaration> decls;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (!tokens.empty()) {
            Declaration decl;
            records.push_back(LineParser(line_no, std::move(tokens)).parse(decl));
            decls.push_back(decl);
        }
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }

    try {
        return build_model(std::move(records));
    } catch (const ModelError& e) {
        const ParseErrorKind kind = to_parse_kind(e.kind());
        if (!e.record_index()) {
            const std::size_t line = decls.empty() ? 1 : decls.front().line;
            throw ParseError(kind, line, 1, e.what());
        }
        const Declaration& d = decls.at(*e.record_index());
        const std::size_t column = kind == ParseErrorKind::DuplicateId ? d.id_column : d.parent_column;
        throw ParseError(kind, d.line, column == 0 ? 1 : column, e.what());
    }
}

RobotModel parse_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open robot description '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string serialize(const RobotModel& model) {
    std::string out;
    for (const LinkRecord& r : model.links()) {
        out += "link " + std::to_string(r.self_id);
        out += " name=" + r.name;
        out += " parent=" + (r.parent_id ? std::to_string(*r.parent_id) : std::string("none"));
        out += " axis=" + axis_text(r.joint_axis);
        out += " offset=" + reals_text(r.offset.data(), 3);
        if (r.mass != 0.0) out += " mass=" + format_real(r.mass);
        if ((r.com.array() != 0.0).any()) out += " com=" + reals_text(r.com.data(), 3);
        if ((r.inertia.array() != 0.0).any()) {
            const Eigen::Matrix<double, 3, 3, Eigen::RowMajor> row_major = r.inertia;
            out += " inertia=" + reals_text(row_major.data(), 9);
        }
        out += '\n';
    }
    return out;
}

}  // namespace rkin::desc
