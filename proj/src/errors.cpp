#include "rkin/errors.hpp"

namespace rkin {

const char* to_string(ModelErrorKind kind) {
    switch (kind) {
        case ModelErrorKind::DuplicateId: return "duplicate id";
        case ModelErrorKind::NoRoot: return "no root link";
        case ModelErrorKind::MultipleRoots: return "multiple root links";
        case ModelErrorKind::UnknownParent: return "unknown parent";
        case ModelErrorKind::ParentCycle: return "parent cycle";
        case ModelErrorKind::NonUnitAxis: return "non-unit axis";
        case ModelErrorKind::AsymmetricInertia: return "asymmetric inertia";
        case ModelErrorKind::InvalidField: return "invalid field";
    }
    return "model error";
}

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::Syntax: return "syntax error";
        case ParseErrorKind::DuplicateId: return "duplicate id";
        case ParseErrorKind::UnknownParent: return "unknown parent";
        case ParseErrorKind::NonUnitAxis: return "non-unit axis";
        case ParseErrorKind::AsymmetricInertia: return "asymmetric inertia";
        case ParseErrorKind::NoRoot: return "no root link";
        case ParseErrorKind::MultipleRoots: return "multiple root links";
        case ParseErrorKind::ParentCycle: return "parent cycle";
    }
    return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         to_string(kind) + ": " + detail),
      kind_(kind),
      line_(line),
      column_(column) {}

}  // namespace rkin
