#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace rkin {

/// Numeric precondition violated, e.g. a NaN input or a non-unit axis.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A general 3x3 matrix was handed to an operator that needs a skew-symmetric one.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Unknown link id.
class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Caller-supplied joint data does not match the model.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class ModelErrorKind {
    DuplicateId,
    NoRoot,
    MultipleRoots,
    UnknownParent,
    ParentCycle,
    NonUnitAxis,
    AsymmetricInertia,
    InvalidField,
};

const char* to_string(ModelErrorKind kind);

/// Structural violation found while building a RobotModel. `record_index`
/// points at the offending entry of the input record list when one exists.
class ModelError : public std::runtime_error {
public:
    ModelError(ModelErrorKind kind, std::string message,
               std::optional<std::size_t> record_index = std::nullopt)
        : std::runtime_error(std::move(message)), kind_(kind), record_index_(record_index) {}

    ModelErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> record_index() const noexcept { return record_index_; }

private:
    ModelErrorKind kind_;
    std::optional<std::size_t> record_index_;
};

enum class ParseErrorKind {
    Syntax,
    DuplicateId,
    UnknownParent,
    NonUnitAxis,
    AsymmetricInertia,
    NoRoot,
    MultipleRoots,
    ParentCycle,
};

const char* to_string(ParseErrorKind kind);

/// Diagnostic from the robot description reader. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace rkin
