#pragma once

#include <stdexcept>
#include <string>

namespace deltakit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the ground set, or a precondition on inputs fails.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A set system with an empty feasible family was given where a proper one is required.
class ImproperSetSystem : public Error {
public:
    ImproperSetSystem() : Error("improper set system: the feasible family is empty") {}
};

/// Two ground sets that must be disjoint share a label.
class LabelCollision : public Error {
public:
    explicit LabelCollision(const std::string& label)
        : Error("label collision in direct sum: '" + label + "'") {}
};

/// Brute-force routine refused an input above its size limit.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

/// Malformed file or command-line input. `field` names the offending item.
class ParseError : public Error {
public:
    ParseError(std::string field, const std::string& what)
        : Error("parse error in '" + field + "': " + what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace deltakit
