#pragma once

#include <stdexcept>
#include <string>

#include "cprime/verdict.hpp"

namespace cprime {

/// Malformed input: ragged tables, indices out of range, zero == one.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed tables that fail an algebraic axiom.
class ValidationError : public std::runtime_error {
public:
    ValidationError(const std::string& what, Witness witness)
        : std::runtime_error(what), witness_(std::move(witness))
    {
    }
    [[nodiscard]] const Witness& witness() const noexcept { return witness_; }

private:
    Witness witness_;
};

/// A configured size bound (ring size, module size, hom count) was exceeded.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The operation's hypothesis does not hold.  Not a defect.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The hypothesis of a checked statement holds but its conclusion fails.
class TheoremViolation : public std::runtime_error {
public:
    TheoremViolation(std::string check, const std::string& what, Witness witness = {})
        : std::runtime_error(check + ": " + what), check_(std::move(check)), witness_(std::move(witness))
    {
    }
    [[nodiscard]] const std::string& check() const noexcept { return check_; }
    [[nodiscard]] const Witness& witness() const noexcept { return witness_; }

private:
    std::string check_;
    Witness witness_;
};

}  // namespace cprime
