#pragma once

#include <stdexcept>
#include <string>

namespace pointed {

// Each error carries a short machine-readable code used by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Invalid input data: bad index sets, out-of-range parameters, mismatched modules.
class ValidationError : public Error {
public:
    ValidationError(std::string code, const std::string& what) : Error(std::move(code), what) {}
    explicit ValidationError(const std::string& what) : Error("validation", what) {}
};

/// A configured resource budget (tensor-power size, sweep size) would be exceeded.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error("budget_exceeded", what) {}
};

/// An operation needs a degree beyond the cap a truncated model was built with.
class CapError : public Error {
public:
    explicit CapError(const std::string& what) : Error("cap_exceeded", what) {}
};

/// An invariant that must hold by construction failed; indicates a bug or invalid realization.
class StructuralError : public Error {
public:
    explicit StructuralError(const std::string& what) : Error("structural", what) {}
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division_by_zero", "division by zero") {}
};

}  // namespace pointed
