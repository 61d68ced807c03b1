#pragma once

#include <stdexcept>
#include <string>

namespace cmlax {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a polynomial is not exactly divisible by a linear form.
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& what) : Error(what) {}
};

/// Thrown when a commutator fails to be a scalar multiple of the expected operator.
struct NotProportional : Error {
    explicit NotProportional(const std::string& what) : Error(what) {}
};

/// Thrown when a polynomial claimed to be W-invariant is not.
struct InputNotInvariant : Error {
    explicit InputNotInvariant(const std::string& what) : Error(what) {}
};

/// Bad arguments to a builder or operation (n < 2, unsupported type, ...).
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// Group enumeration or order computation exceeded its safety cap.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

/// Numerical integration hit a near-collision or non-finite value.
struct SimulationFault : Error {
    explicit SimulationFault(const std::string& what) : Error(what) {}
};

} // namespace cmlax
