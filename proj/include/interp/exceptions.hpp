#pragma once

#include <stdexcept>
#include <string>

namespace interp {

/// Thrown when input data violates a method's stated precondition
/// (e.g. values below the floor requested for a positivity-preserving build).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace interp
