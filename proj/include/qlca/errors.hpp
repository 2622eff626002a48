#pragma once

#include <stdexcept>
#include <string>

namespace qlca {

/// A dataset, configuration, or input file failed structural validation.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric computation cannot proceed (singular or ill-conditioned system,
/// index mismatch, non-finite values).
class ComputeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qlca
