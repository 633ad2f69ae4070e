#pragma once

#include <stdexcept>
#include <string>

namespace jcm {

// Exception hierarchy. Each leaf maps onto one jcm_status code of the C API
// (and therefore onto one CLI exit code).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad parameters, malformed configuration or violated preconditions.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A quantity that cannot be evaluated for the given state (e.g. g2 with no
/// photons) or a density outside its physical range.
class NumericalError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace jcm
