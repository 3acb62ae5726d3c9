#pragma once

#include <stdexcept>
#include <string>

namespace pxp {

// Error categories map to CLI exit codes: config=2, capacity=3, numerical=4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct CapacityError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

} // namespace pxp
