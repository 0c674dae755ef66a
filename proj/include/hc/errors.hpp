#pragma once

#include <stdexcept>
#include <string>

namespace hc {

/// Bad input: malformed file, failed precondition, invalid object. CLI exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A property that must hold did not. CLI exit code 2.
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hc
