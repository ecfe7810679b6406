#pragma once

#include <stdexcept>
#include <string>

namespace cayfact {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates an operation's stated precondition.
struct precondition_error : error {
    using error::error;
};

// Instance exceeds a size guard; the operation refuses rather than degrade.
struct guard_error : error {
    using error::error;
};

// A construction could not produce a verified result.
struct construction_error : error {
    using error::error;
};

// A document (group spec or certificate) does not match the schema.
struct schema_error : error {
    using error::error;
};

}  // namespace cayfact
