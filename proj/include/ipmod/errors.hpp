#pragma once

#include <stdexcept>
#include <string>

namespace ipmod {

/// Malformed or inconsistent input data (manifests, triangle files, certificate specs).
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A required hypothesis is missing, so the requested conclusion is not emitted.
class hypothesis_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace ipmod
