#pragma once

#include <stdexcept>
#include <string>

namespace mskl {

// Raised when an input is structurally valid but outside the domain of the
// requested operation (e.g. a permutation that is not above another in the
// order, a variety that is not toric, a minor size beyond the safety limit).
// The CLI maps this to a dedicated exit code, distinct from usage errors.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mskl
