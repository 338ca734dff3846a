#ifndef PSUMS_ERRORS_HPP
#define PSUMS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace psums {

// Raised when a mathematical identity the library relies on fails to hold.
// Reaching this is a bug, never a usage error; the CLI maps it to exit 2.
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

// Raised when a closed-form expression degenerates (zero denominator) for
// inputs where it is not expected to.
struct degenerate_expression : std::domain_error {
    explicit degenerate_expression(const std::string& what) : std::domain_error(what) {}
};

}  // namespace psums

#endif
