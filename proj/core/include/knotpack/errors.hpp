#ifndef KNOTPACK_ERRORS_HPP
#define KNOTPACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace knotpack {

// Bad inputs: malformed files, invariant violations, out-of-range parameters.
// The CLI maps these to exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failures: solver non-convergence, violated exact identities.
// The CLI maps these to exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace knotpack

#endif  // KNOTPACK_ERRORS_HPP
