#ifndef SEXTIC_ERRORS_HPP
#define SEXTIC_ERRORS_HPP

#include <stdexcept>

namespace sextic {

// The inverse coupling map divides by C and is undefined at C = 0.
class singular_inverse_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when delta <= 0: the harmonic minorant construction has no
// positive quadratic coupling and the lower-bound machinery does not apply.
class no_minorant_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Requested discretization exceeds the configured memory cap.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sextic

#endif
