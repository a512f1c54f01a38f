#pragma once

#include <stdexcept>
#include <string>

namespace coslab {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition on user-supplied data was violated (bad argument, bad file).
struct invalid_input : error {
    using error::error;
};

/// A linear solve hit a pivot below the singularity threshold.
struct singular_matrix : error {
    using error::error;
};

/// An iterative computation failed to converge within its iteration budget.
struct convergence_error : error {
    using error::error;
};

/// cosh(lambda*s) falls inside the numerical spectrum of C(s); the resolvent
/// construction through S(lambda,s) is not available there.
struct not_in_resolvent_set : error {
    using error::error;
};

/// A hypothesis required by a verification routine fails on the given input
/// (for example the small-time distance bound of the region machinery).
struct precondition_violation : error {
    using error::error;
};

/// The parabola with omega = 0 collapses to the negative real axis and has no
/// interior; callers must special-case it.
struct degenerate_region : error {
    using error::error;
};

/// An evaluation argument is out of the representable range for the configured
/// scaling controls (series scaling would need more depth than allowed, or the
/// result overflows double precision).
struct range_overflow : error {
    using error::error;
};

}  // namespace coslab
