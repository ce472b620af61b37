#ifndef GKZ_ERRORS_HPP
#define GKZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gkz {

/// Input polynomial too degenerate to solve (zero, or leading coefficient
/// below the conditioning tolerance).
struct IllConditionedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Degree exceeds a functional's truncation order.
struct TruncationError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A hypothesis of the underlying theorem fails numerically
/// (e.g. psi vanishing at a grid point, |phi| escaping the radius).
struct HypothesisViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration guard exceeded.
struct SizeError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace gkz

#endif
