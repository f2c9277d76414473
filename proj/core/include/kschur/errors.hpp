#ifndef KSCHUR_ERRORS_HPP
#define KSCHUR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kschur {

// Domain error hierarchy.  Everything derives from error so callers (and the
// CLI exit-code mapping) can catch at the granularity they need.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct degree_mismatch : error {
    using error::error;
};

struct empty_partition : error {
    using error::error;
};

struct not_k_bounded : error {
    using error::error;
};

struct invalid_input : error {
    using error::error;
};

// Exact division failed: the rational value is not a polynomial.  Signals a
// computation bug upstream, never expected user input.
struct not_polynomial : error {
    using error::error;
};

// A triangular solve left a nonzero residual: the input does not lie in the
// subspace spanned by the requested basis.
struct not_in_subspace : error {
    using error::error;
};

struct unsupported_ring : error {
    using error::error;
};

struct unsupported_conversion : error {
    using error::error;
};

// A proven theorem failed on concrete data.  Always an implementation bug.
struct theorem_violation : error {
    using error::error;
};

} // namespace kschur

#endif
