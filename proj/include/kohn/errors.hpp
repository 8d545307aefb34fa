#pragma once

#include <stdexcept>
#include <string>

namespace kohn {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mismatched variable counts, indices out of range, malformed input,
// non-finite multiplicity where a finite one is required.
struct domain_error : error {
    using error::error;
};

// A configured resource cap (degree, pair queue, retries) was exceeded.
struct resource_error : error {
    using error::error;
};

// A certificate, trace node or certified bound failed re-verification.
struct verification_error : error {
    using error::error;
};

// Internal signal: a generic choice turned out degenerate; the caller
// retries with a fresh draw.  Never escapes the retry loops.
struct genericity_error : error {
    using error::error;
};

}  // namespace kohn
