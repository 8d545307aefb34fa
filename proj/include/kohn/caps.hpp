#pragma once

#include <cstdint>

namespace kohn {

// Resource limits for the reduction kernels.  Every potentially
// long-running loop checks one of these and fails loudly with a
// resource_error instead of running unbounded.
struct Caps {
    unsigned degree_cap = 64;        // max total degree inside reductions
    std::uint64_t pair_cap = 1000000; // max s-pairs processed per completion
    unsigned mult_trials = 3;        // independent draws per d-multiplicity
    unsigned max_retries = 32;       // generic-choice retry budget
    std::uint64_t digit_cap = 1000000; // max decimal digits materialized in bounds
};

}  // namespace kohn
