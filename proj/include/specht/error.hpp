#pragma once

#include <stdexcept>
#include <string>

namespace specht {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    using error::error;
};

// |mu| != |lambda| where equal sizes are required
struct unequal_size_error : error {
    using error::error;
};

struct too_few_beads_error : error {
    using error::error;
};

struct bad_runner_error : error {
    using error::error;
};

struct bad_slot_error : error {
    using error::error;
};

struct precondition_error : error {
    using error::error;
};

struct not_regular_error : error {
    using error::error;
};

struct missing_row_error : error {
    using error::error;
};

struct sum_mismatch_error : error {
    using error::error;
};

struct weight_cap_error : error {
    using error::error;
};

// an interval became empty: bad assumption or internal bug
struct inconsistent_error : error {
    using error::error;
};

struct not_minimal_core_error : error {
    using error::error;
};

struct bad_spec_error : error {
    using error::error;
};

struct case1_error : error {
    using error::error;
};

} // namespace specht
