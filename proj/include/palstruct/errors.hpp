#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace palstruct {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// index or center outside the valid range of a container
struct bounds_error : error {
    using error::error;
};

// input violates a documented precondition (parity, range, shape, ...)
struct validation_error : error {
    using error::error;
};

// serialized bytes or a bit stream that cannot be decoded
struct corrupt_stream_error : error {
    using error::error;
};

// density constraint violated by a pair of entries
struct density_error : error {
    size_t first_index;
    size_t second_index;
    density_error(const std::string& msg, size_t i, size_t j)
        : error(msg), first_index(i), second_index(j) {}
};

// two entries fought over the same slot during a leveled-array build
struct conflict_error : error {
    using error::error;
};

// an operation was asked about a position outside its contract
// (e.g. run-descriptor radius at a non-centric center)
struct contract_error : error {
    using error::error;
};

// a length array that no string can produce
struct invalid_array_error : error {
    using error::error;
};

}  // namespace palstruct
