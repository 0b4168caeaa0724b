#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace goi {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A union was requested whose operands overlap on a residue class.
// Carries a witness class "res (mod 2^depth)" on which both sides are defined.
struct not_disjoint_error : error {
    not_disjoint_error(const std::string &what_part, std::uint64_t depth, std::uint64_t res)
        : error(what_part + " overlap on class " + std::to_string(res) + " (mod 2^" +
                std::to_string(depth) + ")"),
          depth(depth), res(res) {}
    std::uint64_t depth;
    std::uint64_t res;
};

// A piece would need domain/image depth beyond the configured limit,
// or a value computation overflowed 64 bits.
struct depth_exceeded_error : error {
    using error::error;
};

// The iterated union in a trace / execution-formula entry did not
// stabilise within the iteration bound.
struct trace_divergence_error : error {
    explicit trace_divergence_error(std::uint64_t iterations)
        : error("trace did not stabilise after " + std::to_string(iterations) + " iterations"),
          iterations(iterations) {}
    std::uint64_t iterations;
};

struct type_mismatch_error : error {
    using error::error;
};

struct unit_has_no_code_error : error {
    unit_has_no_code_error() : error("the unit object has no code isomorphism") {}
};

struct parse_error : error {
    parse_error(std::size_t pos, const std::string &expected)
        : error("parse error at position " + std::to_string(pos) + ": expected " + expected),
          pos(pos), expected(expected) {}
    std::size_t pos;
    std::string expected;
};

} // namespace goi
