#pragma once

#include <stdexcept>

namespace coxstar {

// Bad type strings, words, or subsets coming from user input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands built over different diagrams.
struct DiagramMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// recognize_w0J received an element that is no parabolic longest element.
// Reached from star_sets this signals a closure violation.
struct NotALongestElement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The inductive evaluation contradicted itself; a correctness alarm,
// never a user error.
struct InternalMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

// The brute-force maximum/minimum over a product set is not unique.
struct NoUniqueExtremum : std::logic_error {
    using std::logic_error::logic_error;
};

// Group enumeration would exceed the caller's size guard.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Table generation requested for a diagram above the rank bound.
struct RankBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace coxstar
