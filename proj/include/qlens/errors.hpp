#pragma once

#include <stdexcept>
#include <string>

namespace qlens {

struct DuplicateVertex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownEndpoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroMultiplicity : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownVertex : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnlabelledEdge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PuncturedGraphCyclic : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SizeLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct HypothesisNotSatisfied : std::runtime_error {
    HypothesisNotSatisfied(const std::string& msg, int failing_index)
        : std::runtime_error(msg), failing_index(failing_index) {}
    int failing_index;
};
struct UnmatchedCase : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qlens
