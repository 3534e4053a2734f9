#pragma once

#include <stdexcept>
#include <string>

namespace equidissect {

// Malformed textual/JSON input (bad rational literal, bad schema, ...).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A domain precondition was violated by otherwise well-formed input.
struct PreconditionError : std::runtime_error {
    PreconditionError(std::string kind_, const std::string& what_)
        : std::runtime_error(what_), kind(std::move(kind_)) {}
    std::string kind;
};

inline PreconditionError not_lattice_error(const std::string& what) {
    return PreconditionError("NotLattice", what);
}
inline PreconditionError not_parallelogram_error(const std::string& what) {
    return PreconditionError("NotParallelogram", what);
}
inline PreconditionError zero_coordinate_error(const std::string& what) {
    return PreconditionError("ZeroCoordinate", what);
}
inline PreconditionError not_simple_error(const std::string& what) {
    return PreconditionError("NotSimple", what);
}

}  // namespace equidissect
