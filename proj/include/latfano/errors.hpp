#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latfano {

/// Matrix shape mismatch (non-square input to det, length mismatch, ...).
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input point set does not affinely span the ambient space.
struct DimensionError : std::invalid_argument {
    std::size_t ambient_rank;
    std::size_t affine_rank;
    DimensionError(std::size_t ambient, std::size_t affine)
        : std::invalid_argument("point set spans rank " + std::to_string(affine) +
                                " inside ambient rank " + std::to_string(ambient)),
          ambient_rank(ambient),
          affine_rank(affine) {}
};

/// Invalid argument to an operation (bad dilation factor, unknown claim, ...).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed polytope text input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace latfano
