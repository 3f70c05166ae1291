#pragma once

#include <stdexcept>
#include <string>

namespace ela {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Tensor order outside the supported range (order 0..7 for the symmetric algebra).
struct UnsupportedOrderError : Error {
    using Error::Error;
};

/// Contraction index count (or operand order) incompatible with the operands.
struct ArityError : Error {
    using Error::Error;
};

/// Malformed input: wrong shape, asymmetric matrix, bad file contents.
struct FormatError : Error {
    using Error::Error;
};

/// Input outside an operation's mathematical domain (e.g. a non-harmonic
/// tensor passed where a harmonic one is required).
struct DomainError : Error {
    using Error::Error;
};

/// A decomposition whose parts violate the tracelessness constraints.
struct InvalidDecompositionError : Error {
    using Error::Error;
};

/// The six candidate tensors do not form a basis of Sym^2.
struct SingularBasisError : Error {
    using Error::Error;
};

}  // namespace ela
