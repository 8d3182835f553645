#pragma once

#include "crkit/matrix.hpp"

#include <cstddef>

namespace crkit::exact {

/// Inertia of a Hermitian form: counts of positive, negative and zero
/// eigenvalues. plus + minus + zero equals the size of the form's space.
struct Signature {
    std::size_t plus = 0;
    std::size_t minus = 0;
    std::size_t zero = 0;

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.plus == b.plus && a.minus == b.minus && a.zero == b.zero;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
};

bool is_hermitian(const ExactMatrix& g);

/// Exact inertia of a Hermitian matrix over Q(i), by rational congruence
/// (LDL*-style pivoting; off-diagonal pivots handled by a preliminary
/// congruence that creates a nonzero diagonal entry). Sylvester's law makes
/// the result basis-independent. Throws invalid_input if g is not Hermitian.
Signature hermitian_signature(const ExactMatrix& g);

} // namespace crkit::exact
