#pragma once

#include "crkit/matrix.hpp"
#include "crkit/subspace.hpp"

#include <cstddef>
#include <vector>

namespace crkit::liealg {

using exact::ExactMatrix;
using exact::Scalar;
using exact::Subspace;

/// Subalgebra of gl_n over Q(i). Elements are n x n matrices, stored
/// row-major-flattened as vectors of length n^2 in a canonical Subspace.
class LieSubalgebra {
public:
    /// Wraps a span already known (or required) to be bracket-closed; throws
    /// invalid_input otherwise.
    static LieSubalgebra from_span(std::size_t ambient_n, Subspace space);
    static LieSubalgebra from_matrices(std::size_t ambient_n,
                                       const std::vector<ExactMatrix>& gens);
    static LieSubalgebra zero(std::size_t ambient_n);

    std::size_t ambient_n() const { return n_; }
    std::size_t dim() const { return space_.dim(); }
    const Subspace& space() const { return space_; }
    bool verified_closed() const { return true; }

    ExactMatrix basis_matrix(std::size_t r) const;
    std::vector<ExactMatrix> basis_matrices() const;

    bool contains(const ExactMatrix& x) const;
    bool contains(const LieSubalgebra& other) const;

    /// Matrix of ad(z)|_this in the canonical basis: column j holds the
    /// coordinates of [z, X_j]. Requires [z, this] to land back in this
    /// (throws internal_inconsistency otherwise — callers pass stabilizing z).
    ExactMatrix ad_matrix(const ExactMatrix& z) const;

    friend bool operator==(const LieSubalgebra& a, const LieSubalgebra& b) {
        return a.n_ == b.n_ && a.space_ == b.space_;
    }
    friend bool operator!=(const LieSubalgebra& a, const LieSubalgebra& b) {
        return !(a == b);
    }

private:
    LieSubalgebra(std::size_t n, Subspace s) : n_(n), space_(std::move(s)) {}
    std::size_t n_ = 0;
    Subspace space_;
};

bool is_bracket_closed(std::size_t ambient_n, const Subspace& s);

/// Smallest bracket-closed subspace containing the seed.
LieSubalgebra close_under_bracket(const Subspace& seed, std::size_t ambient_n);

/// Span of [a, b] over all basis pairs, inside ambient n^2 coordinates.
Subspace bracket_span(std::size_t ambient_n, const Subspace& a, const Subspace& b);

/// Gram matrix B(X_i, X_j) = tr(ad X_i . ad X_j), ad taken inside g.
ExactMatrix killing_form(const LieSubalgebra& g);

bool is_solvable(const LieSubalgebra& g);
/// Lower central series reaches zero.
bool is_nilpotent_algebra(const LieSubalgebra& g);
bool is_matrix_nilpotent(const ExactMatrix& x);

struct JCPair {
    ExactMatrix semisimple_part;
    ExactMatrix nilpotent_part;
};

/// Additive Jordan decomposition X = X_s + X_n over Q(i): X_s a polynomial in
/// X with squarefree minimal polynomial, X_n nilpotent, [X_s, X_n] = 0.
/// Newton iteration against the squarefree part of the characteristic
/// polynomial; no factorization needed.
JCPair jordan_chevalley(const ExactMatrix& x);

/// Maximal solvable ideal, as the trace-form orthogonal of [v,v] in v
/// (Cartan's criterion), then verified to be a solvable ideal.
LieSubalgebra radical(const LieSubalgebra& v);

/// {X in radical(v) : X nilpotent in the ambient matrix representation} —
/// computed via the trace radical of the associative algebra generated by
/// radical(v), then verified to be a nilpotent ideal of v consisting of
/// nilpotent matrices.
LieSubalgebra nilradical(const LieSubalgebra& v);

/// True iff v = reductive_candidate (+) nilradical(v) as a direct sum and the
/// candidate itself has zero nilradical. Throws invalid_input unless the
/// candidate is a subalgebra of v.
bool splittable_decomposition(const LieSubalgebra& v,
                              const LieSubalgebra& reductive_candidate);

/// {Z in g : [Z, w] subset of w}; bracket-closed by the Jacobi identity.
/// Requires w to be a subspace of g.
LieSubalgebra normalizer_of_subspace(const LieSubalgebra& g, const Subspace& w);

/// {Z in g : [Z, x] = 0}.
LieSubalgebra centralizer_in(const LieSubalgebra& g, const ExactMatrix& x);

/// Killing form of the real Lie algebra spanned (over the rationals) by the
/// given matrices: negative semidefinite iff no positive pivot. The span must
/// be bracket-closed over the reals; throws invalid_input otherwise.
bool is_killing_negative_semidefinite(const std::vector<ExactMatrix>& real_basis);

} // namespace crkit::liealg
