#pragma once

#include "crkit/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace crkit::exact {

/// Reduced row echelon form. `mat` has the same shape as the input with the
/// nonzero rows first; `pivot_cols[r]` is the pivot column of row r.
struct RrefResult {
    ExactMatrix mat;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

RrefResult rref(ExactMatrix a);

/// Canonical basis of the right kernel {x : A x = 0}: one vector per free
/// column f, with entry 1 at f and -R[r][f] at each pivot column.
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& a);

/// Linear subspace of Q(i)^n, stored as the RREF of any spanning set. The
/// representation is unique, so equality of subspaces is structural equality.
class Subspace {
public:
    /// The zero subspace of Q(i)^n.
    explicit Subspace(std::size_t ambient_dim);

    static Subspace span(std::size_t ambient_dim,
                         const std::vector<std::vector<Scalar>>& vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient_dim() const { return ambient_; }
    bool is_zero() const { return dim() == 0; }

    /// Canonical (RREF) basis rows.
    const ExactMatrix& basis() const { return basis_; }
    std::vector<Scalar> basis_row(std::size_t r) const;
    const std::vector<std::size_t>& pivot_cols() const { return pivots_; }

    /// Residue of v after eliminating against the basis; zero iff v is a member.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v in the canonical basis, or nullopt if v is outside.
    /// For an RREF basis these are just the entries of v at the pivot columns.
    std::optional<std::vector<Scalar>> coordinates(const std::vector<Scalar>& v) const;

    Subspace intersect(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;

    /// Entrywise complex conjugate of the subspace.
    Subspace conj() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    /// {x in *this : form(x, u) = 0 for all u in constraints}. The form is any
    /// callable mapping two coordinate vectors to a Scalar, linear in the
    /// first argument.
    template <typename Form>
    Subspace orthogonal_complement_within(const Subspace& constraints, Form&& form) const {
        ExactMatrix sys(constraints.dim(), dim());
        for (std::size_t j = 0; j < constraints.dim(); ++j) {
            const auto u = constraints.basis_row(j);
            for (std::size_t k = 0; k < dim(); ++k)
                sys(j, k) = form(basis_row(k), u);
        }
        std::vector<std::vector<Scalar>> out;
        for (const auto& c : kernel_basis(sys)) {
            std::vector<Scalar> x(ambient_);
            for (std::size_t k = 0; k < dim(); ++k)
                for (std::size_t t = 0; t < ambient_; ++t)
                    x[t] += c[k] * basis_(k, t);
            out.push_back(std::move(x));
        }
        return span(ambient_, out);
    }

private:
    std::size_t ambient_ = 0;
    ExactMatrix basis_;               // rank x ambient, in RREF
    std::vector<std::size_t> pivots_; // one pivot column per basis row
};

/// [Re(v) | Im(v)]: Q(i)^m coordinates flattened to 2m real coordinates.
std::vector<Scalar> realify_vector(const std::vector<Scalar>& v);
/// Recovers the complex vector from realify_vector output.
std::vector<Scalar> unrealify_vector(const std::vector<Scalar>& w);

/// The complex span of s, viewed as a real subspace of R^{2m}: each complex
/// basis vector v contributes realify(v) and realify(i*v).
Subspace realify_span(const Subspace& s);

} // namespace crkit::exact
