#include "crkit/liealg.hpp"

#include "crkit/errors.hpp"
#include "crkit/forms.hpp"
#include "crkit/poly.hpp"

#include <utility>

namespace crkit::liealg {

using exact::kernel_basis;
using exact::Poly;

namespace {

std::vector<ExactMatrix> unflatten_basis(std::size_t n, const Subspace& s) {
    std::vector<ExactMatrix> out;
    out.reserve(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r)
        out.push_back(ExactMatrix::from_flat(n, n, s.basis_row(r)));
    return out;
}

} // namespace

LieSubalgebra LieSubalgebra::from_span(std::size_t ambient_n, Subspace space) {
    if (space.ambient_dim() != ambient_n * ambient_n)
        throw invalid_input("LieSubalgebra: ambient dimension is not n^2");
    if (!is_bracket_closed(ambient_n, space))
        throw invalid_input("LieSubalgebra: span is not closed under the bracket");
    return {ambient_n, std::move(space)};
}

LieSubalgebra LieSubalgebra::from_matrices(std::size_t ambient_n,
                                           const std::vector<ExactMatrix>& gens) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(gens.size());
    for (const auto& g : gens) {
        if (g.rows() != ambient_n || g.cols() != ambient_n)
            throw invalid_input("LieSubalgebra: generator has wrong size");
        rows.push_back(g.flatten());
    }
    return from_span(ambient_n, Subspace::span(ambient_n * ambient_n, rows));
}

LieSubalgebra LieSubalgebra::zero(std::size_t ambient_n) {
    return {ambient_n, Subspace(ambient_n * ambient_n)};
}

ExactMatrix LieSubalgebra::basis_matrix(std::size_t r) const {
    return ExactMatrix::from_flat(n_, n_, space_.basis_row(r));
}

std::vector<ExactMatrix> LieSubalgebra::basis_matrices() const {
    return unflatten_basis(n_, space_);
}

bool LieSubalgebra::contains(const ExactMatrix& x) const {
    return x.rows() == n_ && x.cols() == n_ && space_.contains(x.flatten());
}

bool LieSubalgebra::contains(const LieSubalgebra& other) const {
    return n_ == other.n_ && space_.contains(other.space_);
}

ExactMatrix LieSubalgebra::ad_matrix(const ExactMatrix& z) const {
    ExactMatrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        const auto coords = space_.coordinates(bracket(z, basis_matrix(j)).flatten());
        if (!coords)
            throw internal_inconsistency("ad_matrix: bracket leaves the subalgebra");
        for (std::size_t i = 0; i < dim(); ++i) m(i, j) = (*coords)[i];
    }
    return m;
}

bool is_bracket_closed(std::size_t ambient_n, const Subspace& s) {
    const auto mats = unflatten_basis(ambient_n, s);
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j)
            if (!s.contains(bracket(mats[i], mats[j]).flatten())) return false;
    return true;
}

LieSubalgebra close_under_bracket(const Subspace& seed, std::size_t ambient_n) {
    if (seed.ambient_dim() != ambient_n * ambient_n)
        throw invalid_input("close_under_bracket: ambient dimension is not n^2");
    Subspace cur = seed;
    for (;;) {
        const auto mats = unflatten_basis(ambient_n, cur);
        std::vector<std::vector<Scalar>> fresh;
        for (std::size_t i = 0; i < mats.size(); ++i)
            for (std::size_t j = i + 1; j < mats.size(); ++j) {
                auto flat = bracket(mats[i], mats[j]).flatten();
                if (!cur.contains(flat)) fresh.push_back(std::move(flat));
            }
        if (fresh.empty()) break;
        for (std::size_t r = 0; r < cur.dim(); ++r) fresh.push_back(cur.basis_row(r));
        cur = Subspace::span(cur.ambient_dim(), fresh);
    }
    return LieSubalgebra::from_span(ambient_n, cur);
}

Subspace bracket_span(std::size_t ambient_n, const Subspace& a, const Subspace& b) {
    const auto am = unflatten_basis(ambient_n, a);
    const auto bm = unflatten_basis(ambient_n, b);
    std::vector<std::vector<Scalar>> rows;
    for (const auto& x : am)
        for (const auto& y : bm) rows.push_back(bracket(x, y).flatten());
    return Subspace::span(ambient_n * ambient_n, rows);
}

ExactMatrix killing_form(const LieSubalgebra& g) {
    const std::size_t d = g.dim();
    std::vector<ExactMatrix> ads;
    ads.reserve(d);
    for (std::size_t i = 0; i < d; ++i) ads.push_back(g.ad_matrix(g.basis_matrix(i)));
    ExactMatrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            Scalar t;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s < d; ++s) t += ads[i](r, s) * ads[j](s, r);
            gram(i, j) = t;
            gram(j, i) = t;
        }
    return gram;
}

bool is_solvable(const LieSubalgebra& g) {
    Subspace d = g.space();
    for (std::size_t k = 0; k <= g.dim(); ++k) {
        if (d.dim() == 0) return true;
        Subspace next = bracket_span(g.ambient_n(), d, d);
        if (next.dim() == d.dim()) return false;
        d = std::move(next);
    }
    return d.dim() == 0;
}

bool is_nilpotent_algebra(const LieSubalgebra& g) {
    Subspace c = g.space();
    for (std::size_t k = 0; k <= g.dim(); ++k) {
        if (c.dim() == 0) return true;
        Subspace next = bracket_span(g.ambient_n(), g.space(), c);
        if (next.dim() == c.dim()) return false;
        c = std::move(next);
    }
    return c.dim() == 0;
}

bool is_matrix_nilpotent(const ExactMatrix& x) {
    if (!x.is_square()) throw invalid_input("nilpotency test on non-square matrix");
    ExactMatrix p = x;
    std::size_t e = 1;
    while (e < x.rows()) {
        if (p.is_zero()) return true;
        p = p * p;
        e *= 2;
    }
    return p.is_zero();
}

JCPair jordan_chevalley(const ExactMatrix& x) {
    if (!x.is_square()) throw invalid_input("jordan_chevalley: non-square matrix");
    const std::size_t n = x.rows();
    if (n == 0) return {x, x};

    const Poly f = squarefree_part(exact::char_poly(x));
    const auto eg = poly_extended_gcd(f.derivative(), f);
    if (eg.g.degree() != 0)
        throw internal_inconsistency("jordan_chevalley: squarefree part not coprime with its derivative");
    // u*f' = 1 mod f, after normalizing the Bezout identity by the constant gcd.
    const Poly u = (Scalar(1) / eg.g.coeff(0)) * eg.u;

    ExactMatrix xs = x;
    bool done = false;
    for (int iter = 0; iter < 16; ++iter) {
        const ExactMatrix fx = f(xs);
        if (fx.is_zero()) { done = true; break; }
        xs = xs - fx * u(xs);
    }
    if (!done)
        throw internal_inconsistency("jordan_chevalley: Newton iteration did not terminate");

    const ExactMatrix xn = x - xs;
    if (!bracket(xs, xn).is_zero() || !is_matrix_nilpotent(xn) ||
        !is_squarefree(exact::min_poly(xs)))
        throw internal_inconsistency("jordan_chevalley: decomposition failed verification");
    return {xs, xn};
}

namespace {

// {X in inside : tr(X * Y) = 0 for every Y spanning constraints}; both are
// flattened-matrix subspaces of the same ambient.
Subspace trace_orthogonal_within(std::size_t n, const Subspace& inside,
                                 const Subspace& constraints) {
    const auto xs = unflatten_basis(n, inside);
    const auto ys = unflatten_basis(n, constraints);
    ExactMatrix sys(ys.size(), xs.size());
    for (std::size_t j = 0; j < ys.size(); ++j)
        for (std::size_t k = 0; k < xs.size(); ++k)
            sys(j, k) = (xs[k] * ys[j]).trace();
    std::vector<std::vector<Scalar>> rows;
    for (const auto& c : kernel_basis(sys)) {
        std::vector<Scalar> v(inside.ambient_dim());
        for (std::size_t k = 0; k < xs.size(); ++k)
            for (std::size_t t = 0; t < v.size(); ++t)
                v[t] += c[k] * inside.basis()(k, t);
        rows.push_back(std::move(v));
    }
    return Subspace::span(inside.ambient_dim(), rows);
}

} // namespace

LieSubalgebra radical(const LieSubalgebra& v) {
    const std::size_t n = v.ambient_n();
    const Subspace derived = bracket_span(n, v.space(), v.space());
    Subspace rad = trace_orthogonal_within(n, v.space(), derived);
    if (!rad.contains(bracket_span(n, v.space(), rad)))
        throw internal_inconsistency("radical: trace-orthogonal set is not an ideal");
    LieSubalgebra r = LieSubalgebra::from_span(n, std::move(rad));
    if (!is_solvable(r))
        throw internal_inconsistency("radical: candidate ideal is not solvable");
    return r;
}

LieSubalgebra nilradical(const LieSubalgebra& v) {
    const std::size_t n = v.ambient_n();
    const LieSubalgebra r = radical(v);
    if (r.dim() == 0) return LieSubalgebra::zero(n);

    // Associative algebra generated by the radical: close the span under
    // right multiplication by the generators (words grow one letter at a time).
    const auto gens = r.basis_matrices();
    Subspace assoc = r.space();
    // worklist closure: only words that were new last round grow a letter
    std::vector<ExactMatrix> frontier = gens;
    while (!frontier.empty()) {
        std::vector<ExactMatrix> fresh;
        std::vector<std::vector<Scalar>> rows;
        for (const auto& f : frontier)
            for (const auto& g : gens) {
                ExactMatrix prod = f * g;
                auto flat = prod.flatten();
                if (!assoc.contains(flat)) {
                    rows.push_back(std::move(flat));
                    fresh.push_back(std::move(prod));
                }
            }
        if (!rows.empty()) {
            for (std::size_t row = 0; row < assoc.dim(); ++row)
                rows.push_back(assoc.basis_row(row));
            assoc = Subspace::span(assoc.ambient_dim(), rows);
        }
        frontier = std::move(fresh);
    }

    // Trace radical of the associative algebra: in characteristic zero this is
    // its maximal nil ideal, so its members are exactly the nilpotent matrices.
    const Subspace nil = trace_orthogonal_within(n, assoc, assoc);
    Subspace vn = r.space().intersect(nil);

    if (!vn.contains(bracket_span(n, v.space(), vn)))
        throw internal_inconsistency("nilradical: result is not an ideal");
    LieSubalgebra out = LieSubalgebra::from_span(n, std::move(vn));
    if (!is_nilpotent_algebra(out))
        throw internal_inconsistency("nilradical: result is not nilpotent");
    for (std::size_t i = 0; i < out.dim(); ++i)
        if (!is_matrix_nilpotent(out.basis_matrix(i)))
            throw internal_inconsistency("nilradical: non-nilpotent basis element");
    return out;
}

bool splittable_decomposition(const LieSubalgebra& v,
                              const LieSubalgebra& reductive_candidate) {
    if (reductive_candidate.ambient_n() != v.ambient_n() ||
        !v.contains(reductive_candidate))
        throw invalid_input("splittable_decomposition: candidate is not a subalgebra of v");
    const LieSubalgebra vn = nilradical(v);
    const Subspace& c = reductive_candidate.space();
    if (c.intersect(vn.space()).dim() != 0) return false;
    if (c.sum(vn.space()) != v.space()) return false;
    return nilradical(reductive_candidate).dim() == 0;
}

LieSubalgebra normalizer_of_subspace(const LieSubalgebra& g, const Subspace& w) {
    if (!g.space().contains(w))
        throw invalid_input("normalizer_of_subspace: w is not inside g");
    const std::size_t n = g.ambient_n();
    const auto xs = g.basis_matrices();
    const auto ws = unflatten_basis(n, w);

    std::vector<std::vector<Scalar>> rows; // one row per (w-generator, residue coordinate)
    for (const auto& wj : ws) {
        // residues[k] = reduction of [X_k, wj] against w; Z = sum c_k X_k
        // normalizes iff sum c_k residues[k] = 0.
        std::vector<std::vector<Scalar>> residues;
        residues.reserve(xs.size());
        for (const auto& xk : xs)
            residues.push_back(w.reduce(bracket(xk, wj).flatten()));
        for (std::size_t t = 0; t < n * n; ++t) {
            std::vector<Scalar> row(xs.size());
            bool nonzero = false;
            for (std::size_t k = 0; k < xs.size(); ++k) {
                row[k] = residues[k][t];
                nonzero = nonzero || !row[k].is_zero();
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }

    ExactMatrix sys(rows.size(), xs.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < xs.size(); ++k) sys(i, k) = rows[i][k];
    std::vector<std::vector<Scalar>> span_rows;
    for (const auto& c : kernel_basis(sys)) {
        std::vector<Scalar> z(n * n);
        for (std::size_t k = 0; k < xs.size(); ++k)
            for (std::size_t t = 0; t < n * n; ++t)
                z[t] += c[k] * g.space().basis()(k, t);
        span_rows.push_back(std::move(z));
    }
    Subspace norm = Subspace::span(n * n, span_rows);
    if (!is_bracket_closed(n, norm))
        throw internal_inconsistency("normalizer_of_subspace: result not closed");
    return LieSubalgebra::from_span(n, std::move(norm));
}

LieSubalgebra centralizer_in(const LieSubalgebra& g, const ExactMatrix& x) {
    const std::size_t n = g.ambient_n();
    if (x.rows() != n || x.cols() != n)
        throw invalid_input("centralizer_in: element size mismatch");
    const auto xs = g.basis_matrices();
    ExactMatrix sys(n * n, xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const auto flat = bracket(xs[k], x).flatten();
        for (std::size_t t = 0; t < n * n; ++t) sys(t, k) = flat[t];
    }
    std::vector<std::vector<Scalar>> span_rows;
    for (const auto& c : kernel_basis(sys)) {
        std::vector<Scalar> z(n * n);
        for (std::size_t k = 0; k < xs.size(); ++k)
            for (std::size_t t = 0; t < n * n; ++t)
                z[t] += c[k] * g.space().basis()(k, t);
        span_rows.push_back(std::move(z));
    }
    Subspace cent = Subspace::span(n * n, span_rows);
    if (!is_bracket_closed(n, cent))
        throw internal_inconsistency("centralizer_in: result not closed");
    return LieSubalgebra::from_span(n, std::move(cent));
}

bool is_killing_negative_semidefinite(const std::vector<ExactMatrix>& real_basis) {
    if (real_basis.empty()) return true;
    const std::size_t n = real_basis[0].rows();
    std::vector<std::vector<Scalar>> rows;
    for (const auto& m : real_basis) {
        if (m.rows() != n || m.cols() != n)
            throw invalid_input("is_killing_negative_semidefinite: size mismatch");
        rows.push_back(exact::realify_vector(m.flatten()));
    }
    const Subspace real_span = Subspace::span(2 * n * n, rows);
    const std::size_t d = real_span.dim();

    std::vector<ExactMatrix> basis;
    basis.reserve(d);
    for (std::size_t r = 0; r < d; ++r)
        basis.push_back(ExactMatrix::from_flat(
            n, n, exact::unrealify_vector(real_span.basis_row(r))));

    std::vector<ExactMatrix> ads;
    for (const auto& y : basis) {
        ExactMatrix ad(d, d);
        for (std::size_t j = 0; j < d; ++j) {
            const auto coords = real_span.coordinates(
                exact::realify_vector(bracket(y, basis[j]).flatten()));
            if (!coords)
                throw invalid_input(
                    "is_killing_negative_semidefinite: span is not closed over the reals");
            for (std::size_t i = 0; i < d; ++i) ad(i, j) = (*coords)[i];
        }
        ads.push_back(std::move(ad));
    }

    ExactMatrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            Scalar t;
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s < d; ++s) t += ads[i](r, s) * ads[j](s, r);
            gram(i, j) = t;
            gram(j, i) = t;
        }
    return exact::hermitian_signature(gram).plus == 0;
}

} // namespace crkit::liealg
