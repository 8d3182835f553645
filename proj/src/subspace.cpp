#include "crkit/subspace.hpp"

#include "crkit/errors.hpp"

#include <algorithm>

namespace crkit::exact {

RrefResult rref(ExactMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    RrefResult res;
    res.pivot_cols.clear();
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        // First row at or below `row` with a nonzero entry in this column.
        std::size_t sel = m;
        for (std::size_t r = row; r < m; ++r)
            if (!a(r, col).is_zero()) { sel = r; break; }
        if (sel == m) continue;
        if (sel != row)
            for (std::size_t j = 0; j < n; ++j) std::swap(a(row, j), a(sel, j));
        const Scalar inv = Scalar(1) / a(row, col);
        for (std::size_t j = col; j < n; ++j) a(row, j) = inv * a(row, j);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            const Scalar f = a(r, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(row, j);
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    res.mat = std::move(a);
    return res;
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& a) {
    const std::size_t n = a.cols();
    RrefResult r = rref(a);
    std::vector<bool> is_pivot(n, false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> x(n);
        x[f] = Scalar(1);
        for (std::size_t row = 0; row < r.rank; ++row)
            x[r.pivot_cols[row]] = -r.mat(row, f);
        out.push_back(std::move(x));
    }
    return out;
}

Subspace::Subspace(std::size_t ambient_dim)
    : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<std::vector<Scalar>>& vectors) {
    ExactMatrix m(vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim)
            throw invalid_input("span: vector length does not match ambient dimension");
        for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
    }
    RrefResult r = rref(std::move(m));
    Subspace s(ambient_dim);
    s.basis_ = ExactMatrix(r.rank, ambient_dim);
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) s.basis_(i, j) = r.mat(i, j);
    s.pivots_ = std::move(r.pivot_cols);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = ExactMatrix::identity(ambient_dim);
    s.pivots_.resize(ambient_dim);
    for (std::size_t j = 0; j < ambient_dim; ++j) s.pivots_[j] = j;
    return s;
}

std::vector<Scalar> Subspace::basis_row(std::size_t r) const {
    std::vector<Scalar> v(ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) v[j] = basis_(r, j);
    return v;
}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> v) const {
    if (v.size() != ambient_) throw invalid_input("reduce: wrong vector length");
    for (std::size_t r = 0; r < dim(); ++r) {
        const Scalar c = v[pivots_[r]];
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j) v[j] -= c * basis_(r, j);
    }
    return v;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    for (const auto& e : reduce(v))
        if (!e.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_row(r))) return false;
    return true;
}

std::optional<std::vector<Scalar>> Subspace::coordinates(
    const std::vector<Scalar>& v) const {
    if (!contains(v)) return std::nullopt;
    std::vector<Scalar> c(dim());
    for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
    return c;
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw invalid_input("intersect: ambient dimension mismatch");
    // x*A = y*B  <=>  [A^T | -B^T] (x, y)^T = 0; the x-part picks out the
    // intersection element.
    const std::size_t da = dim(), db = other.dim();
    ExactMatrix sys(ambient_, da + db);
    for (std::size_t j = 0; j < ambient_; ++j) {
        for (std::size_t r = 0; r < da; ++r) sys(j, r) = basis_(r, j);
        for (std::size_t r = 0; r < db; ++r) sys(j, da + r) = -other.basis_(r, j);
    }
    std::vector<std::vector<Scalar>> gens;
    for (const auto& xy : kernel_basis(sys)) {
        std::vector<Scalar> v(ambient_);
        for (std::size_t r = 0; r < da; ++r)
            for (std::size_t j = 0; j < ambient_; ++j) v[j] += xy[r] * basis_(r, j);
        gens.push_back(std::move(v));
    }
    return span(ambient_, gens);
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw invalid_input("sum: ambient dimension mismatch");
    std::vector<std::vector<Scalar>> gens;
    for (std::size_t r = 0; r < dim(); ++r) gens.push_back(basis_row(r));
    for (std::size_t r = 0; r < other.dim(); ++r) gens.push_back(other.basis_row(r));
    return span(ambient_, gens);
}

Subspace Subspace::conj() const {
    std::vector<std::vector<Scalar>> gens;
    for (std::size_t r = 0; r < dim(); ++r) {
        auto v = basis_row(r);
        for (auto& e : v) e = e.conj();
        gens.push_back(std::move(v));
    }
    return span(ambient_, gens);
}

std::vector<Scalar> realify_vector(const std::vector<Scalar>& v) {
    std::vector<Scalar> w(2 * v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        w[j] = Scalar(v[j].re);
        w[v.size() + j] = Scalar(v[j].im);
    }
    return w;
}

std::vector<Scalar> unrealify_vector(const std::vector<Scalar>& w) {
    if (w.size() % 2 != 0) throw invalid_input("unrealify: odd length");
    const std::size_t m = w.size() / 2;
    std::vector<Scalar> v(m);
    for (std::size_t j = 0; j < m; ++j) {
        if (!w[j].is_real() || !w[m + j].is_real())
            throw invalid_input("unrealify: coordinates must be real");
        v[j] = Scalar(w[j].re, w[m + j].re);
    }
    return v;
}

Subspace realify_span(const Subspace& s) {
    std::vector<std::vector<Scalar>> gens;
    for (std::size_t r = 0; r < s.dim(); ++r) {
        auto v = s.basis_row(r);
        gens.push_back(realify_vector(v));
        for (auto& e : v) e = Scalar::i() * e;
        gens.push_back(realify_vector(v));
    }
    return Subspace::span(2 * s.ambient_dim(), gens);
}

} // namespace crkit::exact
