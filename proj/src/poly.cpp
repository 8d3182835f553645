#include "crkit/poly.hpp"

#include "crkit/errors.hpp"
#include "crkit/subspace.hpp"

namespace crkit::exact {

Poly Poly::monic() const {
    if (is_zero()) return {};
    const Scalar inv = Scalar(1) / leading();
    std::vector<Scalar> c = c_;
    for (auto& v : c) v = inv * v;
    return Poly(std::move(c));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = Scalar(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
}

Scalar Poly::operator()(const Scalar& x) const {
    Scalar acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

ExactMatrix Poly::operator()(const ExactMatrix& x) const {
    if (!x.is_square()) throw invalid_input("polynomial of non-square matrix");
    ExactMatrix acc = ExactMatrix::zero(x.rows(), x.cols());
    for (std::size_t k = c_.size(); k-- > 0;) {
        acc = acc * x;
        for (std::size_t i = 0; i < x.rows(); ++i) acc(i, i) += c_[k];
    }
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t s = 0; s < a.c_.size(); ++s)
        for (std::size_t t = 0; t < b.c_.size(); ++t) c[s + t] += a.c_[s] * b.c_[t];
    return Poly(std::move(c));
}

Poly operator*(const Scalar& s, const Poly& a) {
    std::vector<Scalar> c = a.c_;
    for (auto& v : c) v = s * v;
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw invalid_input("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<Scalar> rem = a.c_;
    std::vector<Scalar> quo(a.c_.size() - b.c_.size() + 1);
    const Scalar lead_inv = Scalar(1) / b.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
        const Scalar f = rem[k + b.c_.size() - 1] * lead_inv;
        quo[k] = f;
        if (f.is_zero()) continue;
        for (std::size_t t = 0; t < b.c_.size(); ++t) rem[k + t] -= f * b.c_[t];
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtendedGcd poly_extended_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::constant(Scalar(1)), u1;
    Poly v0, v1 = Poly::constant(Scalar(1));
    while (!r1.is_zero()) {
        auto [q, r2] = Poly::divmod(r0, r1);
        Poly u2 = u0 - q * u1;
        Poly v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {Poly{}, Poly{}, Poly{}};
    const Scalar inv = Scalar(1) / r0.leading();
    return {inv * r0, inv * u0, inv * v0};
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) return {};
    if (f.degree() == 0) return Poly::constant(Scalar(1));
    Poly g = poly_gcd(f, f.derivative());
    return Poly::divmod(f, g).first.monic();
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

Poly char_poly(const ExactMatrix& a) {
    if (!a.is_square()) throw invalid_input("char_poly of non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Scalar> c(n + 1);
    c[n] = Scalar(1);
    // Faddeev-LeVerrier: M_1 = I, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
    ExactMatrix m = ExactMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const ExactMatrix am = a * m;
        const Scalar ck = -(Scalar(1) / Scalar(static_cast<long>(k))) * am.trace();
        c[n - k] = ck;
        if (k < n) {
            m = am;
            for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
        }
    }
    return Poly(std::move(c));
}

Poly min_poly(const ExactMatrix& a) {
    if (!a.is_square()) throw invalid_input("min_poly of non-square matrix");
    const std::size_t n = a.rows();
    // Grow the span of flattened powers until A^d falls into it.
    std::vector<std::vector<Scalar>> powers;
    ExactMatrix pw = ExactMatrix::identity(n);
    for (std::size_t d = 0; d <= n; ++d) {
        Subspace sp = Subspace::span(n * n, powers);
        const auto flat = pw.flatten();
        if (sp.contains(flat)) {
            // Solve sum_k x_k * powers[k] = flat for the dependency.
            ExactMatrix sys(n * n, d);
            for (std::size_t j = 0; j < n * n; ++j)
                for (std::size_t k = 0; k < d; ++k) sys(j, k) = powers[k][j];
            ExactMatrix aug(n * n, d + 1);
            for (std::size_t j = 0; j < n * n; ++j) {
                for (std::size_t k = 0; k < d; ++k) aug(j, k) = sys(j, k);
                aug(j, d) = flat[j];
            }
            RrefResult r = rref(aug);
            std::vector<Scalar> coeffs(d + 1);
            coeffs[d] = Scalar(1);
            for (std::size_t row = 0; row < r.rank; ++row) {
                const std::size_t pc = r.pivot_cols[row];
                if (pc < d) coeffs[pc] = -r.mat(row, d);
            }
            return Poly(std::move(coeffs));
        }
        powers.push_back(flat);
        pw = pw * a;
    }
    throw internal_inconsistency("min_poly: no dependency up to the ambient degree");
}

std::vector<std::pair<Scalar, std::size_t>> gaussian_integer_roots(Poly f, long bound) {
    std::vector<std::pair<Scalar, std::size_t>> out;
    if (f.is_zero()) return out;
    for (long re = -bound; re <= bound && f.degree() > 0; ++re) {
        for (long im = -bound; im <= bound && f.degree() > 0; ++im) {
            const Scalar z(re, im);
            if (!f(z).is_zero()) continue;
            std::size_t mult = 0;
            while (f.degree() > 0 && f(z).is_zero()) {
                f = Poly::divmod(f, Poly::linear(z)).first;
                ++mult;
            }
            out.emplace_back(z, mult);
        }
    }
    return out;
}

} // namespace crkit::exact
