#pragma once

#include "crkit/matrix.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace crkit::exact {

/// Univariate polynomial over Q(i), coefficients in ascending degree order
/// with no trailing zeros (zero polynomial has empty coefficient list).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(Scalar v) { return Poly({std::move(v)}); }
    /// t - root
    static Poly linear(const Scalar& root) { return Poly({-root, Scalar(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }

    Poly monic() const;
    Poly derivative() const;

    Scalar operator()(const Scalar& x) const;
    ExactMatrix operator()(const ExactMatrix& x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& s, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division a = q*b + r with deg r < deg b. Throws on b = 0.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

private:
    std::vector<Scalar> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// (g, u, v) with u*a + v*b = g, g the monic gcd.
struct ExtendedGcd {
    Poly g, u, v;
};
ExtendedGcd poly_extended_gcd(const Poly& a, const Poly& b);

/// f / gcd(f, f'): same roots as f, each simple. Monic output.
Poly squarefree_part(const Poly& f);

bool is_squarefree(const Poly& f);

/// Monic characteristic polynomial det(tI - A), Faddeev-LeVerrier recurrence
/// (division-light, exact over Q(i)).
Poly char_poly(const ExactMatrix& a);

/// Monic minimal polynomial, found as the first linear dependency among the
/// flattened powers I, A, A^2, ...
Poly min_poly(const ExactMatrix& a);

/// All Gaussian-integer roots of f with multiplicities, found by scanning the
/// box |Re|,|Im| <= bound and dividing out each root. Complete for roots in
/// the box; callers pick `bound` from a root bound (e.g. Gershgorin).
std::vector<std::pair<Scalar, std::size_t>> gaussian_integer_roots(Poly f, long bound);

} // namespace crkit::exact
