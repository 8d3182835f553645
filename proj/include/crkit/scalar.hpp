#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <iosfwd>
#include <string>

namespace crkit::exact {

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator by GMP's canonicalization.
using Rational = boost::multiprecision::mpq_rational;

/// Element of the field Q(i): re + im*i with rational parts. Canonical form
/// of Rational makes equality structural.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() = default;
    Scalar(long r) : re(r), im(0) {}                          // NOLINT(google-explicit-constructor)
    Scalar(Rational r) : re(std::move(r)), im(0) {}           // NOLINT(google-explicit-constructor)
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Scalar(long r, long i) : re(r), im(i) {}

    static Scalar i() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    /// Complex conjugate.
    Scalar conj() const { return {re, -im}; }

    /// |z|^2 = re^2 + im^2, a nonnegative rational.
    Rational norm() const { return re * re + im * im; }

    Scalar operator-() const { return {-re, -im}; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b);

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical string "a/b+c/d*i" (explicit denominators, minus sign folded
    /// into the numerators). Used verbatim in JSON output.
    std::string str() const;

    /// Parses str() output and the obvious shorthands ("3", "-1/2", "i",
    /// "2*i", "1+i", "3/2-1/4*i"). Throws invalid_input on garbage.
    static Scalar parse(const std::string& text);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace crkit::exact
