#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crkit/errors.hpp"
#include "crkit/forms.hpp"
#include "crkit/matrix.hpp"
#include "crkit/poly.hpp"
#include "crkit/scalar.hpp"
#include "crkit/subspace.hpp"

#include <random>

using namespace crkit::exact;

namespace {

Scalar rand_scalar(std::mt19937_64& rng) {
    auto small = [&rng] { return Scalar(static_cast<long>(rng() % 5) - 2); };
    return small() + Scalar::i() * small();
}

ExactMatrix rand_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_scalar(rng);
    return m;
}

std::vector<Scalar> e_k(std::size_t n, std::size_t k) {
    std::vector<Scalar> v(n);
    v[k] = Scalar(1);
    return v;
}

} // namespace

TEST_CASE("scalar field arithmetic") {
    const Scalar a(Rational(3, 2), Rational(-1, 4));
    const Scalar b(Rational(-2), Rational(5));
    CHECK(a + b - b == a);
    CHECK(a * b == b * a);
    CHECK((a / b) * b == a);
    CHECK(a * a.conj() == Scalar(a.norm()));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK_THROWS_AS(a / Scalar(0), crkit::invalid_input);
}

TEST_CASE("scalar string round trip and parsing shorthands") {
    const Scalar a(Rational(3, 2), Rational(-1, 4));
    CHECK(a.str() == "3/2-1/4*i");
    CHECK(Scalar::parse(a.str()) == a);
    CHECK(Scalar(0).str() == "0/1+0/1*i");
    CHECK(Scalar::parse("3") == Scalar(3));
    CHECK(Scalar::parse("-1/2") == Scalar(Rational(-1, 2)));
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("2*i") == Scalar(0, 2));
    CHECK(Scalar::parse("1+i") == Scalar(1, 1));
    CHECK(Scalar::parse("0/1+0/1*i") == Scalar(0));
    CHECK_THROWS_AS(Scalar::parse("zebra"), crkit::invalid_input);
    CHECK_THROWS_AS(Scalar::parse("1/0"), crkit::invalid_input);
    CHECK_THROWS_AS(Scalar::parse(""), crkit::invalid_input);
}

TEST_CASE("canonical rational form makes equality structural") {
    CHECK(Scalar(Rational(2, 4)) == Scalar(Rational(1, 2)));
    CHECK(Scalar(Rational(-1) / Rational(-2)) == Scalar(Rational(1, 2)));
    CHECK(Scalar(Rational(2) / Rational(-4)).str() == "-1/2+0/1*i");
}

TEST_CASE("matrix arithmetic basics") {
    const ExactMatrix a{{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(4)}};
    const ExactMatrix b{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
    CHECK((a * b)(0, 0) == Scalar(2));
    CHECK(a.transpose()(0, 1) == Scalar(3));
    CHECK(a.trace() == Scalar(5));
    const ExactMatrix c{{Scalar(0, 1)}};
    CHECK(c.adjoint()(0, 0) == Scalar(0, -1));
    CHECK_THROWS_AS(a * ExactMatrix(3, 3), crkit::invalid_input);
}

TEST_CASE("rref fixed points and forced forms") {
    const ExactMatrix id3 = ExactMatrix::identity(3);
    CHECK(rref(id3).mat == id3);

    const ExactMatrix m{{Scalar(2), Scalar(4)}, {Scalar(1), Scalar(2)}};
    const ExactMatrix want{{Scalar(1), Scalar(2)}, {Scalar(0), Scalar(0)}};
    CHECK(rref(m).mat == want);
    CHECK(rref(m).rank == 1);

    const ExactMatrix g{{Scalar(0), Scalar::i()}, {Scalar(1), Scalar(0)}};
    CHECK(rref(g).mat == ExactMatrix::identity(2));
}

TEST_CASE("rref is idempotent on random matrices") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 25; ++t) {
        const ExactMatrix m = rand_matrix(rng, 3 + t % 3, 4);
        const ExactMatrix r = rref(m).mat;
        CHECK(rref(r).mat == r);
    }
}

TEST_CASE("kernel dimensions and an explicit solve") {
    CHECK(kernel_basis(ExactMatrix::zero(2, 2)).size() == 2);
    CHECK(kernel_basis(ExactMatrix::identity(3)).empty());

    const ExactMatrix row{{Scalar(1), Scalar(1)}};
    const auto k = kernel_basis(row);
    REQUIRE(k.size() == 1);
    // Canonical kernel vector for free column 1: (-1, 1), same line as (1, -1).
    CHECK(k[0][0] == Scalar(-1));
    CHECK(k[0][1] == Scalar(1));
}

TEST_CASE("subspace intersection examples") {
    const auto s1 = Subspace::span(3, {e_k(3, 0)});
    const auto s2 = Subspace::span(3, {e_k(3, 1)});
    CHECK(s1.intersect(s2).dim() == 0);
    CHECK(s1.intersect(s1) == s1);

    const auto a = Subspace::span(3, {e_k(3, 0), e_k(3, 1)});
    const auto b = Subspace::span(3, {e_k(3, 1), e_k(3, 2)});
    CHECK(a.intersect(b) == Subspace::span(3, {e_k(3, 1)}));
}

TEST_CASE("sum and membership") {
    const auto s1 = Subspace::span(3, {e_k(3, 0)});
    const auto s2 = Subspace::span(3, {e_k(3, 1)});
    const auto s12 = s1.sum(s2);
    CHECK(s12 == Subspace::span(3, {e_k(3, 0), e_k(3, 1)}));

    std::vector<Scalar> v = e_k(3, 0);
    v[1] = Scalar(1);
    CHECK(s12.contains(v));
    CHECK(!s12.contains(e_k(3, 2)));
    CHECK_THROWS_AS(s1.sum(Subspace::span(2, {e_k(2, 0)})), crkit::invalid_input);
}

TEST_CASE("dimension formula dim(a+b) + dim(a&b) = dim a + dim b") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::vector<Scalar>> ga, gb;
        for (int r = 0; r < 3; ++r) {
            ga.push_back(rand_matrix(rng, 1, 5).flatten());
            gb.push_back(rand_matrix(rng, 1, 5).flatten());
        }
        const auto a = Subspace::span(5, ga);
        const auto b = Subspace::span(5, gb);
        CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("canonical form is basis independent") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::vector<Scalar>> gens;
        for (int r = 0; r < 3; ++r) gens.push_back(rand_matrix(rng, 1, 4).flatten());
        const auto s = Subspace::span(4, gens);
        // Replace generators by random invertible combinations.
        std::vector<std::vector<Scalar>> mixed;
        for (int r = 0; r < 5; ++r) {
            std::vector<Scalar> v(4);
            for (const auto& g : gens) {
                const Scalar c = rand_scalar(rng);
                for (std::size_t j = 0; j < 4; ++j) v[j] += c * g[j];
            }
            mixed.push_back(std::move(v));
        }
        const auto s2 = Subspace::span(4, mixed);
        CHECK(s.contains(s2));
        if (s2.dim() == s.dim()) CHECK(s == s2);
    }
}

TEST_CASE("coordinates against the canonical basis") {
    const auto s = Subspace::span(3, {e_k(3, 0), e_k(3, 2)});
    std::vector<Scalar> v(3);
    v[0] = Scalar(5);
    v[2] = Scalar(-2);
    const auto c = s.coordinates(v);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Scalar(5));
    CHECK((*c)[1] == Scalar(-2));
    CHECK(!s.coordinates(e_k(3, 1)).has_value());
}

TEST_CASE("realification round trip and complex span doubling") {
    std::vector<Scalar> v{Scalar(1, 2), Scalar(Rational(-1, 3), Rational(0))};
    CHECK(unrealify_vector(realify_vector(v)) == v);

    const auto s = Subspace::span(2, {v});
    const auto rs = realify_span(s);
    CHECK(rs.ambient_dim() == 4);
    CHECK(rs.dim() == 2); // one complex line = two real dimensions
    CHECK(rs.contains(realify_vector(v)));
    std::vector<Scalar> iv{Scalar::i() * v[0], Scalar::i() * v[1]};
    CHECK(rs.contains(realify_vector(iv)));
}

TEST_CASE("hermitian signatures of small forms") {
    const ExactMatrix d{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}};
    CHECK(hermitian_signature(d) == Signature{1, 1, 0});
    CHECK(hermitian_signature(ExactMatrix::zero(3, 3)) == Signature{0, 0, 3});

    const ExactMatrix offdiag{{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
    CHECK(hermitian_signature(offdiag) == Signature{1, 1, 0});

    // Purely imaginary coupling: [[0, i], [-i, 0]] has eigenvalues +-1.
    const ExactMatrix im{{Scalar(0), Scalar::i()}, {-Scalar::i(), Scalar(0)}};
    CHECK(hermitian_signature(im) == Signature{1, 1, 0});

    const ExactMatrix notherm{{Scalar(0), Scalar(1)}, {Scalar(2), Scalar(0)}};
    CHECK_THROWS_AS(hermitian_signature(notherm), crkit::invalid_input);
}

TEST_CASE("polynomial division, gcd, squarefree part") {
    // f = (t-1)^2 (t+2) = t^3 - 3t + 2
    const Poly f({Scalar(2), Scalar(-3), Scalar(0), Scalar(1)});
    const Poly lin = Poly::linear(Scalar(1));
    auto [q, r] = Poly::divmod(f, lin);
    CHECK(r.is_zero());
    CHECK(q.degree() == 2);

    const Poly sf = squarefree_part(f);
    CHECK(sf.degree() == 2); // (t-1)(t+2)
    CHECK(sf(Scalar(1)).is_zero());
    CHECK(sf(Scalar(-2)).is_zero());
    CHECK(is_squarefree(sf));
    CHECK(!is_squarefree(f));

    const auto eg = poly_extended_gcd(f, f.derivative());
    CHECK((eg.u * f + eg.v * f.derivative()) == eg.g);
    CHECK(eg.g.degree() == 1); // common factor (t-1)
}

TEST_CASE("characteristic and minimal polynomials") {
    const ExactMatrix a{{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(-1)}};
    const Poly chi = char_poly(a); // t^2 - 1
    CHECK(chi.coeffs() == std::vector<Scalar>{Scalar(-1), Scalar(0), Scalar(1)});
    CHECK(chi(a).is_zero());

    // Repeated eigenvalue, diagonalizable: minimal polynomial drops degree.
    const ExactMatrix d = ExactMatrix::diagonal({Scalar(2), Scalar(2), Scalar(5)});
    CHECK(char_poly(d).degree() == 3);
    CHECK(min_poly(d).degree() == 2);
    CHECK(min_poly(d)(d).is_zero());

    // Nilpotent Jordan block: minimal = characteristic = t^2.
    const ExactMatrix jb{{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}};
    CHECK(min_poly(jb).degree() == 2);
}

TEST_CASE("gaussian integer root scan") {
    // (t - 2)(t - i)^2
    const Poly f = Poly::linear(Scalar(2)) * Poly::linear(Scalar::i()) *
                   Poly::linear(Scalar::i());
    auto roots = gaussian_integer_roots(f, 4);
    REQUIRE(roots.size() == 2);
    std::size_t total = 0;
    for (const auto& [z, m] : roots) {
        total += m;
        if (z == Scalar(2)) CHECK(m == 1);
        if (z == Scalar::i()) CHECK(m == 2);
    }
    CHECK(total == 3);
}

TEST_CASE("char_poly on random matrices annihilates the matrix") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 10; ++t) {
        const ExactMatrix m = rand_matrix(rng, 3, 3);
        CHECK(char_poly(m)(m).is_zero());
    }
}
