#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crkit/cralg.hpp"
#include "crkit/errors.hpp"

#include <cmath>
#include <memory>
#include <random>

using namespace crkit::cralg;
using crkit::exact::unrealify_vector;
using crkit::liealg::close_under_bracket;
using crkit::liealg::is_killing_negative_semidefinite;

namespace {

const ExactMatrix H{{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}};
const ExactMatrix E{{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}};
const ExactMatrix F{{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}};

std::shared_ptr<const RealFormContext> ctx(std::size_t p, std::size_t q) {
    return std::make_shared<const RealFormContext>(p, q);
}

LieSubalgebra span_alg(std::size_t n, const std::vector<ExactMatrix>& mats) {
    return LieSubalgebra::from_matrices(n, mats);
}

std::vector<ExactMatrix> real_basis_matrices(const Subspace& realified) {
    std::vector<ExactMatrix> out;
    const std::size_t m2 = realified.ambient_dim();
    for (std::size_t r = 0; r < realified.dim(); ++r) {
        const auto flat = unrealify_vector(realified.basis_row(r));
        const auto n = static_cast<std::size_t>(std::lround(std::sqrt(double(m2 / 2))));
        out.push_back(ExactMatrix::from_flat(n, n, flat));
    }
    return out;
}

// Random element of k for the given context, with small Gaussian-integer
// entries in the allowed block pattern.
ExactMatrix rand_in_k(std::mt19937_64& rng, const RealFormContext& c) {
    const std::size_t n = c.n_total();
    ExactMatrix m(n, n);
    auto inside = [&](std::size_t i, std::size_t j) {
        return (i < c.p()) == (j < c.p());
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (inside(i, j) && i != j)
                m(i, j) = Scalar(static_cast<long>(rng() % 3) - 1,
                                 static_cast<long>(rng() % 3) - 1);
    // traceless diagonal
    Scalar acc;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        m(i, i) = Scalar(static_cast<long>(rng() % 3) - 1);
        acc = acc + m(i, i);
    }
    m(n - 1, n - 1) = Scalar(0) - acc;
    return m;
}

} // namespace

TEST_CASE("context dimensions and signature form") {
    auto c12 = ctx(1, 2);
    CHECK(c12->n_total() == 3);
    CHECK(c12->k().dim() == 4);
    CHECK(c12->dim_k0() == 4);
    CHECK(c12->hermitian_form() ==
          ExactMatrix::diagonal({Scalar(1), Scalar(-1), Scalar(-1)}));

    auto c20 = ctx(2, 0);
    CHECK(c20->k().dim() == 3);
    CHECK(c20->k().contains(H));
    CHECK(c20->k().contains(E));

    auto c22 = ctx(2, 2);
    CHECK(c22->k().dim() == 7);
    CHECK_FALSE(c22->k().contains(ExactMatrix::unit(4, 0, 2)));

    CHECK_THROWS_AS(RealFormContext(0, 3), crkit::invalid_input);
    CHECK_THROWS_AS(RealFormContext(1, 0), crkit::invalid_input);
}

TEST_CASE("conjugation is an involutive automorphism fixing k_0") {
    auto c = ctx(1, 2);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 25; ++t) {
        const ExactMatrix x = rand_in_k(rng, *c);
        const ExactMatrix y = rand_in_k(rng, *c);
        CHECK(c->conjugate(c->conjugate(x)) == x);
        CHECK(c->conjugate(bracket(x, y)) ==
              bracket(c->conjugate(x), c->conjugate(y)));
    }
    // anti-Hermitian elements are fixed
    ExactMatrix u(3, 3);
    u(1, 2) = Scalar(1);
    u(2, 1) = Scalar(-1);
    CHECK(c->conjugate(u) == u);
    // outside k
    CHECK_THROWS_AS(c->conjugate(ExactMatrix::unit(3, 0, 1)), crkit::invalid_input);
}

TEST_CASE("real points of subspaces of k") {
    auto c = ctx(2, 0);
    CHECK(c->real_points(c->k().space()).dim() == 3);
    CHECK(c->real_points(Subspace::span(4, {E.flatten()})).is_zero());
    const ExactMatrix rot = E - F;
    const Subspace rot_line = Subspace::span(4, {rot.flatten()});
    CHECK(c->real_points(rot_line).dim() == 1);
    CHECK_THROWS_AS(c->real_points(Subspace::full(4)), crkit::invalid_input);
}

TEST_CASE("kappa is the negative trace form, positive definite on k_0") {
    CHECK(kappa(H, H) == Scalar(-2));
    const ExactMatrix a = E - F;
    const ExactMatrix b = Scalar::i() * (E + F);
    const ExactMatrix d = Scalar::i() * H;
    CHECK(kappa(a, a) == Scalar(2));
    CHECK(kappa(b, b) == Scalar(2));
    CHECK(kappa(d, d) == Scalar(2));
    CHECK(kappa(a, b) == Scalar(0));
    CHECK(kappa(a, d) == Scalar(0));
}

TEST_CASE("nilpotent line in the sl_2 context") {
    auto c = ctx(2, 0);
    CRAlgebra alg(c, span_alg(2, {E}));
    CHECK(alg.reductive_part().dim() == 0);
    CHECK(alg.nilradical_part().space() == alg.v().space());
    CHECK(alg.is_n_reductive());
    CHECK(alg.cr_dimension() == 1);
    CHECK(alg.cr_codimension() == 1);
    CHECK(alg.v0_realified().is_zero());
    CHECK(alg.hnr_normalizer().dim() == 2);
    CHECK(alg.is_hnr() == Verdict::yes);
}

TEST_CASE("Borel and Cartan in the sl_2 context") {
    auto c = ctx(2, 0);
    CRAlgebra borel(c, span_alg(2, {H, E}));
    CHECK(borel.reductive_part().space() == Subspace::span(4, {H.flatten()}));
    CHECK(borel.nilradical_part().space() == Subspace::span(4, {E.flatten()}));
    CHECK(borel.is_n_reductive());
    CHECK(borel.cr_dimension() == 1);
    CHECK(borel.cr_codimension() == 0);
    CHECK(borel.is_hnr() == Verdict::yes);

    CRAlgebra cartan(c, span_alg(2, {H}));
    CHECK(cartan.reductive_part().space() == cartan.v().space());
    CHECK(cartan.nilradical_part().dim() == 0);
    CHECK(cartan.is_n_reductive());
    CHECK(cartan.cr_dimension() == 0);
    CHECK(cartan.cr_codimension() == 2);
    CHECK(cartan.is_hnr() == Verdict::yes); // normalizer of zero is all of k
}

TEST_CASE("a non-n-reductive line") {
    auto c = ctx(2, 0);
    CRAlgebra alg(c, span_alg(2, {H + E}));
    CHECK(alg.reductive_part().dim() == 0);
    CHECK(alg.nilradical_part().dim() == 0);
    CHECK_FALSE(alg.is_n_reductive());
    CHECK(alg.cr_dimension() == 1);
    CHECK(alg.cr_codimension() == 1);
    CHECK_THROWS_AS(alg.is_hnr(), crkit::invalid_input);
}

TEST_CASE("hyperquadric stabilizer in the (1,2) context") {
    // stabilizer of the line through e_1 + e_2 inside s(gl_1 + gl_2)
    auto c = ctx(1, 2);
    ExactMatrix x1 = ExactMatrix::diagonal({Scalar(1), Scalar(1), Scalar(-2)});
    ExactMatrix e23 = ExactMatrix::unit(3, 1, 2);
    CRAlgebra alg(c, span_alg(3, {x1, e23}));

    CHECK(alg.v().dim() == 2);
    CHECK(alg.reductive_part().space() == Subspace::span(9, {x1.flatten()}));
    CHECK(alg.nilradical_part().space() == Subspace::span(9, {e23.flatten()}));
    CHECK(alg.is_n_reductive());
    CHECK(alg.cr_dimension() == 1);
    CHECK(alg.cr_codimension() == 1);

    const LieSubalgebra q = alg.hnr_normalizer();
    CHECK(q.dim() == 3);
    CHECK(alg.is_hnr() == Verdict::yes);
}

TEST_CASE("point orbit: v = k is n-reductive with zero invariants") {
    auto c = ctx(1, 2);
    CRAlgebra alg(c, c->k());
    CHECK(alg.reductive_part().space() == c->k().space());
    CHECK(alg.nilradical_part().dim() == 0);
    CHECK(alg.is_n_reductive());
    CHECK(alg.cr_dimension() == 0);
    CHECK(alg.cr_codimension() == 0);
    CHECK(alg.is_hnr() == Verdict::yes);

    // the real points of the reductive part carry a compact-type Killing form
    CHECK(is_killing_negative_semidefinite(
        real_basis_matrices(alg.v0_realified())));
}

TEST_CASE("degenerate context (1,1)") {
    auto c = ctx(1, 1);
    CHECK(c->k().dim() == 1);
    CRAlgebra alg(c, LieSubalgebra::zero(2));
    CHECK(alg.cr_dimension() == 0);
    CHECK(alg.cr_codimension() == 1);
    CHECK(alg.is_n_reductive());
}

TEST_CASE("constructor rejects subalgebras outside k") {
    auto c = ctx(1, 1);
    CHECK_THROWS_AS(CRAlgebra(c, span_alg(2, {E})), crkit::invalid_input);
    CHECK_THROWS_AS(CRAlgebra(c, span_alg(3, {ExactMatrix::unit(3, 0, 1)})),
                    crkit::invalid_input);
    CHECK_THROWS_AS(CRAlgebra(nullptr, span_alg(2, {E})), crkit::invalid_input);
}

TEST_CASE("nilradical part never meets the conjugate algebra") {
    auto c12 = ctx(1, 2);
    auto c22 = ctx(2, 2);
    std::mt19937_64 rng(7);
    int built = 0;
    for (int t = 0; t < 40; ++t) {
        const auto& c = (t % 2 == 0) ? c12 : c22;
        const std::size_t n = c->n_total();
        Subspace seed = Subspace::span(
            n * n, {rand_in_k(rng, *c).flatten(), rand_in_k(rng, *c).flatten()});
        const LieSubalgebra v = close_under_bracket(seed, n);
        CRAlgebra alg(c, v);
        ++built;
        CHECK(alg.nilradical_part().space().intersect(alg.v_bar().space()).is_zero());
        CHECK(alg.v0_realified().dim() == alg.reductive_part().dim());
        CHECK(alg.cr_dimension() + alg.reductive_part().dim() == alg.v().dim());
    }
    CHECK(built == 40);
}

TEST_CASE("cr map and submersion criteria") {
    auto c = ctx(2, 0);
    const LieSubalgebra sl2 = c->k();
    const LieSubalgebra borel = span_alg(2, {H, E});
    const LieSubalgebra cartan = span_alg(2, {H});
    const LieSubalgebra lower = span_alg(2, {F});

    CHECK(check_cr_map(*c, borel, sl2));
    CHECK(check_cr_map(*c, cartan, borel));
    CHECK_FALSE(check_cr_map(*c, lower, borel));

    CHECK(check_submersion(*c, borel, sl2));
    CHECK(check_submersion(*c, cartan, sl2)); // f & conj(f) = sl2 already covers f
    CHECK_FALSE(check_submersion(*c, lower, borel));
    CHECK_FALSE(check_submersion(*c, cartan, borel)); // cartan + span{H} misses E
}

TEST_CASE("fiber classification") {
    auto c = ctx(2, 0);
    const LieSubalgebra sl2 = c->k();
    const LieSubalgebra borel = span_alg(2, {H, E});
    const LieSubalgebra cartan = span_alg(2, {H});

    // flag fibers over a point: complex fibers
    CHECK(fiber_type(*c, borel, sl2) == FiberType::complex);
    // totally real: conjugation-stable pair
    CHECK(fiber_type(*c, cartan, sl2) == FiberType::totally_real);
    CHECK(fiber_type(*c, cartan, borel) == FiberType::totally_real);

    // mixed: hyperquadric stabilizer inside all of k for (1,2)
    auto c12 = ctx(1, 2);
    ExactMatrix x1 = ExactMatrix::diagonal({Scalar(1), Scalar(1), Scalar(-2)});
    ExactMatrix e23 = ExactMatrix::unit(3, 1, 2);
    const LieSubalgebra v = span_alg(3, {x1, e23});
    CHECK(fiber_type(*c12, v, c12->k()) == FiberType::mixed);

    // precondition: e & conj(e) inside f & conj(f)
    CHECK_THROWS_AS(fiber_type(*c, cartan, span_alg(2, {E})), crkit::invalid_input);
}
