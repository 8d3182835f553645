#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crkit/errors.hpp"
#include "crkit/grassmann.hpp"

#include <memory>

using namespace crkit::grassmann;
using crkit::roots::Verdict;

namespace {

std::shared_ptr<const RealFormContext> ctx(std::size_t p, std::size_t q) {
    return std::make_shared<const RealFormContext>(p, q);
}

std::vector<Scalar> unit(std::size_t n, std::size_t i) {
    std::vector<Scalar> v(n);
    v[i] = Scalar(1);
    return v;
}

std::vector<Scalar> pair_sum(std::size_t n, std::size_t i, std::size_t j) {
    std::vector<Scalar> v(n);
    v[i] = Scalar(1);
    v[j] = Scalar(1);
    return v;
}

std::vector<std::pair<std::size_t, std::size_t>> ab_list(
    const std::vector<OrbitDescriptor>& ds) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& d : ds) out.emplace_back(d.a, d.b);
    return out;
}

} // namespace

TEST_CASE("descriptor validation and block sizes") {
    const OrbitDescriptor d(2, 3, 2, 1, 0);
    CHECK(d.c() == 1);
    CHECK(d.block_sizes() == std::array<std::size_t, 6>{1, 1, 0, 0, 1, 2});

    CHECK_THROWS_AS(OrbitDescriptor(1, 1, 1, 1, 1), crkit::invalid_input);
    CHECK_THROWS_AS(OrbitDescriptor(0, 1, 1, 0, 0), crkit::invalid_input);
    CHECK_THROWS_AS(OrbitDescriptor(2, 1, 1, 0, 0), crkit::invalid_input); // p > q
    CHECK_THROWS_AS(OrbitDescriptor(1, 1, 2, 0, 0), crkit::invalid_input); // m = p+q
    CHECK_THROWS_AS(OrbitDescriptor(1, 2, 2, 1, 0), crkit::invalid_input); // b < m-p
    CHECK_THROWS_AS(OrbitDescriptor(1, 2, 0, 0, 0), crkit::invalid_input);
}

TEST_CASE("orbit enumeration matches the admissibility filter") {
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(ab_list(enumerate_orbits(1, 1, 1)) ==
          std::vector<P>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(ab_list(enumerate_orbits(1, 2, 2)) ==
          std::vector<P>{{0, 1}, {0, 2}, {1, 1}});
    CHECK(ab_list(enumerate_orbits(2, 3, 2)) ==
          std::vector<P>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}});

    // brute-force cross-check on a few parameter triples
    for (auto [p, q, m] : {std::array<std::size_t, 3>{2, 2, 2},
                           {3, 4, 3}, {4, 4, 5}, {1, 4, 4}}) {
        std::vector<std::pair<std::size_t, std::size_t>> brute;
        for (std::size_t a = 0; a <= p; ++a)
            for (std::size_t b = 0; b <= q; ++b) {
                const bool ok = a + b <= m && (m <= q || a >= m - q) &&
                                (m <= p || b >= m - p);
                if (ok) brute.emplace_back(a, b);
            }
        CHECK(ab_list(enumerate_orbits(p, q, m)) == brute);
        CHECK_FALSE(brute.empty());
    }

    CHECK_THROWS_AS(enumerate_orbits(0, 1, 1), crkit::invalid_input);
    CHECK_THROWS_AS(enumerate_orbits(1, 1, 2), crkit::invalid_input);
}

TEST_CASE("base points") {
    CHECK(base_point(OrbitDescriptor(3, 3, 2, 1, 0)) ==
          Subspace::span(6, {unit(6, 0), pair_sum(6, 1, 3)}));
    CHECK(base_point(OrbitDescriptor(1, 1, 1, 0, 0)) ==
          Subspace::span(2, {pair_sum(2, 0, 1)}));
    CHECK(base_point(OrbitDescriptor(2, 2, 1, 1, 0)) ==
          Subspace::span(4, {unit(4, 0)}));
}

TEST_CASE("signature of restriction and orbit class") {
    auto c11 = ctx(1, 1);
    CHECK(signature_of_restriction(*c11, Subspace::span(2, {pair_sum(2, 0, 1)})) ==
          SignatureTriple{0, 0, 1});

    auto c12 = ctx(1, 2);
    CHECK(signature_of_restriction(*c12, Subspace::span(3, {unit(3, 0)})) ==
          SignatureTriple{1, 0, 0});

    auto c33 = ctx(3, 3);
    const Subspace plane = Subspace::span(6, {unit(6, 0), pair_sum(6, 1, 3)});
    CHECK(signature_of_restriction(*c33, plane) == SignatureTriple{1, 0, 1});
    CHECK(k_orbit_class(*c33, plane) == std::make_pair<std::size_t, std::size_t>(1, 0));
}

TEST_CASE("stabilizers of distinguished planes") {
    // the null line in the (1,1) context is stabilized only by zero
    auto c11 = ctx(1, 1);
    CHECK(stabilizer_in_k(*c11, Subspace::span(2, {pair_sum(2, 0, 1)})).dim() == 0);

    // the (1,2) null line: two-dimensional stabilizer with one nilpotent line
    auto c12 = ctx(1, 2);
    const LieSubalgebra v12 =
        stabilizer_in_k(*c12, Subspace::span(3, {pair_sum(3, 0, 1)}));
    CHECK(v12.dim() == 2);
    CHECK(v12.contains(ExactMatrix::diagonal({Scalar(1), Scalar(1), Scalar(-2)})));
    CHECK(v12.contains(ExactMatrix::unit(3, 1, 2)));

    // a positive line in the (2,2) context: codimension one in k
    auto c22 = ctx(2, 2);
    CHECK(stabilizer_in_k(*c22, Subspace::span(4, {unit(4, 0)})).dim() ==
          c22->k().dim() - 1);
}

TEST_CASE("hypersurface orbit report (1,2,1,0,0)") {
    const OrbitReport r = orbit_report(OrbitDescriptor(1, 2, 1, 0, 0));
    CHECK(r.dims.k0 == 4);
    CHECK(r.dims.v0 == 1);
    CHECK(r.dims.v == 2);
    CHECK(r.dims.m0_real == 3);
    CHECK(r.dims.mminus_complex == 2);
    CHECK(r.oracle.n == 1);
    CHECK(r.oracle.k == 1);
    CHECK(r.formula.n == 1);
    CHECK(r.formula.k == 1);
    CHECK(r.formula.mu == 0);
    CHECK(r.discrepancies.empty());
    CHECK(r.flags.n_reductive);
    CHECK(r.flags.hnr);
    CHECK(r.hnr_verdict == Verdict::yes);
    CHECK(r.flags.minimal);
    CHECK_FALSE(r.flags.open_orbit);
    CHECK_FALSE(r.flags.totally_real);
}

TEST_CASE("open orbit report (2,2,1,1,0)") {
    const OrbitReport r = orbit_report(OrbitDescriptor(2, 2, 1, 1, 0));
    CHECK(r.flags.open_orbit);
    CHECK(r.formula.n == 1);
    CHECK(r.formula.k == 0);
    CHECK(r.oracle.n == 1);
    CHECK(r.oracle.k == 0);
    CHECK(r.discrepancies.empty());
    CHECK(r.flags.n_reductive);
    CHECK(r.flags.hnr);
}

TEST_CASE("mixed-regime orbit (2,2,2,1,0) reports its discrepancies") {
    const OrbitReport r = orbit_report(OrbitDescriptor(2, 2, 2, 1, 0));
    CHECK(r.oracle.n == 2);
    CHECK(r.oracle.k == 1);
    CHECK(r.formula.n == 1);
    CHECK(r.formula.k == 2);
    REQUIRE(r.discrepancies.size() == 2);
    CHECK(r.discrepancies[0].field == "n");
    CHECK(r.discrepancies[0].formula_value == 1);
    CHECK(r.discrepancies[0].oracle_value == 2);
    CHECK(r.discrepancies[1].field == "k");
    CHECK(r.discrepancies[1].formula_value == 2);
    CHECK(r.discrepancies[1].oracle_value == 1);
    // the dimension identities hold with the oracle values regardless
    CHECK(r.dims.m0_real == 2 * r.oracle.n + r.oracle.k);
    CHECK(r.dims.mminus_complex == r.oracle.n + r.oracle.k);
}

TEST_CASE("formulas agree with the oracle when a c = 0 and b c = 0") {
    auto c22 = ctx(2, 2);
    for (std::size_t m = 1; m <= 3; ++m)
        for (const OrbitDescriptor& d : enumerate_orbits(2, 2, m)) {
            const OrbitReport r = orbit_report(c22, d, {.with_hnr = false});
            CHECK(r.flags.n_reductive);
            if (d.a * d.c() == 0 && d.b * d.c() == 0)
                CHECK(r.discrepancies.empty());
            CHECK((d.c() == 0) == (r.oracle.k == 0));
            CHECK(r.flags.totally_real == (r.oracle.n == 0));
        }
}

TEST_CASE("duality catalog pairs every orbit with certificates") {
    const auto cat11 = duality_catalog(1, 1, 1);
    REQUIRE(cat11.size() == 3);
    CHECK(cat11[0].plus_tag == "M+(0,0)");
    CHECK(cat11[0].minus_tag == "M-(0,0)");
    CHECK(cat11[0].signature == SignatureTriple{0, 0, 1});
    CHECK(cat11[0].minimal);

    const auto cat12 = duality_catalog(1, 2, 1);
    REQUIRE(cat12.size() == 3);
    for (const auto& e : cat12) {
        CHECK(e.intersection == std::make_pair(e.descriptor.a, e.descriptor.b));
        CHECK(e.open_orbit == (e.descriptor.c() == 0));
    }
    CHECK(cat12[0].minimal);       // (0,0) null lines
    CHECK_FALSE(cat12[1].minimal); // (0,1) negative lines, open
    CHECK(cat12[1].open_orbit);
    CHECK(cat12[2].open_orbit); // (1,0) positive lines
}

TEST_CASE("orbit algebra rejects a mismatched context") {
    CHECK_THROWS_AS(orbit_algebra(ctx(2, 2), OrbitDescriptor(1, 2, 1, 0, 0)),
                    crkit::invalid_input);
    CHECK_THROWS_AS(orbit_algebra(nullptr, OrbitDescriptor(1, 2, 1, 0, 0)),
                    crkit::invalid_input);
}
