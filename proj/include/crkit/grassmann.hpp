#pragma once

#include "crkit/cralg.hpp"
#include "crkit/levi.hpp"

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace crkit::grassmann {

using cralg::CRAlgebra;
using cralg::RealFormContext;
using exact::ExactMatrix;
using exact::Scalar;
using exact::Subspace;
using levi::SignatureTriple;
using liealg::LieSubalgebra;

/// Signature data (a, b) of an orbit of m-planes in the (p, q) context. The
/// admissibility condition is a + b <= m, max{0, m-q} <= a <= p and
/// max{0, m-p} <= b <= q; equivalently, all six derived block sizes
/// (a, c, p-a-c, b, c, q-b-c) with c = m-a-b are nonnegative.
struct OrbitDescriptor {
    OrbitDescriptor(std::size_t p, std::size_t q, std::size_t m, std::size_t a,
                    std::size_t b);

    std::size_t p, q, m, a, b;

    std::size_t c() const { return m - a - b; }
    std::array<std::size_t, 6> block_sizes() const;

    /// Condition (*) alone, without the (p, q, m) range checks.
    static bool admissible(std::size_t p, std::size_t q, std::size_t m,
                           std::size_t a, std::size_t b);

    friend bool operator==(const OrbitDescriptor& x, const OrbitDescriptor& y) {
        return x.p == y.p && x.q == y.q && x.m == y.m && x.a == y.a && x.b == y.b;
    }
};

/// All admissible (a, b) in lexicographic order. Requires 1 <= p <= q and
/// 1 <= m < p + q.
std::vector<OrbitDescriptor> enumerate_orbits(std::size_t p, std::size_t q,
                                              std::size_t m);

/// The distinguished m-plane: the first a positive basis vectors, the c null
/// sums e_{a+j} + e_{p+b+j}, and the first b negative basis vectors.
Subspace base_point(const OrbitDescriptor& d);

/// Exact signature of the restriction of the (p, q) Hermitian form to the
/// plane, computed from the Gram matrix of its canonical basis.
SignatureTriple signature_of_restriction(const RealFormContext& ctx,
                                         const Subspace& plane);

/// (dim plane & W_plus, dim plane & W_minus) for the coordinate splitting
/// W_plus = span{e_1..e_p}, W_minus = span{e_{p+1}..e_{p+q}}.
std::pair<std::size_t, std::size_t> k_orbit_class(const RealFormContext& ctx,
                                                  const Subspace& plane);

/// {X in k : X plane <= plane}, by exact linear algebra; verified closed.
LieSubalgebra stabilizer_in_k(const RealFormContext& ctx, const Subspace& plane);

/// Stabilizer CR algebra of the certified base point of d. Throws
/// internal_inconsistency if the base point fails either membership
/// certificate (signature and intersection class both equal to (a, b)).
CRAlgebra orbit_algebra(std::shared_ptr<const RealFormContext> ctx,
                        const OrbitDescriptor& d);

struct Discrepancy {
    std::string field;
    long long formula_value = 0;
    long long oracle_value = 0;
};

struct OrbitReport {
    OrbitDescriptor descriptor;
    struct Dims {
        std::size_t k0 = 0;             // dim_R k_0
        std::size_t v0 = 0;             // dim_R v & k_0
        std::size_t v = 0;              // dim_C v
        std::size_t m0_real = 0;        // k0 - v0
        std::size_t mminus_complex = 0; // dim_C k - dim_C v
    } dims;
    struct Counts {
        std::size_t n = 0;
        std::size_t k = 0;
    };
    Counts oracle;
    struct Formula {
        std::size_t n = 0;
        std::size_t k = 0;
        std::size_t mu = 0;
    } formula;
    struct Flags {
        bool n_reductive = false;
        bool hnr = false;
        bool open_orbit = false;
        bool minimal = false;
        bool totally_real = false;
    } flags;
    roots::Verdict hnr_verdict = roots::Verdict::undetermined;
    std::vector<Discrepancy> discrepancies;
};

struct OrbitReportOptions {
    /// Skip the (comparatively expensive) parabolicity certification; the
    /// hnr flag is then false and the verdict undetermined.
    bool with_hnr = true;
};

/// Closed-form block counts n, k, mu for the descriptor.
OrbitReport::Formula formula_counts(const OrbitDescriptor& d);

/// Full per-orbit record: certified base point, exact stabilizer invariants,
/// closed-form comparison, flags, and the two dimension identities
/// dim_R M_0 = 2n + k and dim_C M_minus = n + k (violations raise
/// internal_inconsistency; formula mismatches only append discrepancies).
OrbitReport orbit_report(std::shared_ptr<const RealFormContext> ctx,
                         const OrbitDescriptor& d, OrbitReportOptions opts = {});
OrbitReport orbit_report(const OrbitDescriptor& d, OrbitReportOptions opts = {});

struct DualityEntry {
    OrbitDescriptor descriptor;
    std::string plus_tag;  // G_0-orbit label M+(a,b)
    std::string minus_tag; // K-orbit label M-(a,b)
    SignatureTriple signature;
    std::pair<std::size_t, std::size_t> intersection;
    bool minimal = false;
    bool open_orbit = false;
};

/// One entry per orbit: the base point witnesses membership in both dual
/// orbits, making the pairing a bijection by construction.
std::vector<DualityEntry> duality_catalog(std::size_t p, std::size_t q,
                                          std::size_t m);

} // namespace crkit::grassmann
