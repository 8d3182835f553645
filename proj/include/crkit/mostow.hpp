#pragma once

#include "crkit/cralg.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace crkit::mostow {

using cralg::CRAlgebra;
using Complex = std::complex<double>;
/// Row-major n x n complex matrix, flattened.
using NumericMatrix = std::vector<Complex>;

/// Tolerance for unitarity of the K_0 factor and for the matrix
/// exponential backend.
inline constexpr double kUnitaryTolerance = 1e-10;

/// Numeric snapshot of the direct-sum decomposition
/// k = k_0 + i m_0 + (i v_0 + v_n) attached to an n-reductive algebra:
/// basis matrices of each summand, converted once from the exact data.
struct Frame {
    std::size_t n = 0; // ambient matrix size
    std::vector<NumericMatrix> k0;
    std::vector<NumericMatrix> m0;
    std::vector<NumericMatrix> v0;
    std::vector<NumericMatrix> vn;

    /// Total real coordinate count dim k_0 + dim m_0 + dim v_0 + 2 dim v_n;
    /// always equals 2 dim k_0.
    std::size_t coordinate_count() const {
        return k0.size() + m0.size() + v0.size() + 2 * vn.size();
    }
};

/// Requires an n-reductive algebra (the decomposition does not exist
/// otherwise).
Frame make_frame(const CRAlgebra& a);

/// Linear combination sum_j c_j basis[j]; real coefficient overload lifts
/// through the same bases with real weights.
NumericMatrix lift(const std::vector<NumericMatrix>& basis, std::size_t n,
                   const std::vector<Complex>& coords);
NumericMatrix lift(const std::vector<NumericMatrix>& basis, std::size_t n,
                   const std::vector<double>& coords);

/// Matrix exponential (scaling-and-squaring with Pade).
NumericMatrix matrix_exp(const NumericMatrix& m, std::size_t n);

/// Point of K_0 x m_0 x v_0 x v_n: an explicit unitary x together with
/// coordinates in the frame bases (t, y real; z complex).
struct MostowPoint {
    NumericMatrix x;       // row-major n x n, unitary within kUnitaryTolerance
    std::vector<double> t; // m_0 coordinates
    std::vector<double> y; // v_0 coordinates
    std::vector<Complex> z; // v_n coordinates
};

/// x * exp(iT) * exp(iY) * exp(Z) with T, Y, Z the lifts of the coordinates
/// through the frame. Throws invalid_input on size mismatch, non-finite
/// data, or a non-unitary x.
NumericMatrix mostow_map(const Frame& f, const MostowPoint& p);
NumericMatrix mostow_map(const CRAlgebra& a, const MostowPoint& p);

struct ProbeFailure {
    std::size_t sample_index = 0;
    std::string reason;
};

struct ProbeOptions {
    double fd_step = 1e-6;        // central-difference step
    double rank_threshold = 1e-8; // full rank iff sigma_min exceeds this
    double unitary_tolerance = kUnitaryTolerance;
};

struct MostowProbeReport {
    std::size_t samples = 0;
    double radius = 0.0;
    double min_singular_value = 0.0;
    bool full_rank_everywhere = false;
    std::uint64_t seed = 0;
    std::vector<ProbeFailure> failures;
    ProbeOptions options;
};

/// Draws `samples` coordinate tuples (u, t, y, z) with every entry uniform
/// in [-radius, radius] (t rescaled so that kappa(T,T) < radius^2), then
/// evaluates the full central-difference Jacobian of
/// (u, t, y, z) -> exp(U) exp(iT) exp(iY) exp(Z) at each tuple and records
/// the smallest singular value seen. Bit-deterministic for a fixed seed.
/// A sample with non-finite numerics is recorded in failures and counts as
/// singular value 0. Requires an n-reductive algebra, radius > 0,
/// samples >= 1.
MostowProbeReport jacobian_probe(const CRAlgebra& a, double radius,
                                 std::size_t samples, std::uint64_t seed,
                                 const ProbeOptions& opts = {});

/// kappa(T,T) for the lift of t through the m_0 basis; nonnegative, exactly
/// 0 at t = 0.
double kappa_tt(const CRAlgebra& a, const std::vector<double>& t);

/// kappa(T,T) / (radius^2 - kappa(T,T)); requires kappa(T,T) < radius^2.
/// Grows without bound toward the tube boundary, vanishes exactly at t = 0.
double exhaustion_phi_tube(const CRAlgebra& a, const std::vector<double>& t,
                           double radius);

/// kappa(T,T) itself, an exhaustion in its own right in the
/// well-behaved-fibration case.
double exhaustion_phi_hnr(const CRAlgebra& a, const std::vector<double>& t);

} // namespace crkit::mostow
