#pragma once

#include "crkit/cralg.hpp"
#include "crkit/forms.hpp"

#include <cstdint>
#include <vector>

namespace crkit::levi {

using cralg::CRAlgebra;
using exact::ExactMatrix;
using exact::Scalar;
using exact::Subspace;
using exact::hermitian_signature;
using SignatureTriple = exact::Signature;

/// The characteristic space m_0: the kappa-orthogonal complement of
/// (v + conj(v)) & k_0 inside k_0, in realified coordinates. Its dimension
/// always equals the CR codimension. Requires an n-reductive algebra.
Subspace characteristic_space(const CRAlgebra& a);

/// Scalar Levi form of a at the characteristic direction T, as the Hermitian
/// Gram matrix L_T(Z_j, Z_k) = 1/2 kappa(T, i [conj(Z_k), Z_j]) on the
/// canonical basis of the nilradical part. T must be a nonzero element of
/// m_0; the algebra must be n-reductive.
ExactMatrix levi_gram(const CRAlgebra& a, const ExactMatrix& t);

struct LeviReport {
    std::vector<Scalar> t_coords; // rational coordinates in the m_0 basis
    ExactMatrix t;                // the direction itself (anti-Hermitian)
    ExactMatrix gram;
    SignatureTriple signature;
    std::size_t witt = 0;
};

/// Assembles direction, Gram matrix, signature and Witt index from rational
/// coordinates with respect to the canonical basis of m_0.
LeviReport levi_report(const CRAlgebra& a, const std::vector<Scalar>& t_coords);

std::size_t witt_index(const SignatureTriple& s);

/// True iff every supplied direction has Witt index at least q. Lower-bound
/// semantics: a true answer certifies only the sampled directions.
bool is_q_pseudoconcave_at(const std::vector<LeviReport>& reports, std::size_t q);

struct SamplingPlan {
    std::uint64_t seed = 17;
    std::size_t count = 64;
};

struct PseudoconcavityEstimate {
    std::size_t sampled_min = 0;
    std::vector<LeviReport> reports;
    SamplingPlan plan;
};

/// Minimum Witt index over a deterministic set of rational directions in m_0:
/// signed unit vectors and pair sums first, then a seeded small-integer
/// lattice up to plan.count directions. An upper bound for the true
/// pseudoconcavity order; 0 by convention when the nilradical part or m_0
/// vanishes.
PseudoconcavityEstimate pseudoconcavity_estimate(const CRAlgebra& a,
                                                 SamplingPlan plan = {});

/// Signature of the transverse Hessian built from a Levi signature:
/// (plus + k_cr, minus, zero).
SignatureTriple hessian_signature(const SignatureTriple& levi, std::size_t k_cr);

/// Degrees j with j <= low_max or j >= high_min: the window {j < q or
/// j > n - q} where restriction maps in degree-j cohomology are isomorphisms.
struct CohomologyWindow {
    long long low_max = -1;
    long long high_min = 0;
    bool contains(long long j) const { return j <= low_max || j >= high_min; }
};

/// Requires q <= n.
CohomologyWindow cohomology_window(std::size_t n, std::size_t q);

} // namespace crkit::levi
