#pragma once

#include "crkit/liealg.hpp"
#include "crkit/roots.hpp"

#include <cstddef>
#include <memory>

namespace crkit::cralg {

using exact::ExactMatrix;
using exact::Scalar;
using exact::Subspace;
using liealg::LieSubalgebra;
using roots::Verdict;

/// The ambient pair (k, k_0) for signature (p, q): k = s(gl_p + gl_q) inside
/// sl_{p+q}, with the compact real form k_0 of anti-Hermitian matrices cut
/// out by the conjugation X -> -X^dagger. q = 0 degenerates to k = sl_p.
/// The invariant scalar product on k_0 is kappa(X, Y) = -Re tr(XY), extended
/// complex-bilinearly to k as -tr(XY).
class RealFormContext {
public:
    RealFormContext(std::size_t p, std::size_t q);

    std::size_t p() const { return p_; }
    std::size_t q() const { return q_; }
    std::size_t n_total() const { return p_ + q_; }
    const ExactMatrix& hermitian_form() const { return form_; }
    const LieSubalgebra& k() const { return k_; }

    /// -X^dagger; the involution fixing exactly the anti-Hermitian part of k.
    /// Throws invalid_input unless X lies in k.
    ExactMatrix conjugate(const ExactMatrix& x) const;

    /// k_0 as a real subspace, in realified coordinates (length 2 n^2).
    const Subspace& k0_realified() const { return k0_real_; }
    std::size_t dim_k0() const { return k0_real_.dim(); }

    /// Real points of a conjugation-stable-or-not complex subspace of k:
    /// {X in s : conjugate(X) = X}, realified.
    Subspace real_points(const Subspace& s) const;

private:
    std::size_t p_, q_;
    ExactMatrix form_;
    LieSubalgebra k_;
    Subspace k0_real_;
};

/// A complex subalgebra v of k together with everything the CR invariants
/// need: the conjugate algebra, the reductive part v & conj(v), the
/// nilradical, and the CR dimension/codimension pair. All caches are
/// computed (and cross-verified) at construction.
class CRAlgebra {
public:
    CRAlgebra(std::shared_ptr<const RealFormContext> ctx, LieSubalgebra v);

    const RealFormContext& context() const { return *ctx_; }
    const std::shared_ptr<const RealFormContext>& context_ptr() const { return ctx_; }
    const LieSubalgebra& v() const { return v_; }
    const LieSubalgebra& v_bar() const { return v_bar_; }
    const LieSubalgebra& reductive_part() const { return v_r_; }
    const LieSubalgebra& nilradical_part() const { return v_n_; }

    /// v & k_0, realified.
    const Subspace& v0_realified() const { return v0_real_; }

    bool is_n_reductive() const { return n_reductive_; }
    std::size_t cr_dimension() const { return n_cr_; }
    std::size_t cr_codimension() const { return k_cr_; }

    /// Normalizer q = {Z in k : [Z, v_n] in v_n} and its parabolicity
    /// verdict. Requires n-reductivity. Not cached: recomputed per call.
    Verdict is_hnr(const roots::IsParabolicOptions& opts = {}) const;
    LieSubalgebra hnr_normalizer() const;

private:
    std::shared_ptr<const RealFormContext> ctx_;
    LieSubalgebra v_;
    LieSubalgebra v_bar_;
    LieSubalgebra v_r_;
    LieSubalgebra v_n_;
    Subspace v0_real_;
    bool n_reductive_ = false;
    std::size_t n_cr_ = 0;
    std::size_t k_cr_ = 0;
};

/// Invariant scalar product -tr(XY); complex-bilinear, real-valued (and equal
/// to -Re tr(XY)) on anti-Hermitian arguments, positive definite on k_0.
Scalar kappa(const ExactMatrix& x, const ExactMatrix& y);

enum class FiberType { totally_real, complex, mixed };

/// e includes into f compatibly with the CR structures iff e is contained
/// in f.
bool check_cr_map(const RealFormContext& ctx, const LieSubalgebra& e,
                  const LieSubalgebra& f);

/// The induced equivariant map is a CR submersion iff f = e + (f & conj(f)).
bool check_submersion(const RealFormContext& ctx, const LieSubalgebra& e,
                      const LieSubalgebra& f);

/// Classifies the fibers of the submersion attached to e inside f:
/// totally real iff e & conj(f) = conj(e) & f = e & conj(e); complex iff
/// e & conj(f) + conj(e) & f = f & conj(f); mixed otherwise.
FiberType fiber_type(const RealFormContext& ctx, const LieSubalgebra& e,
                     const LieSubalgebra& f);

} // namespace crkit::cralg
