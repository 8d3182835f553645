#include "crkit/cralg.hpp"

#include "crkit/errors.hpp"

#include <string>
#include <utility>

namespace crkit::cralg {

namespace {

std::size_t checked_total(std::size_t p, std::size_t q) {
    if (p < 1 || p + q < 2)
        throw invalid_input("RealFormContext: need p >= 1 and p + q >= 2");
    return p + q;
}

ExactMatrix signature_form(std::size_t p, std::size_t q) {
    ExactMatrix f = ExactMatrix::identity(p + q);
    for (std::size_t j = p; j < p + q; ++j) f(j, j) = Scalar(-1);
    return f;
}

// s(gl_p + gl_q): off-diagonal entries inside the two diagonal blocks plus
// every traceless diagonal.
Subspace k_span(std::size_t p, std::size_t q) {
    const std::size_t n = p + q;
    std::vector<std::vector<Scalar>> rows;
    auto block = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = lo; j < hi; ++j)
                if (i != j) rows.push_back(ExactMatrix::unit(n, i, j).flatten());
    };
    block(0, p);
    block(p, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        ExactMatrix d = ExactMatrix::zero(n, n);
        d(i, i) = Scalar(1);
        d(i + 1, i + 1) = Scalar(-1);
        rows.push_back(d.flatten());
    }
    return Subspace::span(n * n, rows);
}

// Anti-Hermitian basis of k over the reals: E_ij - E_ji and i(E_ij + E_ji)
// for pairs inside each block, i(E_ii - E_{i+1,i+1}) on the diagonal.
Subspace k0_span(std::size_t p, std::size_t q) {
    const std::size_t n = p + q;
    std::vector<std::vector<Scalar>> rows;
    auto add = [&](const ExactMatrix& m) {
        rows.push_back(exact::realify_vector(m.flatten()));
    };
    auto block = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = i + 1; j < hi; ++j) {
                ExactMatrix a = ExactMatrix::zero(n, n);
                a(i, j) = Scalar(1);
                a(j, i) = Scalar(-1);
                add(a);
                ExactMatrix b = ExactMatrix::zero(n, n);
                b(i, j) = Scalar::i();
                b(j, i) = Scalar::i();
                add(b);
            }
    };
    block(0, p);
    block(p, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        ExactMatrix d = ExactMatrix::zero(n, n);
        d(i, i) = Scalar::i();
        d(i + 1, i + 1) = Scalar(0) - Scalar::i();
        add(d);
    }
    return Subspace::span(2 * n * n, rows);
}

LieSubalgebra closed_or_inconsistent(std::size_t n, const Subspace& s, const char* what) {
    if (!liealg::is_bracket_closed(n, s))
        throw internal_inconsistency(std::string(what) + " is not bracket-closed");
    return LieSubalgebra::from_span(n, s);
}

Subspace conj_span(const RealFormContext& ctx, const LieSubalgebra& a) {
    const std::size_t n = ctx.n_total();
    std::vector<std::vector<Scalar>> rows;
    for (const auto& m : a.basis_matrices())
        rows.push_back(ctx.conjugate(m).flatten());
    return Subspace::span(n * n, rows);
}

void check_pair(const RealFormContext& ctx, const LieSubalgebra& e,
                const LieSubalgebra& f, const char* what) {
    const std::size_t n = ctx.n_total();
    if (e.ambient_n() != n || f.ambient_n() != n)
        throw invalid_input(std::string(what) + ": ambient size mismatch with context");
    if (!ctx.k().contains(e) || !ctx.k().contains(f))
        throw invalid_input(std::string(what) + ": subalgebras must lie in k");
}

} // namespace

RealFormContext::RealFormContext(std::size_t p, std::size_t q)
    : p_(p),
      q_(q),
      form_(signature_form(p, checked_total(p, q) - p)),
      k_(LieSubalgebra::from_span(p + q, k_span(p, q))),
      k0_real_(k0_span(p, q)) {}

ExactMatrix RealFormContext::conjugate(const ExactMatrix& x) const {
    if (!k_.contains(x))
        throw invalid_input("conjugate: matrix does not lie in k");
    return -x.adjoint();
}

Subspace RealFormContext::real_points(const Subspace& s) const {
    if (!k_.space().contains(s))
        throw invalid_input("real_points: subspace does not lie in k");
    return exact::realify_span(s).intersect(k0_real_);
}

CRAlgebra::CRAlgebra(std::shared_ptr<const RealFormContext> ctx, LieSubalgebra v)
    : ctx_(std::move(ctx)),
      v_(std::move(v)),
      v_bar_(LieSubalgebra::zero(1)),
      v_r_(LieSubalgebra::zero(1)),
      v_n_(LieSubalgebra::zero(1)),
      v0_real_(1) {
    if (!ctx_) throw invalid_input("CRAlgebra: null context");
    const std::size_t n = ctx_->n_total();
    if (v_.ambient_n() != n)
        throw invalid_input("CRAlgebra: ambient size mismatch with context");
    if (!ctx_->k().contains(v_))
        throw invalid_input("CRAlgebra: v is not contained in k");

    // Conjugation is an automorphism, so these spans must close; intersecting
    // two subalgebras must close as well.
    v_bar_ = closed_or_inconsistent(n, conj_span(*ctx_, v_), "CRAlgebra: conjugate span");
    v_r_ = closed_or_inconsistent(n, v_.space().intersect(v_bar_.space()),
                                  "CRAlgebra: v & conj(v)");
    v_n_ = liealg::nilradical(v_);
    v0_real_ = ctx_->real_points(v_.space());

    // v & conj(v) is conjugation-stable, hence spanned by its real points.
    if (conj_span(*ctx_, v_r_) != v_r_.space())
        throw internal_inconsistency("CRAlgebra: v & conj(v) is not conjugation-stable");
    const Subspace vr0 = ctx_->real_points(v_r_.space());
    if (vr0.dim() != v_r_.dim() || vr0 != v0_real_)
        throw internal_inconsistency(
            "CRAlgebra: real points of v & conj(v) have the wrong dimension");

    n_cr_ = v_.dim() - v_r_.dim();
    const std::size_t used = v0_real_.dim() + 2 * n_cr_;
    if (used > ctx_->dim_k0())
        throw internal_inconsistency("CRAlgebra: v + conj(v) overflows k");
    k_cr_ = ctx_->dim_k0() - used;

    n_reductive_ = v_r_.space().intersect(v_n_.space()).is_zero() &&
                   v_r_.space().sum(v_n_.space()) == v_.space();
}

LieSubalgebra CRAlgebra::hnr_normalizer() const {
    return liealg::normalizer_of_subspace(ctx_->k(), v_n_.space());
}

Verdict CRAlgebra::is_hnr(const roots::IsParabolicOptions& opts) const {
    if (!n_reductive_)
        throw invalid_input("is_hnr: algebra is not n-reductive");
    const LieSubalgebra q = hnr_normalizer();
    auto sigma = [ctx = ctx_](const ExactMatrix& x) { return ctx->conjugate(x); };
    return roots::is_parabolic(ctx_->k(), q, sigma, opts);
}

Scalar kappa(const ExactMatrix& x, const ExactMatrix& y) {
    return Scalar(0) - (x * y).trace();
}

bool check_cr_map(const RealFormContext& ctx, const LieSubalgebra& e,
                  const LieSubalgebra& f) {
    check_pair(ctx, e, f, "check_cr_map");
    return f.space().contains(e.space());
}

bool check_submersion(const RealFormContext& ctx, const LieSubalgebra& e,
                      const LieSubalgebra& f) {
    check_pair(ctx, e, f, "check_submersion");
    const Subspace f_r = f.space().intersect(conj_span(ctx, f));
    return e.space().sum(f_r) == f.space();
}

FiberType fiber_type(const RealFormContext& ctx, const LieSubalgebra& e,
                     const LieSubalgebra& f) {
    check_pair(ctx, e, f, "fiber_type");
    const Subspace ebar = conj_span(ctx, e);
    const Subspace fbar = conj_span(ctx, f);
    const Subspace e_r = e.space().intersect(ebar);
    const Subspace f_r = f.space().intersect(fbar);
    if (!f_r.contains(e_r))
        throw invalid_input("fiber_type: e & conj(e) must be contained in f & conj(f)");
    const Subspace a = e.space().intersect(fbar);
    const Subspace b = ebar.intersect(f.space());
    if (a == e_r && b == e_r) return FiberType::totally_real;
    if (a.sum(b) == f_r) return FiberType::complex;
    return FiberType::mixed;
}

} // namespace crkit::cralg
