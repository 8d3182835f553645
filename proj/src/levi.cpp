#include "crkit/levi.hpp"

#include "crkit/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace crkit::levi {

namespace {

ExactMatrix matrix_from_realified(const std::vector<Scalar>& row, std::size_t n) {
    return ExactMatrix::from_flat(n, n, exact::unrealify_vector(row));
}

// -Re tr(XY) on realified coordinates; real-bilinear.
Scalar kappa_realified(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                       std::size_t n) {
    const Scalar full = cralg::kappa(matrix_from_realified(a, n),
                                     matrix_from_realified(b, n));
    return Scalar(full.re);
}

ExactMatrix gram_core(const CRAlgebra& a, const ExactMatrix& t) {
    const auto zs = a.nilradical_part().basis_matrices();
    const std::size_t d = zs.size();
    const Scalar half = Scalar(1) / Scalar(2);
    ExactMatrix g(d, d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            const ExactMatrix br = bracket(a.context().conjugate(zs[k]), zs[j]);
            g(j, k) = half * cralg::kappa(t, Scalar::i() * br);
        }
    if (!exact::is_hermitian(g))
        throw internal_inconsistency("levi_gram: Gram matrix is not Hermitian");
    return g;
}

} // namespace

Subspace characteristic_space(const CRAlgebra& a) {
    if (!a.is_n_reductive())
        throw invalid_input("characteristic_space: algebra is not n-reductive");
    const auto& ctx = a.context();
    const std::size_t n = ctx.n_total();
    const Subspace sum0 = ctx.real_points(a.v().space().sum(a.v_bar().space()));
    const Subspace m0 = ctx.k0_realified().orthogonal_complement_within(
        sum0, [n](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
            return kappa_realified(x, y, n);
        });
    if (m0.dim() != a.cr_codimension())
        throw internal_inconsistency(
            "characteristic_space: dimension differs from the CR codimension");
    return m0;
}

ExactMatrix levi_gram(const CRAlgebra& a, const ExactMatrix& t) {
    const Subspace m0 = characteristic_space(a); // also checks n-reductivity
    if (t.rows() != a.context().n_total() || t.cols() != t.rows())
        throw invalid_input("levi_gram: direction has the wrong shape");
    if (t.is_zero()) throw invalid_input("levi_gram: direction must be nonzero");
    if (!m0.contains(exact::realify_vector(t.flatten())))
        throw invalid_input("levi_gram: direction is not in the characteristic space");
    return gram_core(a, t);
}

LeviReport levi_report(const CRAlgebra& a, const std::vector<Scalar>& t_coords) {
    const Subspace m0 = characteristic_space(a);
    if (t_coords.size() != m0.dim())
        throw invalid_input("levi_report: coordinate count differs from dim m_0");
    const std::size_t n = a.context().n_total();
    ExactMatrix t = ExactMatrix::zero(n, n);
    for (std::size_t i = 0; i < t_coords.size(); ++i) {
        if (!t_coords[i].is_real())
            throw invalid_input("levi_report: coordinates must be real");
        t = t + t_coords[i] * matrix_from_realified(m0.basis_row(i), n);
    }
    if (t.is_zero()) throw invalid_input("levi_report: direction must be nonzero");
    LeviReport r;
    r.t_coords = t_coords;
    r.t = t;
    r.gram = gram_core(a, t);
    r.signature = hermitian_signature(r.gram);
    r.witt = witt_index(r.signature);
    return r;
}

std::size_t witt_index(const SignatureTriple& s) {
    return std::min(s.plus, s.minus);
}

bool is_q_pseudoconcave_at(const std::vector<LeviReport>& reports, std::size_t q) {
    return std::all_of(reports.begin(), reports.end(),
                       [q](const LeviReport& r) { return r.witt >= q; });
}

PseudoconcavityEstimate pseudoconcavity_estimate(const CRAlgebra& a, SamplingPlan plan) {
    PseudoconcavityEstimate out;
    out.plan = plan;
    const Subspace m0 = characteristic_space(a);
    const std::size_t d = m0.dim();
    if (a.nilradical_part().dim() == 0 || d == 0) return out;

    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> dirs;
    auto push = [&](std::vector<long> c) {
        if (dirs.size() >= plan.count) return;
        if (std::all_of(c.begin(), c.end(), [](long v) { return v == 0; })) return;
        if (seen.insert(c).second) dirs.push_back(std::move(c));
    };
    for (std::size_t i = 0; i < d; ++i)
        for (long s : {1L, -1L}) {
            std::vector<long> c(d, 0);
            c[i] = s;
            push(std::move(c));
        }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (long s : {1L, -1L}) {
                std::vector<long> c(d, 0);
                c[i] = 1;
                c[j] = s;
                push(std::move(c));
            }
    std::mt19937_64 rng(plan.seed);
    std::size_t guard = 0;
    while (dirs.size() < plan.count && guard++ < 64 * plan.count) {
        std::vector<long> c(d);
        for (auto& v : c) v = static_cast<long>(rng() % 7) - 3;
        push(std::move(c));
    }

    bool first = true;
    for (const auto& c : dirs) {
        std::vector<Scalar> coords(d);
        for (std::size_t i = 0; i < d; ++i) coords[i] = Scalar(c[i]);
        LeviReport r = levi_report(a, coords);
        if (first || r.witt < out.sampled_min) out.sampled_min = r.witt;
        first = false;
        out.reports.push_back(std::move(r));
    }
    return out;
}

SignatureTriple hessian_signature(const SignatureTriple& levi, std::size_t k_cr) {
    const std::size_t total = levi.plus + levi.minus + levi.zero + k_cr;
    return {levi.plus + k_cr, levi.minus, total - (levi.plus + k_cr) - levi.minus};
}

CohomologyWindow cohomology_window(std::size_t n, std::size_t q) {
    if (q > n) throw invalid_input("cohomology_window: need q <= n");
    CohomologyWindow w;
    w.low_max = static_cast<long long>(q) - 1;
    w.high_min = static_cast<long long>(n) - static_cast<long long>(q) + 1;
    return w;
}

} // namespace crkit::levi
