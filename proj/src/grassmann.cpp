#include "crkit/grassmann.hpp"

#include "crkit/errors.hpp"

#include <algorithm>

namespace crkit::grassmann {

namespace {

std::vector<Scalar> apply_matrix(const ExactMatrix& x, const std::vector<Scalar>& v) {
    std::vector<Scalar> out(x.rows());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out[i] += x(i, j) * v[j];
    return out;
}

void check_ranges(std::size_t p, std::size_t q, std::size_t m) {
    if (p < 1 || p > q)
        throw invalid_input("orbit parameters: need 1 <= p <= q");
    if (m < 1 || m >= p + q)
        throw invalid_input("orbit parameters: need 1 <= m < p + q");
}

std::string tag(char sign, const OrbitDescriptor& d) {
    return std::string("M") + sign + "(" + std::to_string(d.a) + "," +
           std::to_string(d.b) + ")";
}

} // namespace

bool OrbitDescriptor::admissible(std::size_t p, std::size_t q, std::size_t m,
                                 std::size_t a, std::size_t b) {
    if (a + b > m || a > p || b > q) return false;
    if (m > q && a < m - q) return false;
    if (m > p && b < m - p) return false;
    return true;
}

OrbitDescriptor::OrbitDescriptor(std::size_t p_, std::size_t q_, std::size_t m_,
                                 std::size_t a_, std::size_t b_)
    : p(p_), q(q_), m(m_), a(a_), b(b_) {
    check_ranges(p, q, m);
    if (!admissible(p, q, m, a, b))
        throw invalid_input("orbit parameters: (a,b) fails the admissibility condition");
}

std::array<std::size_t, 6> OrbitDescriptor::block_sizes() const {
    const std::size_t cc = c();
    return {a, cc, p - a - cc, b, cc, q - b - cc};
}

std::vector<OrbitDescriptor> enumerate_orbits(std::size_t p, std::size_t q,
                                              std::size_t m) {
    check_ranges(p, q, m);
    std::vector<OrbitDescriptor> out;
    for (std::size_t a = 0; a <= p; ++a)
        for (std::size_t b = 0; b <= q; ++b)
            if (OrbitDescriptor::admissible(p, q, m, a, b))
                out.emplace_back(p, q, m, a, b);
    return out;
}

Subspace base_point(const OrbitDescriptor& d) {
    const std::size_t n = d.p + d.q;
    std::vector<std::vector<Scalar>> rows;
    auto unit = [&](std::size_t i) {
        std::vector<Scalar> v(n);
        v[i] = Scalar(1);
        return v;
    };
    for (std::size_t i = 0; i < d.a; ++i) rows.push_back(unit(i));
    for (std::size_t j = 0; j < d.c(); ++j) {
        std::vector<Scalar> v(n);
        v[d.a + j] = Scalar(1);
        v[d.p + d.b + j] = Scalar(1);
        rows.push_back(v);
    }
    for (std::size_t i = 0; i < d.b; ++i) rows.push_back(unit(d.p + i));
    Subspace plane = Subspace::span(n, rows);
    if (plane.dim() != d.m)
        throw internal_inconsistency("base_point: plane has the wrong dimension");
    return plane;
}

SignatureTriple signature_of_restriction(const RealFormContext& ctx,
                                         const Subspace& plane) {
    const std::size_t n = ctx.n_total();
    if (plane.ambient_dim() != n)
        throw invalid_input("signature_of_restriction: ambient dimension mismatch");
    const std::size_t m = plane.dim();
    ExactMatrix gram(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto wi = plane.basis_row(i);
        for (std::size_t j = 0; j < m; ++j) {
            const auto wj = plane.basis_row(j);
            Scalar s;
            for (std::size_t t = 0; t < n; ++t)
                s += ctx.hermitian_form()(t, t) * wi[t] * wj[t].conj();
            gram(i, j) = s;
        }
    }
    return exact::hermitian_signature(gram);
}

std::pair<std::size_t, std::size_t> k_orbit_class(const RealFormContext& ctx,
                                                  const Subspace& plane) {
    const std::size_t n = ctx.n_total();
    if (plane.ambient_dim() != n)
        throw invalid_input("k_orbit_class: ambient dimension mismatch");
    std::vector<std::vector<Scalar>> plus_rows, minus_rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> v(n);
        v[i] = Scalar(1);
        (i < ctx.p() ? plus_rows : minus_rows).push_back(v);
    }
    const Subspace w_plus = Subspace::span(n, plus_rows);
    const Subspace w_minus = Subspace::span(n, minus_rows);
    return {plane.intersect(w_plus).dim(), plane.intersect(w_minus).dim()};
}

LieSubalgebra stabilizer_in_k(const RealFormContext& ctx, const Subspace& plane) {
    const std::size_t n = ctx.n_total();
    if (plane.ambient_dim() != n)
        throw invalid_input("stabilizer_in_k: ambient dimension mismatch");
    const auto gens = ctx.k().basis_matrices();
    const std::size_t dimk = gens.size();
    const std::size_t m = plane.dim();

    // coefficient vectors c with sum_i c_i X_i w_j in the plane for all j
    ExactMatrix sys(m * n, dimk);
    for (std::size_t i = 0; i < dimk; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const auto residue = plane.reduce(apply_matrix(gens[i], plane.basis_row(j)));
            for (std::size_t t = 0; t < n; ++t) sys(j * n + t, i) = residue[t];
        }

    std::vector<std::vector<Scalar>> rows;
    for (const auto& c : exact::kernel_basis(sys)) {
        ExactMatrix x(n, n);
        for (std::size_t i = 0; i < dimk; ++i)
            if (!c[i].is_zero()) x = x + c[i] * gens[i];
        rows.push_back(x.flatten());
    }
    const Subspace span = Subspace::span(n * n, rows);
    if (!liealg::is_bracket_closed(n, span))
        throw internal_inconsistency("stabilizer_in_k: stabilizer span is not closed");
    return LieSubalgebra::from_span(n, span);
}

CRAlgebra orbit_algebra(std::shared_ptr<const RealFormContext> ctx,
                        const OrbitDescriptor& d) {
    if (!ctx || ctx->p() != d.p || ctx->q() != d.q)
        throw invalid_input("orbit_algebra: context does not match the descriptor");
    const Subspace plane = base_point(d);
    const SignatureTriple sig = signature_of_restriction(*ctx, plane);
    if (sig.plus != d.a || sig.minus != d.b)
        throw internal_inconsistency("orbit_algebra: base point fails the signature certificate");
    const auto cls = k_orbit_class(*ctx, plane);
    if (cls.first != d.a || cls.second != d.b)
        throw internal_inconsistency("orbit_algebra: base point fails the intersection certificate");
    return CRAlgebra(ctx, stabilizer_in_k(*ctx, plane));
}

OrbitReport::Formula formula_counts(const OrbitDescriptor& d) {
    const auto nn = d.block_sizes();
    OrbitReport::Formula f;
    f.n = nn[0] * nn[2] + nn[1] * nn[2] + nn[3] * nn[5] + nn[1] * nn[5];
    f.k = nn[1] * (nn[0] + nn[1] + nn[3]);
    f.mu = std::min(nn[2], nn[5]);
    return f;
}

OrbitReport orbit_report(std::shared_ptr<const RealFormContext> ctx,
                         const OrbitDescriptor& d, OrbitReportOptions opts) {
    const CRAlgebra alg = orbit_algebra(ctx, d);

    OrbitReport r{d};
    r.dims.k0 = ctx->dim_k0();
    r.dims.v0 = alg.v0_realified().dim();
    r.dims.v = alg.v().dim();
    r.dims.m0_real = r.dims.k0 - r.dims.v0;
    r.dims.mminus_complex = ctx->k().dim() - r.dims.v;
    r.oracle.n = alg.cr_dimension();
    r.oracle.k = alg.cr_codimension();
    r.formula = formula_counts(d);

    if (r.dims.m0_real != 2 * r.oracle.n + r.oracle.k)
        throw internal_inconsistency("orbit_report: dim M_0 differs from 2n + k");
    if (r.dims.mminus_complex != r.oracle.n + r.oracle.k)
        throw internal_inconsistency("orbit_report: dim M_minus differs from n + k");

    r.flags.n_reductive = alg.is_n_reductive();
    if (opts.with_hnr && r.flags.n_reductive) {
        r.hnr_verdict = alg.is_hnr();
        r.flags.hnr = r.hnr_verdict == roots::Verdict::yes;
    }
    r.flags.open_orbit = d.c() == 0;
    const std::size_t a0 = d.m > d.q ? d.m - d.q : 0;
    const std::size_t b0 = d.m > d.p ? d.m - d.p : 0;
    r.flags.minimal = d.a == a0 && d.b == b0;
    r.flags.totally_real = r.oracle.n == 0;

    if (r.formula.n != r.oracle.n)
        r.discrepancies.push_back({"n", static_cast<long long>(r.formula.n),
                                   static_cast<long long>(r.oracle.n)});
    if (r.formula.k != r.oracle.k)
        r.discrepancies.push_back({"k", static_cast<long long>(r.formula.k),
                                   static_cast<long long>(r.oracle.k)});
    return r;
}

OrbitReport orbit_report(const OrbitDescriptor& d, OrbitReportOptions opts) {
    return orbit_report(std::make_shared<const RealFormContext>(d.p, d.q), d, opts);
}

std::vector<DualityEntry> duality_catalog(std::size_t p, std::size_t q,
                                          std::size_t m) {
    const RealFormContext ctx(p, q);
    std::vector<DualityEntry> out;
    for (const OrbitDescriptor& d : enumerate_orbits(p, q, m)) {
        const Subspace plane = base_point(d);
        DualityEntry e{d, tag('+', d), tag('-', d),
                       signature_of_restriction(ctx, plane),
                       k_orbit_class(ctx, plane)};
        if (e.signature.plus != d.a || e.signature.minus != d.b ||
            e.intersection != std::make_pair(d.a, d.b))
            throw internal_inconsistency("duality_catalog: base point fails certification");
        const std::size_t a0 = m > q ? m - q : 0;
        const std::size_t b0 = m > p ? m - p : 0;
        e.minimal = d.a == a0 && d.b == b0;
        e.open_orbit = d.c() == 0;
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace crkit::grassmann
