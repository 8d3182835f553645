#include "crkit/mostow.hpp"

#include "crkit/errors.hpp"
#include "crkit/levi.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <utility>

namespace crkit::mostow {
namespace {

using exact::Scalar;
using exact::Subspace;
using EMat = Eigen::MatrixXcd;

double to_double(const exact::Rational& r) { return r.template convert_to<double>(); }

Complex to_complex(const Scalar& s) { return {to_double(s.re), to_double(s.im)}; }

EMat to_eigen(const NumericMatrix& m, std::size_t n) {
    EMat out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m[r * n + c];
    return out;
}

NumericMatrix from_eigen(const EMat& m) {
    const auto n = static_cast<std::size_t>(m.rows());
    NumericMatrix out(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out[r * n + c] = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    return out;
}

// Basis matrices from a realified real subspace (rows of length 2 n^2).
std::vector<NumericMatrix> realified_basis(const Subspace& s, std::size_t n) {
    std::vector<NumericMatrix> out;
    out.reserve(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r) {
        const auto cx = exact::unrealify_vector(s.basis_row(r));
        NumericMatrix m(n * n);
        for (std::size_t t = 0; t < n * n; ++t) m[t] = to_complex(cx[t]);
        out.push_back(std::move(m));
    }
    return out;
}

// Basis matrices from a complex subspace (rows of length n^2).
std::vector<NumericMatrix> complex_basis(const Subspace& s, std::size_t n) {
    std::vector<NumericMatrix> out;
    out.reserve(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r) {
        const auto row = s.basis_row(r);
        NumericMatrix m(n * n);
        for (std::size_t t = 0; t < n * n; ++t) m[t] = to_complex(row[t]);
        out.push_back(std::move(m));
    }
    return out;
}

bool all_finite(const NumericMatrix& m) {
    for (const auto& e : m)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

void require(bool ok, const char* msg) {
    if (!ok) throw invalid_input(msg);
}

// 53-bit uniform in [0, 1); bit-stable across standard libraries, unlike
// std::uniform_real_distribution.
double unit53(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Coordinate layout of the probe parametrization: [u | t | y | (Re z, Im z)...].
struct Layout {
    std::size_t u, t, y, z; // block offsets
    std::size_t total;
};

Layout layout_of(const Frame& f) {
    Layout l{};
    l.u = 0;
    l.t = f.k0.size();
    l.y = l.t + f.m0.size();
    l.z = l.y + f.v0.size();
    l.total = l.z + 2 * f.vn.size();
    return l;
}

EMat eval_parametrization(const Frame& f, const Layout& l, const std::vector<double>& c) {
    const std::size_t n = f.n;
    NumericMatrix u(n * n), t(n * n), y(n * n), z(n * n);
    for (std::size_t j = 0; j < f.k0.size(); ++j)
        for (std::size_t e = 0; e < n * n; ++e) u[e] += c[l.u + j] * f.k0[j][e];
    for (std::size_t j = 0; j < f.m0.size(); ++j)
        for (std::size_t e = 0; e < n * n; ++e) t[e] += c[l.t + j] * f.m0[j][e];
    for (std::size_t j = 0; j < f.v0.size(); ++j)
        for (std::size_t e = 0; e < n * n; ++e) y[e] += c[l.y + j] * f.v0[j][e];
    for (std::size_t j = 0; j < f.vn.size(); ++j) {
        const Complex w{c[l.z + 2 * j], c[l.z + 2 * j + 1]};
        for (std::size_t e = 0; e < n * n; ++e) z[e] += w * f.vn[j][e];
    }
    const Complex i{0.0, 1.0};
    EMat tm = to_eigen(t, n), ym = to_eigen(y, n);
    return to_eigen(u, n).exp() * EMat(i * tm).exp() * EMat(i * ym).exp() *
           to_eigen(z, n).exp();
}

double kappa_of_lift(const std::vector<NumericMatrix>& basis, std::size_t n,
                     const std::vector<double>& coords) {
    // On anti-Hermitian T, kappa(T,T) = -tr(T^2) is the squared Frobenius
    // norm; computing it that way keeps the value exactly nonnegative.
    EMat t = EMat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < basis.size(); ++j)
        t += coords[j] * to_eigen(basis[j], n);
    return t.squaredNorm();
}

} // namespace

Frame make_frame(const CRAlgebra& a) {
    if (!a.is_n_reductive())
        throw invalid_input("decomposition frame requires an n-reductive algebra");
    const auto& ctx = a.context();
    Frame f;
    f.n = ctx.n_total();
    f.k0 = realified_basis(ctx.k0_realified(), f.n);
    f.m0 = realified_basis(levi::characteristic_space(a), f.n);
    f.v0 = realified_basis(a.v0_realified(), f.n);
    f.vn = complex_basis(a.nilradical_part().space(), f.n);
    if (f.coordinate_count() != 2 * f.k0.size())
        throw internal_inconsistency("decomposition frame has the wrong total dimension");
    return f;
}

NumericMatrix lift(const std::vector<NumericMatrix>& basis, std::size_t n,
                   const std::vector<Complex>& coords) {
    require(coords.size() == basis.size(), "coordinate count does not match basis size");
    NumericMatrix out(n * n);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        require(basis[j].size() == n * n, "basis matrix has the wrong size");
        for (std::size_t e = 0; e < n * n; ++e) out[e] += coords[j] * basis[j][e];
    }
    return out;
}

NumericMatrix lift(const std::vector<NumericMatrix>& basis, std::size_t n,
                   const std::vector<double>& coords) {
    std::vector<Complex> cx(coords.begin(), coords.end());
    return lift(basis, n, cx);
}

NumericMatrix matrix_exp(const NumericMatrix& m, std::size_t n) {
    require(m.size() == n * n, "matrix size mismatch");
    require(all_finite(m), "non-finite matrix entry");
    return from_eigen(to_eigen(m, n).exp());
}

NumericMatrix mostow_map(const Frame& f, const MostowPoint& p) {
    const std::size_t n = f.n;
    require(p.x.size() == n * n, "x has the wrong size");
    require(p.t.size() == f.m0.size(), "t has the wrong number of coordinates");
    require(p.y.size() == f.v0.size(), "y has the wrong number of coordinates");
    require(p.z.size() == f.vn.size(), "z has the wrong number of coordinates");
    require(all_finite(p.x), "non-finite entry in x");
    require(all_finite(p.t) && all_finite(p.y), "non-finite coordinate");
    for (const auto& w : p.z)
        require(std::isfinite(w.real()) && std::isfinite(w.imag()), "non-finite coordinate");

    const EMat x = to_eigen(p.x, n);
    const double drift = (x * x.adjoint() - EMat::Identity(x.rows(), x.cols()))
                             .cwiseAbs()
                             .maxCoeff();
    require(drift <= kUnitaryTolerance, "x is not unitary within tolerance");

    const Complex i{0.0, 1.0};
    const EMat t = to_eigen(lift(f.m0, n, p.t), n);
    const EMat y = to_eigen(lift(f.v0, n, p.y), n);
    const EMat z = to_eigen(lift(f.vn, n, p.z), n);
    return from_eigen(x * EMat(i * t).exp() * EMat(i * y).exp() * z.exp());
}

NumericMatrix mostow_map(const CRAlgebra& a, const MostowPoint& p) {
    return mostow_map(make_frame(a), p);
}

MostowProbeReport jacobian_probe(const CRAlgebra& a, double radius,
                                 std::size_t samples, std::uint64_t seed,
                                 const ProbeOptions& opts) {
    require(std::isfinite(radius) && radius > 0.0, "radius must be positive and finite");
    require(samples >= 1, "at least one sample is required");
    require(std::isfinite(opts.fd_step) && opts.fd_step > 0.0, "fd_step must be positive");
    require(std::isfinite(opts.rank_threshold) && opts.rank_threshold > 0.0,
            "rank_threshold must be positive");

    const Frame f = make_frame(a);
    const Layout l = layout_of(f);
    const std::size_t rows = 2 * f.n * f.n;

    MostowProbeReport report;
    report.samples = samples;
    report.radius = radius;
    report.seed = seed;
    report.options = opts;

    std::mt19937_64 rng(seed);
    double min_sv = std::numeric_limits<double>::infinity();

    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<double> c(l.total);
        for (auto& v : c) v = (2.0 * unit53(rng) - 1.0) * radius;

        // Keep the sample inside the tube kappa(T,T) < radius^2.
        std::vector<double> tc(c.begin() + static_cast<std::ptrdiff_t>(l.t),
                               c.begin() + static_cast<std::ptrdiff_t>(l.y));
        const double ktt = kappa_of_lift(f.m0, f.n, tc);
        if (ktt >= radius * radius) {
            const double scale = 0.999 * radius / std::sqrt(ktt);
            for (std::size_t j = l.t; j < l.y; ++j) c[j] *= scale;
        }

        Eigen::MatrixXd jac(rows, l.total);
        bool finite = true;
        for (std::size_t j = 0; j < l.total && finite; ++j) {
            std::vector<double> cp = c, cm = c;
            cp[j] += opts.fd_step;
            cm[j] -= opts.fd_step;
            const EMat hi = eval_parametrization(f, l, cp);
            const EMat lo = eval_parametrization(f, l, cm);
            const EMat d = (hi - lo) / (2.0 * opts.fd_step);
            for (std::size_t r = 0; r < f.n; ++r)
                for (std::size_t q = 0; q < f.n; ++q) {
                    const Complex e = d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(q));
                    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) finite = false;
                    jac(static_cast<Eigen::Index>(r * f.n + q), static_cast<Eigen::Index>(j)) = e.real();
                    jac(static_cast<Eigen::Index>(f.n * f.n + r * f.n + q), static_cast<Eigen::Index>(j)) = e.imag();
                }
        }
        if (!finite) {
            report.failures.push_back({s, "non-finite jacobian entry"});
            min_sv = 0.0;
            continue;
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
        const auto& sv = svd.singularValues();
        min_sv = std::min(min_sv, sv(sv.size() - 1));
    }

    report.min_singular_value = min_sv;
    report.full_rank_everywhere = min_sv > opts.rank_threshold;
    return report;
}

double kappa_tt(const CRAlgebra& a, const std::vector<double>& t) {
    const Frame f = make_frame(a);
    require(t.size() == f.m0.size(), "t has the wrong number of coordinates");
    require(all_finite(t), "non-finite coordinate");
    return kappa_of_lift(f.m0, f.n, t);
}

double exhaustion_phi_tube(const CRAlgebra& a, const std::vector<double>& t,
                           double radius) {
    require(std::isfinite(radius) && radius > 0.0, "radius must be positive and finite");
    const double k = kappa_tt(a, t);
    require(k < radius * radius, "kappa(T,T) must stay below radius^2");
    return k / (radius * radius - k);
}

double exhaustion_phi_hnr(const CRAlgebra& a, const std::vector<double>& t) {
    return kappa_tt(a, t);
}

} // namespace crkit::mostow
