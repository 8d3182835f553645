#include "crkit/roots.hpp"

#include "crkit/errors.hpp"
#include "crkit/forms.hpp"
#include "crkit/poly.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace crkit::roots {

using exact::kernel_basis;
using exact::Rational;

RootDatum RootDatum::standard(std::size_t n) {
    if (n < 2) throw invalid_input("RootDatum: ambient must be at least 2");
    std::vector<std::vector<Scalar>> diag;
    for (std::size_t i = 0; i + 1 < n; ++i)
        diag.push_back((ExactMatrix::unit(n, i, i) - ExactMatrix::unit(n, i + 1, i + 1)).flatten());
    RootDatum d{n, Subspace::span(n * n, diag), {}, ExactMatrix{}};
    for (std::size_t i = 0; i + 1 < n; ++i) d.simple_roots.emplace_back(i, i + 1);
    std::vector<Scalar> reg(n);
    for (std::size_t i = 0; i < n; ++i)
        reg[i] = Scalar(static_cast<long>(n - 1) - 2 * static_cast<long>(i));
    d.regular_element = ExactMatrix::diagonal(reg);
    return d;
}

ExactMatrix chamber_representative(const ExactMatrix& d) {
    if (!d.is_square()) throw invalid_input("chamber_representative: non-square input");
    std::vector<Rational> entries;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && !d(i, j).is_zero())
                throw invalid_input("chamber_representative: input must be diagonal");
        if (!d(i, i).is_real())
            throw invalid_input("chamber_representative: entries must be real");
        entries.push_back(d(i, i).re);
    }
    std::sort(entries.begin(), entries.end(), std::greater<>());
    std::vector<Scalar> out(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) out[i] = Scalar(entries[i]);
    return ExactMatrix::diagonal(out);
}

LieSubalgebra standard_parabolic(const RootDatum& datum,
                                 const std::set<std::size_t>& simple_subset) {
    const std::size_t n = datum.ambient_n;
    for (auto s : simple_subset)
        if (s < 1 || s > n - 1)
            throw invalid_input("standard_parabolic: simple root index out of range");

    // Cut after position i (1-based) for every simple root NOT retained.
    std::vector<std::size_t> block(n, 0);
    std::size_t blk = 0;
    for (std::size_t i = 0; i < n; ++i) {
        block[i] = blk;
        if (i + 1 < n && !simple_subset.count(i + 1)) ++blk;
    }

    std::vector<std::vector<Scalar>> rows;
    for (std::size_t i = 0; i + 1 < n; ++i)
        rows.push_back((ExactMatrix::unit(n, i, i) - ExactMatrix::unit(n, i + 1, i + 1)).flatten());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && block[i] <= block[j])
                rows.push_back(ExactMatrix::unit(n, i, j).flatten());
    return LieSubalgebra::from_span(n, Subspace::span(n * n, rows));
}

namespace {

// Eigenvalues with multiplicities when the matrix is semisimple with all
// eigenvalues in Q(i); nullopt otherwise. Diagonal matrices read off
// directly, the rest by an integer-rescaled Gaussian-integer root scan.
std::optional<std::vector<std::pair<Scalar, std::size_t>>>
rational_semisimple_spectrum(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    bool diagonal = true;
    for (std::size_t i = 0; i < n && diagonal; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !m(i, j).is_zero()) { diagonal = false; break; }

    std::vector<std::pair<Scalar, std::size_t>> spec;
    if (diagonal) {
        for (std::size_t i = 0; i < n; ++i) {
            const Scalar v = m(i, i);
            bool found = false;
            for (auto& [z, cnt] : spec)
                if (z == v) { ++cnt; found = true; break; }
            if (!found) spec.emplace_back(v, 1);
        }
        return spec;
    }

    using Int = boost::multiprecision::mpz_int;
    Int den(1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            den = lcm(den, Int(denominator(m(i, j).re)));
            den = lcm(den, Int(denominator(m(i, j).im)));
        }
    const Scalar d{Rational(den)};
    const ExactMatrix scaled = d * m;

    Rational bound(0);
    for (std::size_t i = 0; i < n; ++i) {
        Rational row(0);
        for (std::size_t j = 0; j < n; ++j)
            row += abs(scaled(i, j).re) + abs(scaled(i, j).im);
        bound = std::max(bound, row);
    }
    const long box = static_cast<long>(numerator(bound) / denominator(bound)) + 1;
    if (box > 4096) return std::nullopt; // scan would be unreasonable; give up

    auto roots = exact::gaussian_integer_roots(exact::char_poly(scaled), box);
    std::size_t total = 0;
    for (auto& [z, cnt] : roots) total += cnt;
    if (total != n) return std::nullopt;

    // Eigenvalues of the original matrix, and the semisimplicity check:
    // geometric multiplicities must exhaust the space.
    std::size_t geo = 0;
    for (auto& [z, cnt] : roots) {
        z = z / d;
        ExactMatrix shift = m;
        for (std::size_t i = 0; i < n; ++i) shift(i, i) -= z;
        geo += kernel_basis(shift).size();
    }
    if (geo != n) return std::nullopt;
    return roots;
}

struct RootPart {
    Subspace space;
    std::vector<Scalar> functional; // values of the root on the Cartan basis
    std::size_t dim_in_q = 0;
};

std::vector<Scalar> combine(const Subspace& base, const std::vector<Scalar>& coeffs) {
    std::vector<Scalar> v(base.ambient_dim());
    for (std::size_t k = 0; k < base.dim(); ++k)
        for (std::size_t t = 0; t < v.size(); ++t) v[t] += coeffs[k] * base.basis()(k, t);
    return v;
}

// Shared tail of the certification: locate the joint zero piece (it must be
// exactly h), check q is a union of pieces, then apply the root-pair test.
std::optional<bool> classify_parts(std::vector<RootPart>& parts, const LieSubalgebra& q,
                                   const Subspace& h_space) {
    std::map<std::vector<std::string>, std::size_t> index;
    std::size_t accounted = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<std::string> key;
        for (const auto& v : parts[p].functional) key.push_back(v.str());
        index[key] = p;

        const bool zero_root = std::all_of(parts[p].functional.begin(), parts[p].functional.end(),
                                           [](const Scalar& s) { return s.is_zero(); });
        if (zero_root) {
            if (parts[p].space != h_space)
                throw internal_inconsistency(
                    "is_parabolic: centralizer of a self-normalizing abelian subalgebra exceeds it");
            parts[p].dim_in_q = h_space.dim();
            accounted += h_space.dim();
            continue;
        }
        const Subspace inq = parts[p].space.intersect(q.space());
        if (inq.dim() != 0 && inq.dim() != parts[p].space.dim())
            return std::nullopt; // a root space only partially in q; cannot classify
        parts[p].dim_in_q = inq.dim();
        accounted += inq.dim();
    }
    if (accounted != q.dim())
        throw internal_inconsistency("is_parabolic: q is not the sum of its root pieces");

    for (const auto& part : parts) {
        if (part.dim_in_q == part.space.dim()) continue;
        std::vector<std::string> neg_key;
        for (const auto& v : part.functional) neg_key.push_back((-v).str());
        const auto it = index.find(neg_key);
        if (it == index.end()) return std::nullopt; // root set not symmetric: k not reductive-like
        const auto& opposite = parts[it->second];
        if (opposite.dim_in_q != opposite.space.dim()) return false;
    }
    return true;
}

// Definitive verdict from one candidate Cartan, or nullopt if the candidate
// cannot certify (not a rational-spectrum Cartan inside q, etc.).
std::optional<bool> certify_with_cartan(const LieSubalgebra& k, const LieSubalgebra& q,
                                        const Subspace& h_space) {
    const std::size_t n = k.ambient_n();
    if (h_space.dim() == 0 || !q.space().contains(h_space)) return std::nullopt;

    std::vector<ExactMatrix> hs;
    for (std::size_t r = 0; r < h_space.dim(); ++r)
        hs.push_back(ExactMatrix::from_flat(n, n, h_space.basis_row(r)));
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j)
            if (!bracket(hs[i], hs[j]).is_zero()) return std::nullopt; // not abelian
    if (liealg::normalizer_of_subspace(k, h_space).space() != h_space)
        return std::nullopt; // not self-normalizing, so not a Cartan of k

    // Shortcut when every canonical basis row of k is a joint eigenvector of
    // ad(h) for all h (true for diagonal Cartans in monomial-type bases): the
    // root pieces are then spans of basis-row groups, no kernel solves needed.
    const auto kbasis = k.basis_matrices();
    std::vector<std::vector<Scalar>> functionals(kbasis.size());
    bool simultaneous = true;
    for (const auto& h : hs) {
        for (std::size_t r = 0; r < kbasis.size() && simultaneous; ++r) {
            const auto br = bracket(h, kbasis[r]).flatten();
            const Scalar lam = br[k.space().pivot_cols()[r]];
            const auto row = k.space().basis_row(r);
            for (std::size_t t = 0; t < br.size(); ++t)
                if (br[t] != lam * row[t]) { simultaneous = false; break; }
            if (simultaneous) functionals[r].push_back(lam);
        }
        if (!simultaneous) break;
    }

    std::vector<RootPart> parts;
    if (simultaneous) {
        std::map<std::vector<std::string>, std::vector<std::size_t>> groups;
        for (std::size_t r = 0; r < kbasis.size(); ++r) {
            std::vector<std::string> key;
            for (const auto& v : functionals[r]) key.push_back(v.str());
            groups[key].push_back(r);
        }
        for (const auto& [key, rows_idx] : groups) {
            std::vector<std::vector<Scalar>> rows;
            for (std::size_t r : rows_idx) rows.push_back(k.space().basis_row(r));
            parts.push_back(
                {Subspace::span(n * n, rows), functionals[rows_idx.front()], 0});
        }
        return classify_parts(parts, q, h_space);
    }

    parts = {{k.space(), {}, 0}};
    for (const auto& h : hs) {
        const auto spec = rational_semisimple_spectrum(h);
        if (!spec) return std::nullopt;
        std::vector<Scalar> diffs;
        for (const auto& [a, ma] : *spec)
            for (const auto& [b, mb] : *spec) {
                const Scalar mu = a - b;
                if (std::find(diffs.begin(), diffs.end(), mu) == diffs.end())
                    diffs.push_back(mu);
            }

        std::vector<RootPart> next;
        for (const auto& part : parts) {
            std::size_t covered = 0;
            for (const Scalar& mu : diffs) {
                // {X in part : [h, X] = mu X}
                ExactMatrix sys(n * n, part.space.dim());
                for (std::size_t r = 0; r < part.space.dim(); ++r) {
                    const ExactMatrix xr = ExactMatrix::from_flat(n, n, part.space.basis_row(r));
                    const auto flat = (bracket(h, xr) - mu * xr).flatten();
                    for (std::size_t t = 0; t < n * n; ++t) sys(t, r) = flat[t];
                }
                std::vector<std::vector<Scalar>> rows;
                for (const auto& c : kernel_basis(sys)) rows.push_back(combine(part.space, c));
                Subspace piece = Subspace::span(n * n, rows);
                if (piece.dim() == 0) continue;
                covered += piece.dim();
                auto functional = part.functional;
                functional.push_back(mu);
                next.push_back({std::move(piece), std::move(functional), 0});
            }
            if (covered != part.space.dim())
                throw internal_inconsistency(
                    "is_parabolic: eigenspace refinement lost dimensions under a verified semisimple element");
        }
        parts = std::move(next);
    }
    return classify_parts(parts, q, h_space);
}

} // namespace

Verdict is_parabolic(const LieSubalgebra& k, const LieSubalgebra& q,
                     const Conjugation& conjugation, const IsParabolicOptions& opts) {
    if (q.ambient_n() != k.ambient_n() || !k.contains(q))
        throw invalid_input("is_parabolic: q is not contained in k");
    const std::size_t n = k.ambient_n();

    // Necessary condition: a parabolic and its compact conjugate span k.
    std::vector<std::vector<Scalar>> conj_rows;
    for (std::size_t r = 0; r < q.dim(); ++r)
        conj_rows.push_back(conjugation(q.basis_matrix(r)).flatten());
    const Subspace q_bar = Subspace::span(n * n, conj_rows);
    if (q.space().sum(q_bar) != k.space()) return Verdict::no;

    if (k.dim() == 0) return Verdict::yes;

    // Candidate 1: the diagonal matrices of k.
    std::vector<std::vector<Scalar>> diag_rows;
    for (std::size_t i = 0; i < n; ++i) diag_rows.push_back(ExactMatrix::unit(n, i, i).flatten());
    const Subspace diag_in_k = k.space().intersect(Subspace::span(n * n, diag_rows));

    // Candidates are generated lazily: each is certified as soon as it is
    // built, so the search stops at the first Cartan that settles the
    // question (for block-diagonal k that is usually the diagonal one).
    std::vector<Subspace> tried;
    std::optional<Verdict> settled;
    auto try_candidate = [&](const Subspace& h) {
        if (settled) return;
        if (std::find(tried.begin(), tried.end(), h) != tried.end()) return;
        tried.push_back(h);
        if (const auto verdict = certify_with_cartan(k, q, h))
            settled = *verdict ? Verdict::yes : Verdict::no;
    };

    try_candidate(diag_in_k);
    for (const auto& c : opts.extra_cartans) {
        if (settled) return *settled;
        try_candidate(c);
    }
    if (settled) return *settled;

    // Search pool: centralizers of small integer combinations of
    // conjugation-fixed elements of q & conj(q).
    const Subspace qq = q.space().intersect(q_bar);
    if (qq.dim() > 0 && opts.search_attempts > 0) {
        const Subspace real_qq = exact::realify_span(qq);
        ExactMatrix fix(2 * n * n, real_qq.dim());
        for (std::size_t r = 0; r < real_qq.dim(); ++r) {
            const auto w = real_qq.basis_row(r);
            const ExactMatrix x = ExactMatrix::from_flat(n, n, exact::unrealify_vector(w));
            const auto img = exact::realify_vector(conjugation(x).flatten());
            for (std::size_t t = 0; t < 2 * n * n; ++t) fix(t, r) = img[t] - w[t];
        }
        std::vector<ExactMatrix> fixed;
        for (const auto& c : kernel_basis(fix))
            fixed.push_back(ExactMatrix::from_flat(
                n, n, exact::unrealify_vector(combine(real_qq, c))));

        int attempts = 0;
        auto try_element = [&](const ExactMatrix& z) {
            if (settled || attempts >= opts.search_attempts) return;
            ++attempts;
            try_candidate(liealg::centralizer_in(k, z).space());
        };
        for (const auto& z : fixed) try_element(z);
        static const long weights[] = {1, -1, 2, -2, 3};
        for (std::size_t a = 0; a < fixed.size(); ++a)
            for (std::size_t b = a + 1; b < fixed.size(); ++b)
                for (long wa : {1L})
                    for (long wb : weights)
                        try_element(Scalar(wa) * fixed[a] + Scalar(wb) * fixed[b]);
    }
    return settled.value_or(Verdict::undetermined);
}

} // namespace crkit::roots
