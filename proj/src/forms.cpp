#include "crkit/forms.hpp"

#include "crkit/errors.hpp"

#include <vector>

namespace crkit::exact {

bool is_hermitian(const ExactMatrix& g) {
    if (!g.is_square()) return false;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = i; j < g.cols(); ++j)
            if (g(i, j) != g(j, i).conj()) return false;
    return true;
}

namespace {

// Congruence w <- E w E^dagger with E = I + c*e_{ij}: row i += c * row j,
// then column i += conj(c) * column j.
void add_row_col(ExactMatrix& w, const std::vector<std::size_t>& act,
                 std::size_t i, std::size_t j, const Scalar& c) {
    for (auto t : act) w(i, t) += c * w(j, t);
    const Scalar cc = c.conj();
    for (auto t : act) w(t, i) += cc * w(t, j);
}

} // namespace

Signature hermitian_signature(const ExactMatrix& g) {
    if (!is_hermitian(g)) throw invalid_input("hermitian_signature: matrix is not Hermitian");
    ExactMatrix w = g;
    std::vector<std::size_t> act(g.rows());
    for (std::size_t i = 0; i < act.size(); ++i) act[i] = i;

    Signature sig;
    while (!act.empty()) {
        // Prefer a nonzero diagonal pivot.
        std::size_t pivot_pos = act.size();
        for (std::size_t t = 0; t < act.size(); ++t)
            if (!w(act[t], act[t]).is_zero()) { pivot_pos = t; break; }

        if (pivot_pos == act.size()) {
            // Zero diagonal throughout. Either the active block is zero, or an
            // off-diagonal entry can be folded onto the diagonal.
            std::size_t oi = act.size(), oj = act.size();
            for (std::size_t s = 0; s < act.size() && oi == act.size(); ++s)
                for (std::size_t t = s + 1; t < act.size(); ++t)
                    if (!w(act[s], act[t]).is_zero()) { oi = s; oj = t; break; }
            if (oi == act.size()) {
                sig.zero += act.size();
                break;
            }
            const Scalar z = w(act[oi], act[oj]);
            // E = I + e_{ij} gives diagonal 2 Re z; E = I + i e_{ij} gives 2 Im z.
            add_row_col(w, act, act[oi], act[oj], z.re != 0 ? Scalar(1) : Scalar::i());
            pivot_pos = oi;
        }

        const std::size_t i = act[pivot_pos];
        const Scalar d = w(i, i);
        if (!d.is_real())
            throw internal_inconsistency("hermitian_signature: non-real pivot");
        (d.re > 0 ? sig.plus : sig.minus) += 1;
        act.erase(act.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
        // Schur complement on the remaining block.
        for (auto r : act) {
            const Scalar f = w(r, i) / d;
            if (f.is_zero()) continue;
            for (auto c : act) w(r, c) -= f * w(i, c);
        }
    }
    return sig;
}

} // namespace crkit::exact
