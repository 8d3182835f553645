#pragma once

#include "crkit/liealg.hpp"

#include <cstddef>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace crkit::roots {

using exact::ExactMatrix;
using exact::Scalar;
using exact::Subspace;
using liealg::LieSubalgebra;

/// Cartan/root bookkeeping for sl_n: the diagonal Cartan, the simple roots
/// e_i - e_{i+1} as index pairs, and a fixed regular element (strictly
/// decreasing rational diagonal, so every root is nonzero on it).
struct RootDatum {
    std::size_t ambient_n;
    Subspace cartan;                                       // diagonal traceless matrices
    std::vector<std::pair<std::size_t, std::size_t>> simple_roots; // (i, i+1), 0-based
    ExactMatrix regular_element;

    static RootDatum standard(std::size_t n);
};

/// Unique weakly-decreasing rearrangement of a real diagonal matrix — the
/// representative of its orbit under the permutation (Weyl) action in the
/// closed positive chamber. Throws invalid_input on non-diagonal or
/// non-real input.
ExactMatrix chamber_representative(const ExactMatrix& d);

/// Block-upper-triangular parabolic containing the standard Borel. The subset
/// (1-based indices into the simple roots) lists the simple roots whose
/// negative root spaces are retained; its complement cuts the blocks.
/// Empty subset gives the Borel, the full set gives all of sl_n.
LieSubalgebra standard_parabolic(const RootDatum& datum,
                                 const std::set<std::size_t>& simple_subset);

enum class Verdict { yes, no, undetermined };

using Conjugation = std::function<ExactMatrix(const ExactMatrix&)>;

struct IsParabolicOptions {
    /// Extra candidate Cartan subalgebras to try for certification. Every
    /// certificate is re-verified from scratch, so provenance does not matter.
    std::vector<Subspace> extra_cartans;
    /// Bound on the deterministic search for a certifying Cartan among
    /// centralizers of small integer combinations in the real points of the
    /// intersection q & conj(q).
    int search_attempts = 64;
};

/// Decides whether q is parabolic in the reductive algebra k, where the
/// conjugation fixes k's compact real form.
///
/// Stage 1 (necessary): a parabolic subalgebra always satisfies q + conj(q)
/// = k, because the compact form acts transitively on the flag manifold of
/// k; failure is a definitive "no".
///
/// Stage 2 (certificate): find a Cartan subalgebra h of k inside q with
/// rational joint eigenvalues, decompose k into ad(h) root spaces, and check
/// that for every root a, either a or -a lies in the root set of q. A
/// verified h-decomposition failing that check is a definitive "no" (every
/// parabolic containing a Cartan contains a Borel through it); passing it is
/// a definitive "yes" (a closed symmetric-complete root set contains a
/// positive system). Without a certifying Cartan the verdict is
/// undetermined.
Verdict is_parabolic(const LieSubalgebra& k, const LieSubalgebra& q,
                     const Conjugation& conjugation,
                     const IsParabolicOptions& opts = {});

} // namespace crkit::roots
