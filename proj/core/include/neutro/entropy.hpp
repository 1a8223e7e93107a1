#pragma once

#include "neutro/triple.hpp"

namespace neutro {

/// The two similarity families behind the entropy measures.
enum class Variant {
    Czekanowski,  ///< similarity = 1 - |d_T - d_F| / (d_T + d_F)
    Ruzicka,      ///< similarity = 1 - |d_T - d_F| / max(d_T, d_F)
};

/// Canonical one-letter tag for file names and column suffixes ("c" / "r").
std::string_view variant_name(Variant v) noexcept;

/// L1 distances from a triple's feature vector (mu - nu, mu + nu - 1, omega)
/// to the crisp prototypes true (1,0,0) and false (0,0,1). Both lie in [0,3]
/// and their sum is at least 2.
struct Distances {
    double to_true;
    double to_false;
};

Distances distances(const Triple& t) noexcept;

/// Everything the entropy computation produced: the two crisp distances, the
/// similarity between them, and the entropy value. `entropy` comes from the
/// closed form and `similarity` from the distance route; the two agree within
/// 1e-12 (the dual path exists to catch transcription errors in either).
struct EntropyBreakdown {
    double dist_true;
    double dist_false;
    double similarity;
    double entropy;
};

/// Entropy of a triple under the chosen variant. Closed forms:
///   Czekanowski: 1 - |mu - nu| / (1 + |mu + nu - 1| + omega)
///   Ruzicka:     (1 - |mu - nu| + |mu + nu - 1| + omega)
///                / (1 + |mu - nu| + |mu + nu - 1| + omega)
/// Zero exactly at the crisp points (1,0,0) and (0,0,1); one whenever
/// mu == nu; symmetric under swapping mu and nu.
EntropyBreakdown entropy(const Triple& t, Variant v) noexcept;

/// Evaluates the reduced closed form the general entropy collapses to on a
/// constrained family: Kaufmann / Kosko on fuzzy inputs, the intuitionistic
/// and paraconsistent special cases, and the bifuzzy forms. Agrees with
/// entropy() within 1e-12 wherever the kind's constraints hold exactly.
///
/// Throws KindMismatchError if the triple violates the kind's constraints
/// beyond tol.eps, and UnsupportedKindError for Kind::Neutrosophic (there is
/// nothing to reduce; call entropy() instead).
double entropy_reduced(Kind kind, Variant v, const Triple& t, Tolerance tol = {});

}  // namespace neutro
