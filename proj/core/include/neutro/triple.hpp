#pragma once

#include <string_view>

#include "neutro/errors.hpp"

namespace neutro {

/// Comparison threshold for classification and kind checks.
/// Pure formulas (indices, entropies, decompositions) never use it.
struct Tolerance {
    double eps = 1e-9;
};

/// A point of three-valued information: degree of truth `mu`, degree of
/// neutrality `omega`, and degree of falsity `nu`, each independently in
/// [0,1]. The whole unit cube is admissible; no constraint ties the sum.
///
/// Construction validates, so a live Triple always holds finite in-range
/// values. Immutable.
class Triple {
public:
    /// Throws DomainError if any component is NaN, infinite, or outside [0,1].
    Triple(double mu, double omega, double nu);

    /// Lifts a fuzzy membership degree: falsity is the negation 1 - mu and
    /// neutrality is zero.
    static Triple from_fuzzy(double mu);

    /// Lifts an intuitionistic pair (mu, nu) with mu + nu <= 1 (within
    /// tol.eps); neutrality is zero. The implied ignorance 1 - mu - nu is
    /// recoverable via derive_indices. Throws DomainError if the pair sums
    /// beyond 1 + tol.eps.
    static Triple from_intuitionistic(double mu, double nu, Tolerance tol = {});

    double mu() const noexcept { return mu_; }
    double omega() const noexcept { return omega_; }
    double nu() const noexcept { return nu_; }

    friend bool operator==(const Triple& a, const Triple& b) noexcept {
        return a.mu_ == b.mu_ && a.omega_ == b.omega_ && a.nu_ == b.nu_;
    }

private:
    double mu_;
    double omega_;
    double nu_;
};

/// Indices derived from a triple. They satisfy, by construction:
///   ignorance * contradiction == 0 exactly,
///   ignorance + contradiction == |mu + nu - 1|,
///   ambiguity == 1 - |net_truth| - ignorance - contradiction.
struct Indices {
    double net_truth;      ///< mu - nu, in [-1, 1]
    double ignorance;      ///< 1 - min(mu + nu, 1), in [0, 1]
    double contradiction;  ///< max(mu + nu, 1) - 1, in [0, 1]
    double ambiguity;      ///< 1 - |mu - nu| - |mu + nu - 1|, in [0, 1]
};

Indices derive_indices(const Triple& t) noexcept;

/// Families of information, ordered from most to least specific.
enum class Kind {
    Fuzzy,                ///< omega = 0 and mu + nu = 1
    IntuitionisticFuzzy,  ///< omega = 0 and mu + nu <= 1
    ParaconsistentFuzzy,  ///< omega = 0 and mu + nu >= 1
    Bifuzzy,              ///< omega = 0
    Neutrosophic,         ///< unrestricted
};

/// Lowercase tag used in serialized output ("fuzzy", "intuitionistic", ...).
std::string_view kind_name(Kind k) noexcept;

/// Returns the most specific kind whose constraints the triple satisfies
/// within tol.eps, tested Fuzzy -> IntuitionisticFuzzy -> ParaconsistentFuzzy
/// -> Bifuzzy -> Neutrosophic. A point with mu + nu = 1 and omega = 0 is
/// Fuzzy, not intuitionistic or paraconsistent.
Kind classify(const Triple& t, Tolerance tol = {}) noexcept;

}  // namespace neutro
