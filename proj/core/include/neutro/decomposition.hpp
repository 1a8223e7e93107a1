#pragma once

#include <array>

#include "neutro/entropy.hpp"
#include "neutro/triple.hpp"

namespace neutro {

/// The seven-way split of a triple's information: two certainty components
/// (truth, falsity) plus five uncertainty components (ambiguity, ignorance,
/// contradiction, neutrality, saturation). All components are in [0,1] and
/// sum to 1; the five uncertainty components sum to the entropy of the same
/// variant. truth*falsity == 0 and ignorance*contradiction == 0 exactly, and
/// at least two of {ignorance, contradiction, neutrality, saturation} are
/// exactly zero.
struct Hepta {
    double truth;
    double falsity;
    double ambiguity;      ///< similarity to (0.5, 0, 0.5)
    double ignorance;      ///< similarity to (0, 0, 0)
    double contradiction;  ///< similarity to (1, 0, 1)
    double neutrality;     ///< similarity to (0, 1, 0)
    double saturation;     ///< similarity to (1, 1, 1)
    Variant variant;

    /// Components in serialization order: t, f, a, u, c, n, s.
    std::array<double, 7> components() const noexcept {
        return {truth, falsity, ambiguity, ignorance, contradiction, neutrality, saturation};
    }

    /// Sum of the five uncertainty components; equals the entropy value.
    double uncertainty() const noexcept {
        return ambiguity + ignorance + contradiction + neutrality + saturation;
    }
};

/// Component names matching components() order.
inline constexpr std::array<std::string_view, 7> kComponentNames = {
    "t", "f", "a", "u", "c", "n", "s"};

/// Splits a triple into the seven components using the unified (branch-free)
/// max/min formulas. With net truth tau, ignorance pi, contradiction kappa,
/// and denominator D = 1 + omega + pi + kappa (Czekanowski) or
/// D = 1 + |tau| + omega + pi + kappa (Ruzicka):
///   a = (1 - |tau| - pi - kappa) / D
///   u = 2 max(pi - omega, 0) / D
///   c = 2 max(kappa - omega, 0) / D
///   n = (max(omega - pi - kappa, 0)/2 + 3 min(omega, pi)) / D
///   s = (max(omega - pi - kappa, 0)/2 + 3 min(omega, kappa)) / D
/// with truth/falsity (max(mu,nu) - nu)/D and (max(mu,nu) - mu)/D for
/// Czekanowski, 2 max(tau,0)/D and 2 max(-tau,0)/D for Ruzicka.
/// Components within 1e-12 below zero from rounding are clamped to exact 0.
Hepta decompose(const Triple& t, Variant v) noexcept;

/// Same decomposition through the explicit three-case construction
/// (ignorance-dominant, contradiction-dominant, neutrality-dominant), kept as
/// an independent cross-check for decompose(). Overlapping boundaries resolve
/// in that order; the formulas agree there. Agrees with decompose()
/// componentwise within 1e-12 everywhere.
///
/// Throws InternalError if no case matches, which cannot happen for a valid
/// triple since ignorance * contradiction == 0.
Hepta decompose_by_cases(const Triple& t, Variant v);

/// A decomposition annotated with the classified information kind.
struct ReducedPartition {
    Kind kind;
    Hepta parts;
};

/// Decomposes and classifies, verifying that the components the kind forces
/// to vanish actually did: bifuzzy has no neutrality/saturation,
/// intuitionistic additionally no contradiction, paraconsistent additionally
/// no ignorance, fuzzy neither. A point that is merely within tol.eps of a
/// family can carry forced-component mass of a few eps, so the vanishing
/// bound is 4 * tol.eps; exceeding it throws AssertionError (an
/// implementation bug, not bad data).
ReducedPartition reduced_partition(const Triple& t, Variant v, Tolerance tol = {});

}  // namespace neutro
