#include "neutro/decomposition.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

namespace neutro {

namespace {

// Clamps rounding residue in [-1e-12, 0] to exact +0 so the exclusivity
// products hold exactly; also normalizes IEEE -0.
double clean(double x) noexcept {
    if (x == 0.0) return 0.0;
    if (x < 0.0 && x >= -1e-12) return 0.0;
    return x;
}

double denominator(const Triple& t, const Indices& ix, Variant v) noexcept {
    const double base = 1.0 + t.omega() + ix.ignorance + ix.contradiction;
    return v == Variant::Czekanowski ? base : base + std::abs(ix.net_truth);
}

void certainty(const Triple& t, const Indices& ix, Variant v, double den,
               double& truth, double& falsity) noexcept {
    if (v == Variant::Czekanowski) {
        const double top = std::max(t.mu(), t.nu());
        truth = (top - t.nu()) / den;
        falsity = (top - t.mu()) / den;
    } else {
        truth = 2.0 * std::max(ix.net_truth, 0.0) / den;
        falsity = 2.0 * std::max(-ix.net_truth, 0.0) / den;
    }
}

}  // namespace

Hepta decompose(const Triple& t, Variant v) noexcept {
    const Indices ix = derive_indices(t);
    const double om = t.omega();
    const double pi = ix.ignorance;
    const double ka = ix.contradiction;
    const double den = denominator(t, ix, v);
    assert(den >= 1.0);

    Hepta h;
    h.variant = v;
    certainty(t, ix, v, den, h.truth, h.falsity);
    h.ambiguity = (1.0 - std::abs(ix.net_truth) - pi - ka) / den;
    h.ignorance = 2.0 * std::max(pi - om, 0.0) / den;
    h.contradiction = 2.0 * std::max(ka - om, 0.0) / den;
    const double half_excess = std::max(om - pi - ka, 0.0) / 2.0;
    h.neutrality = (half_excess + 3.0 * std::min(om, pi)) / den;
    h.saturation = (half_excess + 3.0 * std::min(om, ka)) / den;

    h.truth = clean(h.truth);
    h.falsity = clean(h.falsity);
    h.ambiguity = clean(h.ambiguity);
    h.ignorance = clean(h.ignorance);
    h.contradiction = clean(h.contradiction);
    h.neutrality = clean(h.neutrality);
    h.saturation = clean(h.saturation);
    return h;
}

Hepta decompose_by_cases(const Triple& t, Variant v) {
    const Indices ix = derive_indices(t);
    const double om = t.omega();
    const double pi = ix.ignorance;
    const double ka = ix.contradiction;
    const double den = denominator(t, ix, v);
    assert(den >= 1.0);

    Hepta h;
    h.variant = v;
    certainty(t, ix, v, den, h.truth, h.falsity);
    h.ambiguity = (1.0 - std::abs(ix.net_truth) - pi - ka) / den;

    if (pi >= om && om >= ka) {
        // Ignorance-dominant: contradiction and saturation vanish.
        h.ignorance = (2.0 * pi - 2.0 * om) / den;
        h.contradiction = 0.0;
        h.saturation = 0.0;
        h.neutrality = 3.0 * om / den;
    } else if (ka >= om && om >= pi) {
        // Contradiction-dominant: ignorance and neutrality vanish.
        h.ignorance = 0.0;
        h.contradiction = (2.0 * ka - 2.0 * om) / den;
        h.neutrality = 0.0;
        h.saturation = 3.0 * om / den;
    } else if (om >= std::max(pi, ka)) {
        // Neutrality-dominant: ignorance and contradiction vanish and the
        // omega excess splits evenly between neutrality and saturation.
        h.ignorance = 0.0;
        h.contradiction = 0.0;
        h.neutrality = ((om - pi - ka) / 2.0 + 3.0 * pi) / den;
        h.saturation = ((om - pi - ka) / 2.0 + 3.0 * ka) / den;
    } else {
        // Impossible: ignorance * contradiction == 0 makes the cases total.
        throw InternalError("no decomposition case matches");
    }

    h.truth = clean(h.truth);
    h.falsity = clean(h.falsity);
    h.ambiguity = clean(h.ambiguity);
    h.ignorance = clean(h.ignorance);
    h.contradiction = clean(h.contradiction);
    h.neutrality = clean(h.neutrality);
    h.saturation = clean(h.saturation);
    return h;
}

ReducedPartition reduced_partition(const Triple& t, Variant v, Tolerance tol) {
    ReducedPartition out{classify(t, tol), decompose(t, v)};

    // A point classified within tol.eps of a family can carry forced-zero
    // components up to 3.5 * eps (the formulas amplify the constraint slack
    // by at most that factor), so the vanishing bound uses 4 * eps.
    const double bound = 4.0 * tol.eps;
    const auto must_vanish = [&](double value, const char* name) {
        if (value > bound) {
            throw AssertionError(std::string(name) + " = " + std::to_string(value) +
                                 " but must vanish for " +
                                 std::string(kind_name(out.kind)) + " information");
        }
    };

    switch (out.kind) {
        case Kind::Fuzzy:
            must_vanish(out.parts.ignorance, "ignorance");
            must_vanish(out.parts.contradiction, "contradiction");
            [[fallthrough]];
        case Kind::Bifuzzy:
            must_vanish(out.parts.neutrality, "neutrality");
            must_vanish(out.parts.saturation, "saturation");
            break;
        case Kind::IntuitionisticFuzzy:
            must_vanish(out.parts.contradiction, "contradiction");
            must_vanish(out.parts.neutrality, "neutrality");
            must_vanish(out.parts.saturation, "saturation");
            break;
        case Kind::ParaconsistentFuzzy:
            must_vanish(out.parts.ignorance, "ignorance");
            must_vanish(out.parts.neutrality, "neutrality");
            must_vanish(out.parts.saturation, "saturation");
            break;
        case Kind::Neutrosophic:
            break;
    }
    return out;
}

}  // namespace neutro
