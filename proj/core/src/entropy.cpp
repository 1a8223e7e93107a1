#include "neutro/entropy.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace neutro {

std::string_view variant_name(Variant v) noexcept {
    return v == Variant::Czekanowski ? "c" : "r";
}

Distances distances(const Triple& t) noexcept {
    const double net = t.mu() - t.nu();
    const double dev = std::abs(t.mu() + t.nu() - 1.0);
    return Distances{
        std::abs(net - 1.0) + dev + t.omega(),
        std::abs(net + 1.0) + dev + t.omega(),
    };
}

EntropyBreakdown entropy(const Triple& t, Variant v) noexcept {
    const Distances d = distances(t);
    const double gap = std::abs(d.to_true - d.to_false);

    const double abs_net = std::abs(t.mu() - t.nu());
    const double dev = std::abs(t.mu() + t.nu() - 1.0);

    EntropyBreakdown out;
    out.dist_true = d.to_true;
    out.dist_false = d.to_false;
    if (v == Variant::Czekanowski) {
        out.similarity = 1.0 - gap / (d.to_true + d.to_false);
        out.entropy = 1.0 - abs_net / (1.0 + dev + t.omega());
    } else {
        out.similarity = 1.0 - gap / std::max(d.to_true, d.to_false);
        out.entropy = (1.0 - abs_net + dev + t.omega()) / (1.0 + abs_net + dev + t.omega());
    }
    // The distance route and the closed form are algebraically identical.
    assert(std::abs(out.similarity - out.entropy) <= 1e-12);
    return out;
}

double entropy_reduced(Kind kind, Variant v, const Triple& t, Tolerance tol) {
    if (kind == Kind::Neutrosophic) {
        throw UnsupportedKindError("no reduced form for neutrosophic information");
    }
    if (t.omega() > tol.eps) {
        throw KindMismatchError("omega exceeds tolerance: not " +
                                std::string(kind_name(kind)) + " information");
    }

    const double sum = t.mu() + t.nu();
    const double abs_net = std::abs(t.mu() - t.nu());
    const bool czek = v == Variant::Czekanowski;

    switch (kind) {
        case Kind::Fuzzy: {
            if (std::abs(sum - 1.0) > tol.eps) {
                throw KindMismatchError("mu + nu differs from 1: not fuzzy information");
            }
            const double spread = std::abs(2.0 * t.mu() - 1.0);
            // Kaufmann's linear index of fuzziness / Kosko's ratio form.
            return czek ? 1.0 - spread : (1.0 - spread) / (1.0 + spread);
        }
        case Kind::IntuitionisticFuzzy: {
            if (sum > 1.0 + tol.eps) {
                throw KindMismatchError("mu + nu exceeds 1: not intuitionistic information");
            }
            const double ign = 1.0 - sum;
            return czek ? 1.0 - abs_net / (1.0 + ign)
                        : (1.0 - abs_net + ign) / (1.0 + abs_net + ign);
        }
        case Kind::ParaconsistentFuzzy: {
            if (sum < 1.0 - tol.eps) {
                throw KindMismatchError("mu + nu below 1: not paraconsistent information");
            }
            const double contra = sum - 1.0;
            return czek ? 1.0 - abs_net / (1.0 + contra)
                        : (1.0 - abs_net + contra) / (1.0 + abs_net + contra);
        }
        case Kind::Bifuzzy:
        default: {
            const double dev = std::abs(sum - 1.0);
            return czek ? 1.0 - abs_net / (1.0 + dev)
                        : (1.0 - abs_net + dev) / (1.0 + abs_net + dev);
        }
    }
}

}  // namespace neutro
