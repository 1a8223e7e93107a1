#include "neutro/triple.hpp"

#include <algorithm>
#include <cmath>

namespace neutro {

namespace {

void check_component(double value, const char* field) {
    if (!std::isfinite(value)) {
        throw DomainError(std::string(field) + " not finite", field);
    }
    if (value < 0.0 || value > 1.0) {
        throw DomainError(std::string(field) + " out of range [0,1]", field);
    }
}

}  // namespace

Triple::Triple(double mu, double omega, double nu) : mu_(mu), omega_(omega), nu_(nu) {
    check_component(mu, "mu");
    check_component(omega, "omega");
    check_component(nu, "nu");
}

Triple Triple::from_fuzzy(double mu) {
    check_component(mu, "mu");
    return Triple(mu, 0.0, 1.0 - mu);
}

Triple Triple::from_intuitionistic(double mu, double nu, Tolerance tol) {
    check_component(mu, "mu");
    check_component(nu, "nu");
    if (mu + nu > 1.0 + tol.eps) {
        throw DomainError("mu + nu exceeds 1: not an intuitionistic pair");
    }
    return Triple(mu, 0.0, nu);
}

Indices derive_indices(const Triple& t) noexcept {
    const double sum = t.mu() + t.nu();
    Indices ix;
    ix.net_truth = t.mu() - t.nu();
    ix.ignorance = 1.0 - std::min(sum, 1.0);
    ix.contradiction = std::max(sum, 1.0) - 1.0;
    ix.ambiguity = 1.0 - std::abs(ix.net_truth) - std::abs(sum - 1.0);
    return ix;
}

std::string_view kind_name(Kind k) noexcept {
    switch (k) {
        case Kind::Fuzzy: return "fuzzy";
        case Kind::IntuitionisticFuzzy: return "intuitionistic";
        case Kind::ParaconsistentFuzzy: return "paraconsistent";
        case Kind::Bifuzzy: return "bifuzzy";
        case Kind::Neutrosophic: return "neutrosophic";
    }
    return "neutrosophic";
}

Kind classify(const Triple& t, Tolerance tol) noexcept {
    if (t.omega() > tol.eps) {
        return Kind::Neutrosophic;
    }
    const double sum = t.mu() + t.nu();
    if (std::abs(sum - 1.0) <= tol.eps) {
        return Kind::Fuzzy;
    }
    if (sum <= 1.0 + tol.eps) {
        return Kind::IntuitionisticFuzzy;
    }
    if (sum >= 1.0 - tol.eps) {
        return Kind::ParaconsistentFuzzy;
    }
    // Unreachable on the real line: the two branches above cover omega = 0.
    return Kind::Bifuzzy;
}

}  // namespace neutro
