#pragma once

#include <cmath>

#include "doctest.h"

#include "neutro/rng.hpp"
#include "neutro/triple.hpp"

// Absolute-difference check that reports both values on failure.
#define CHECK_NEAR_TOL(got, want, tol)                    \
    do {                                                  \
        const double got_ = (got);                        \
        const double want_ = (want);                      \
        INFO("got " << got_ << ", want " << want_);       \
        CHECK(std::abs(got_ - want_) <= (tol));           \
    } while (0)

#define CHECK_NEAR(got, want) CHECK_NEAR_TOL(got, want, 1e-12)

namespace testutil {

inline neutro::Triple random_triple(neutro::SplitMix64& rng) {
    const double mu = rng.next_unit();
    const double om = rng.next_unit();
    const double nu = rng.next_unit();
    return {mu, om, nu};
}

// Family samples constructed so the constraint holds exactly in floating
// point: x + (1 - x) rounds to exactly 1, a product by a factor <= 1 never
// exceeds the remaining room, and rounding is monotone.
inline neutro::Triple random_fuzzy(neutro::SplitMix64& rng) {
    const double mu = rng.next_unit();
    return {mu, 0.0, 1.0 - mu};
}

inline neutro::Triple random_intuitionistic(neutro::SplitMix64& rng) {
    const double mu = rng.next_unit();
    const double scale = rng.next_unit();
    return {mu, 0.0, scale * (1.0 - mu)};
}

inline neutro::Triple random_paraconsistent(neutro::SplitMix64& rng) {
    const double mu = rng.next_unit();
    const double scale = rng.next_unit();
    const double base = 1.0 - mu;
    return {mu, 0.0, base + scale * (1.0 - base)};
}

}  // namespace testutil
