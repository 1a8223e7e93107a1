#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "neutro/triple.hpp"

namespace neutro {

/// One recorded invariant violation: which invariant, at which sample point,
/// with a short human-readable account of the observed values.
struct CheckFailure {
    std::string invariant;
    Triple triple;
    std::string detail;
};

struct InvariantCount {
    std::string name;
    std::size_t failures = 0;
};

/// Outcome of a seeded invariant sweep. `invariants` lists every invariant
/// in execution order with its failure count; `failures` keeps the first
/// few violations in detail so a red run is diagnosable without rerunning.
struct CheckReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    std::vector<InvariantCount> invariants;
    std::vector<CheckFailure> failures;

    std::size_t total_failures() const noexcept;
    bool passed() const noexcept { return total_failures() == 0; }
};

/// Cap on recorded failure details; counts keep accumulating past it.
inline constexpr std::size_t kFailureDetailCap = 100;

/// Runs every library invariant over `samples` seeded random points.
/// Deterministic: a (samples, seed) pair always visits the same points,
/// with a fixed number of generator draws per sample.
CheckReport run_checks(std::size_t samples, std::uint64_t seed, Tolerance tol = {});

}  // namespace neutro
