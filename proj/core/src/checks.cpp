#include "neutro/checks.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <string_view>

#include "neutro/decomposition.hpp"
#include "neutro/entropy.hpp"
#include "neutro/rng.hpp"

namespace neutro {

namespace {

enum class Inv : std::size_t {
    CrispEntropy,
    PrototypePurity,
    IndicesExclusivity,
    IndicesPartition,
    ClassifyConsistency,
    DistanceRange,
    EntropyRange,
    EntropySwap,
    EntropySimilarity,
    EntropyMaximal,
    MonotoneOmega,
    StrictTau,
    MonotoneOmegaSigma,
    MonotoneIgnorance,
    MonotoneContradiction,
    PartitionUnity,
    PartitionEntropy,
    ComponentRange,
    ComponentExclusivity,
    CaseEquivalence,
    DecomposeSwap,
    ReductionFuzzy,
    ReductionIntuitionistic,
    ReductionParaconsistent,
    ReductionBifuzzy,
    ReducedVanishing,
    Count,
};

constexpr std::size_t kInvCount = static_cast<std::size_t>(Inv::Count);

constexpr std::array<std::string_view, kInvCount> kInvariantNames = {
    "crisp-entropy",
    "prototype-purity",
    "indices-exclusivity",
    "indices-partition",
    "classify-consistency",
    "distance-range",
    "entropy-range",
    "entropy-swap",
    "entropy-similarity",
    "entropy-maximal",
    "monotone-omega",
    "strict-tau",
    "monotone-omega-sigma",
    "monotone-ignorance",
    "monotone-contradiction",
    "partition-unity",
    "partition-entropy",
    "component-range",
    "component-exclusivity",
    "case-equivalence",
    "decompose-swap",
    "reduction-fuzzy",
    "reduction-intuitionistic",
    "reduction-paraconsistent",
    "reduction-bifuzzy",
    "reduced-vanishing",
};

constexpr std::array<Variant, 2> kVariants = {Variant::Czekanowski, Variant::Ruzicka};

// Both entropy forms are FP-monotone chains in the single varied input, with
// one exception: the Ruzicka form varies numerator and denominator together
// when omega / pi / kappa move, and their independent roundings can invert
// the quotient by one ulp. This slack absorbs that; genuine monotonicity
// bugs exceed it by orders of magnitude.
constexpr double kRatioSlack = 1e-14;

// Agreement bound for paths that are algebraically identical.
constexpr double kPathTol = 1e-12;

template <class... Args>
std::string fmt(const char* f, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

class Checker {
public:
    Checker(std::size_t samples, std::uint64_t seed, Tolerance tol)
        : rng_(seed), tol_(tol.eps) {
        report_.samples = samples;
        report_.seed = seed;
        report_.tolerance = tol.eps;
        report_.invariants.reserve(kInvCount);
        for (const auto name : kInvariantNames) {
            report_.invariants.push_back({std::string(name), 0});
        }
    }

    CheckReport run(std::size_t samples) {
        one_shot();
        for (std::size_t i = 0; i < samples; ++i) {
            sample();
        }
        return std::move(report_);
    }

private:
    void fail(Inv inv, const Triple& t, std::string detail) {
        auto& slot = report_.invariants[static_cast<std::size_t>(inv)];
        ++slot.failures;
        if (report_.failures.size() < kFailureDetailCap) {
            report_.failures.push_back({slot.name, t, std::move(detail)});
        }
    }

    void one_shot() {
        for (const Variant v : kVariants) {
            for (const Triple t : {Triple(1, 0, 0), Triple(0, 0, 1)}) {
                const double e = entropy(t, v).entropy;
                if (e != 0.0) {
                    fail(Inv::CrispEntropy, t, fmt("entropy_%s = %.17g, expected 0",
                                                   variant_name(v).data(), e));
                }
            }
        }
        // One prototype per component; each must decompose to a unit vector.
        const std::array<std::pair<Triple, std::size_t>, 7> prototypes = {{
            {Triple(1, 0, 0), 0},
            {Triple(0, 0, 1), 1},
            {Triple(0.5, 0, 0.5), 2},
            {Triple(0, 0, 0), 3},
            {Triple(1, 0, 1), 4},
            {Triple(0, 1, 0), 5},
            {Triple(1, 1, 1), 6},
        }};
        for (const Variant v : kVariants) {
            for (const auto& [t, hot] : prototypes) {
                const auto parts = decompose(t, v).components();
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    const double want = i == hot ? 1.0 : 0.0;
                    if (parts[i] != want) {
                        fail(Inv::PrototypePurity, t,
                             fmt("%s_%s = %.17g, expected %g", kComponentNames[i].data(),
                                 variant_name(v).data(), parts[i], want));
                    }
                }
            }
        }
    }

    // One pass: a fixed 28-draw schedule, so sample i is seed-reproducible
    // regardless of which invariants fire.
    void sample() {
        const double mu = rng_.next_unit();
        const double om = rng_.next_unit();
        const double nu = rng_.next_unit();
        const Triple t(mu, om, nu);

        check_indices(t);
        check_entropy(t);
        check_decomposition(t);

        check_maximal(rng_.next_unit(), rng_.next_unit());
        check_monotone_omega(t, rng_.next_unit(), rng_.next_unit());
        check_strict_tau();
        check_monotone_omega_sigma();
        check_monotone_pi_kappa(Inv::MonotoneIgnorance);
        check_monotone_pi_kappa(Inv::MonotoneContradiction);
        check_reductions();
    }

    void check_indices(const Triple& t) {
        const Indices ind = derive_indices(t);
        if (ind.ignorance * ind.contradiction != 0.0 || ind.ignorance < 0.0 ||
            ind.contradiction < 0.0) {
            fail(Inv::IndicesExclusivity, t,
                 fmt("pi = %.17g, kappa = %.17g", ind.ignorance, ind.contradiction));
        }
        const double total =
            ind.ambiguity + std::abs(ind.net_truth) + ind.ignorance + ind.contradiction;
        if (std::abs(total - 1.0) > tol_ || ind.ambiguity < -tol_) {
            fail(Inv::IndicesPartition, t,
                 fmt("alpha + |tau| + pi + kappa = %.17g, alpha = %.17g", total,
                     ind.ambiguity));
        }
        const Kind kind = classify(t, Tolerance{tol_});
        const double sigma = t.mu() + t.nu();
        bool ok = true;
        switch (kind) {
            case Kind::Fuzzy:
                ok = t.omega() <= tol_ && std::abs(sigma - 1.0) <= tol_;
                break;
            case Kind::IntuitionisticFuzzy:
                ok = t.omega() <= tol_ && sigma <= 1.0 + tol_;
                break;
            case Kind::ParaconsistentFuzzy:
                ok = t.omega() <= tol_ && sigma >= 1.0 - tol_;
                break;
            case Kind::Bifuzzy:
                ok = t.omega() <= tol_;
                break;
            case Kind::Neutrosophic:
                ok = t.omega() > tol_;
                break;
        }
        if (!ok) {
            fail(Inv::ClassifyConsistency, t,
                 fmt("classified %s with sigma = %.17g", kind_name(kind).data(), sigma));
        }
    }

    void check_entropy(const Triple& t) {
        const Distances d = distances(t);
        if (d.to_true < 0.0 || d.to_true > 3.0 || d.to_false < 0.0 || d.to_false > 3.0 ||
            d.to_true + d.to_false < 2.0 - tol_) {
            fail(Inv::DistanceRange, t,
                 fmt("d_true = %.17g, d_false = %.17g", d.to_true, d.to_false));
        }
        const Triple swapped(t.nu(), t.omega(), t.mu());
        for (const Variant v : kVariants) {
            const EntropyBreakdown b = entropy(t, v);
            if (b.entropy < 0.0 || b.entropy > 1.0) {
                fail(Inv::EntropyRange, t,
                     fmt("entropy_%s = %.17g", variant_name(v).data(), b.entropy));
            }
            const double mirrored = entropy(swapped, v).entropy;
            if (mirrored != b.entropy) {
                fail(Inv::EntropySwap, t,
                     fmt("entropy_%s = %.17g, swapped = %.17g", variant_name(v).data(),
                         b.entropy, mirrored));
            }
            if (std::abs(b.similarity - b.entropy) > kPathTol) {
                fail(Inv::EntropySimilarity, t,
                     fmt("similarity path %.17g vs closed form %.17g (%s)", b.similarity,
                         b.entropy, variant_name(v).data()));
            }
        }
    }

    void check_decomposition(const Triple& t) {
        const Triple swapped(t.nu(), t.omega(), t.mu());
        for (const Variant v : kVariants) {
            const Hepta h = decompose(t, v);
            const auto parts = h.components();
            double sum = 0.0;
            for (const double p : parts) sum += p;
            if (std::abs(sum - 1.0) > tol_) {
                fail(Inv::PartitionUnity, t,
                     fmt("component sum = %.17g (%s)", sum, variant_name(v).data()));
            }
            const double e = entropy(t, v).entropy;
            const double blurred = h.ambiguity + h.ignorance + h.contradiction +
                                   h.neutrality + h.saturation;
            if (std::abs(blurred - e) > tol_) {
                fail(Inv::PartitionEntropy, t,
                     fmt("a+u+c+n+s = %.17g, entropy = %.17g (%s)", blurred, e,
                         variant_name(v).data()));
            }
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (parts[i] < 0.0 || parts[i] > 1.0 + kPathTol) {
                    fail(Inv::ComponentRange, t,
                         fmt("%s_%s = %.17g", kComponentNames[i].data(),
                             variant_name(v).data(), parts[i]));
                }
            }
            int zeros = 0;
            for (const double p : {h.ignorance, h.contradiction, h.neutrality, h.saturation}) {
                if (p == 0.0) ++zeros;
            }
            if (h.truth * h.falsity != 0.0 || h.ignorance * h.contradiction != 0.0 ||
                zeros < 2) {
                fail(Inv::ComponentExclusivity, t,
                     fmt("t*f = %.17g, u*c = %.17g, zero count = %d (%s)",
                         h.truth * h.falsity, h.ignorance * h.contradiction, zeros,
                         variant_name(v).data()));
            }
            const auto cases = decompose_by_cases(t, v).components();
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if (std::abs(parts[i] - cases[i]) > kPathTol) {
                    fail(Inv::CaseEquivalence, t,
                         fmt("%s_%s unified %.17g vs cases %.17g", kComponentNames[i].data(),
                             variant_name(v).data(), parts[i], cases[i]));
                }
            }
            const Hepta m = decompose(swapped, v);
            if (m.truth != h.falsity || m.falsity != h.truth || m.ambiguity != h.ambiguity ||
                m.ignorance != h.ignorance || m.contradiction != h.contradiction ||
                m.neutrality != h.neutrality || m.saturation != h.saturation) {
                fail(Inv::DecomposeSwap, t,
                     fmt("swap does not exchange t and f (%s)", variant_name(v).data()));
            }
        }
    }

    void check_maximal(double x, double w) {
        const Triple t(x, w, x);
        for (const Variant v : kVariants) {
            const double e = entropy(t, v).entropy;
            if (e != 1.0) {
                fail(Inv::EntropyMaximal, t,
                     fmt("entropy_%s = %.17g at mu = nu", variant_name(v).data(), e));
            }
        }
    }

    void require_ordered(Inv inv, const Triple& lo, const Triple& hi, Variant v,
                         double slack) {
        const double e_lo = entropy(lo, v).entropy;
        const double e_hi = entropy(hi, v).entropy;
        if (e_lo > e_hi + slack) {
            fail(inv, lo,
                 fmt("entropy_%s fell from %.17g to %.17g", variant_name(v).data(), e_lo,
                     e_hi));
        }
    }

    void check_monotone_omega(const Triple& t, double w1, double w2) {
        const double lo = std::min(w1, w2);
        const double hi = std::max(w1, w2);
        const Triple t_lo(t.mu(), lo, t.nu());
        const Triple t_hi(t.mu(), hi, t.nu());
        require_ordered(Inv::MonotoneOmega, t_lo, t_hi, Variant::Czekanowski, 0.0);
        require_ordered(Inv::MonotoneOmega, t_lo, t_hi, Variant::Ruzicka, kRatioSlack);
    }

    // Dyadic lattice: with sigma = j*2^-25 and tau = m*2^-25, the components
    // mu = (j+m)*2^-26 and nu = (j-m)*2^-26 are exact, and they recombine to
    // exactly sigma and tau. Monotonicity pairs built on the lattice share
    // bit-identical fixed coordinates, so comparisons need no slack for any
    // single-chain form.
    static constexpr std::uint64_t kLattice = 1ULL << 26;

    std::uint64_t draw_index(std::uint64_t hi) {  // uniform-ish in [0, hi]
        return rng_.next() % (hi + 1);
    }

    std::int64_t draw_tau_index(std::uint64_t j) {
        const auto reach = static_cast<std::int64_t>(std::min(j, kLattice - j));
        return static_cast<std::int64_t>(
                   draw_index(static_cast<std::uint64_t>(2 * reach))) -
               reach;
    }

    static Triple lattice_point(std::uint64_t j, std::int64_t m, double omega) {
        const double mu = static_cast<double>(static_cast<std::int64_t>(j) + m) * 0x1.0p-26;
        const double nu = static_cast<double>(static_cast<std::int64_t>(j) - m) * 0x1.0p-26;
        return Triple(mu, omega, nu);
    }

    void check_strict_tau() {
        const std::uint64_t j = draw_index(kLattice);
        std::int64_t m1 = draw_tau_index(j);
        std::int64_t m2 = draw_tau_index(j);
        const double w = rng_.next_unit();
        if (std::abs(m1) > std::abs(m2)) std::swap(m1, m2);
        const Triple narrow = lattice_point(j, m1, w);
        const Triple wide = lattice_point(j, m2, w);
        for (const Variant v : kVariants) {
            const double e_narrow = entropy(narrow, v).entropy;
            const double e_wide = entropy(wide, v).entropy;
            if (e_narrow < e_wide) {
                fail(Inv::StrictTau, wide,
                     fmt("entropy_%s rose from %.17g to %.17g as |tau| grew",
                         variant_name(v).data(), e_narrow, e_wide));
            }
            const double gap = static_cast<double>(std::abs(m2) - std::abs(m1)) * 0x1.0p-25;
            if (gap > 1e-6 && e_narrow - e_wide <= 1e-12) {
                fail(Inv::StrictTau, wide,
                     fmt("entropy_%s not strictly lower (%.17g vs %.17g, |tau| gap %.17g)",
                         variant_name(v).data(), e_narrow, e_wide, gap));
            }
        }
    }

    void check_monotone_omega_sigma() {
        const std::uint64_t j = draw_index(kLattice);
        const std::int64_t m = draw_tau_index(j);
        const double w1 = rng_.next_unit();
        const double w2 = rng_.next_unit();
        const Triple lo = lattice_point(j, m, std::min(w1, w2));
        const Triple hi = lattice_point(j, m, std::max(w1, w2));
        require_ordered(Inv::MonotoneOmegaSigma, lo, hi, Variant::Czekanowski, 0.0);
        require_ordered(Inv::MonotoneOmegaSigma, lo, hi, Variant::Ruzicka, kRatioSlack);
    }

    // Ignorance case: kappa = 0, sigma = 1 - pi. Contradiction case: pi = 0,
    // sigma = 1 + kappa. Entropy is non-decreasing in the varied index with
    // (tau, omega) exactly fixed on the lattice.
    void check_monotone_pi_kappa(Inv inv) {
        const std::uint64_t half = kLattice / 2;
        const std::uint64_t q1 = draw_index(half);
        const std::uint64_t q2 = draw_index(half);
        const std::uint64_t q_lo = std::min(q1, q2);
        const std::uint64_t q_hi = std::max(q1, q2);
        const bool ignorance = inv == Inv::MonotoneIgnorance;
        // j_more carries more of the varied index and always has the tighter
        // tau reach, so a tau drawn against it fits both lattice points.
        const std::uint64_t j_more = ignorance ? half - q_hi : half + q_hi;
        const std::uint64_t j_less = ignorance ? half - q_lo : half + q_lo;
        const std::int64_t m = draw_tau_index(j_more);
        const double w = rng_.next_unit();
        const Triple lo = lattice_point(j_less, m, w);
        const Triple hi = lattice_point(j_more, m, w);
        require_ordered(inv, lo, hi, Variant::Czekanowski, 0.0);
        require_ordered(inv, lo, hi, Variant::Ruzicka, kRatioSlack);
    }

    void check_reductions() {
        const double fx = rng_.next_unit();
        const Triple fuzzy(fx, 0.0, 1.0 - fx);

        const double ia = rng_.next_unit();
        const double ib = rng_.next_unit();
        const Triple intuit(ia, 0.0, ib * (1.0 - ia));

        const double pa = rng_.next_unit();
        const double pb = rng_.next_unit();
        const double base = 1.0 - pa;
        const Triple para(pa, 0.0, base + pb * (1.0 - base));

        const auto compare = [&](Inv inv, Kind kind, const Triple& t) {
            for (const Variant v : kVariants) {
                try {
                    const double reduced = entropy_reduced(kind, v, t, Tolerance{tol_});
                    const double full = entropy(t, v).entropy;
                    if (std::abs(reduced - full) > kPathTol) {
                        fail(inv, t,
                             fmt("reduced %s form %.17g vs entropy %.17g (%s)",
                                 kind_name(kind).data(), reduced, full,
                                 variant_name(v).data()));
                    }
                } catch (const std::exception& e) {
                    fail(inv, t, fmt("reduced %s form threw: %s", kind_name(kind).data(),
                                     e.what()));
                }
            }
        };
        compare(Inv::ReductionFuzzy, Kind::Fuzzy, fuzzy);
        compare(Inv::ReductionIntuitionistic, Kind::IntuitionisticFuzzy, intuit);
        compare(Inv::ReductionParaconsistent, Kind::ParaconsistentFuzzy, para);
        compare(Inv::ReductionBifuzzy, Kind::Bifuzzy, intuit);
        compare(Inv::ReductionBifuzzy, Kind::Bifuzzy, para);

        // Forced-zero patterns follow the constructed family, not the
        // classified kind: near sigma = 1 a point may legitimately classify
        // as fuzzy while carrying component mass up to the class tolerance.
        const auto vanish = [&](const Triple& t, std::initializer_list<std::size_t> which) {
            for (const Variant v : kVariants) {
                try {
                    const auto parts = reduced_partition(t, v, Tolerance{tol_}).parts
                                           .components();
                    for (const std::size_t i : which) {
                        if (std::abs(parts[i]) > kPathTol) {
                            fail(Inv::ReducedVanishing, t,
                                 fmt("%s_%s = %.17g, expected 0", kComponentNames[i].data(),
                                     variant_name(v).data(), parts[i]));
                        }
                    }
                } catch (const std::exception& e) {
                    fail(Inv::ReducedVanishing, t, fmt("reduced partition threw: %s",
                                                       e.what()));
                }
            }
        };
        vanish(fuzzy, {3, 4, 5, 6});
        vanish(intuit, {4, 5, 6});
        vanish(para, {3, 5, 6});
    }

    SplitMix64 rng_;
    double tol_;
    CheckReport report_;
};

}  // namespace

std::size_t CheckReport::total_failures() const noexcept {
    std::size_t total = 0;
    for (const auto& inv : invariants) total += inv.failures;
    return total;
}

CheckReport run_checks(std::size_t samples, std::uint64_t seed, Tolerance tol) {
    return Checker(samples, seed, tol).run(samples);
}

}  // namespace neutro
