#include <array>
#include <cmath>
#include <utility>

#include "doctest.h"

#include "neutro/decomposition.hpp"
#include "test_util.hpp"

using namespace neutro;

namespace {

constexpr std::array<Variant, 2> kBothVariants = {Variant::Czekanowski, Variant::Ruzicka};

void check_components_near(const Hepta& got, const std::array<double, 7>& want) {
    const auto parts = got.components();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        INFO("component " << kComponentNames[i]);
        CHECK_NEAR(parts[i], want[i]);
    }
}

}  // namespace

TEST_SUITE("decomposition") {

TEST_CASE("the seven prototypes decompose to unit vectors") {
    const std::array<std::pair<Triple, std::size_t>, 7> prototypes = {{
        {Triple(1, 0, 0), 0},    // pure truth
        {Triple(0, 0, 1), 1},    // pure falsity
        {Triple(0.5, 0, 0.5), 2},  // pure ambiguity
        {Triple(0, 0, 0), 3},    // pure ignorance
        {Triple(1, 0, 1), 4},    // pure contradiction
        {Triple(0, 1, 0), 5},    // pure neutrality
        {Triple(1, 1, 1), 6},    // pure saturation
    }};
    for (const Variant v : kBothVariants) {
        for (const auto& [t, hot] : prototypes) {
            const auto parts = decompose(t, v).components();
            for (std::size_t i = 0; i < parts.size(); ++i) {
                INFO("prototype " << hot << " component " << kComponentNames[i]);
                CHECK(parts[i] == (i == hot ? 1.0 : 0.0));
            }
        }
    }
}

TEST_CASE("reference decompositions") {
    const Triple t(0.8, 0.2, 0.1);
    check_components_near(decompose(t, Variant::Czekanowski),
                          {0.5384615384615385, 0.0, 0.15384615384615383, 0.0, 0.0,
                           0.2692307692307693, 0.03846153846153848});
    check_components_near(decompose(t, Variant::Ruzicka),
                          {0.7000000000000001, 0.0, 0.09999999999999998, 0.0, 0.0, 0.175,
                           0.02500000000000001});
    CHECK(decompose(t, Variant::Czekanowski).variant == Variant::Czekanowski);
    CHECK(decompose(t, Variant::Ruzicka).variant == Variant::Ruzicka);
}

TEST_CASE("case construction at an ignorance-dominant and a contradiction-dominant point") {
    const Triple ignorance_heavy(0.3, 0.1, 0.2);  // pi = 0.5 >= omega >= kappa
    check_components_near(decompose_by_cases(ignorance_heavy, Variant::Czekanowski),
                          {0.062499999999999986, 0.0, 0.25, 0.5, 0.0, 0.18750000000000003,
                           0.0});
    check_components_near(decompose_by_cases(ignorance_heavy, Variant::Ruzicka),
                          {0.11764705882352937, 0.0, 0.23529411764705882,
                           0.47058823529411764, 0.0, 0.17647058823529413, 0.0});

    const Triple contradiction_heavy(0.9, 0.1, 0.4);  // kappa = 0.3 >= omega >= pi
    check_components_near(decompose_by_cases(contradiction_heavy, Variant::Czekanowski),
                          {0.3571428571428571, 0.0, 0.14285714285714282, 0.0,
                           0.28571428571428575, 0.0, 0.2142857142857143});
    check_components_near(decompose_by_cases(contradiction_heavy, Variant::Ruzicka),
                          {0.5263157894736842, 0.0, 0.10526315789473681, 0.0,
                           0.2105263157894737, 0.0, 0.15789473684210528});

    // The unified form agrees on the same points.
    for (const Variant v : kBothVariants) {
        for (const Triple& t : {ignorance_heavy, contradiction_heavy}) {
            check_components_near(decompose(t, v), decompose_by_cases(t, v).components());
        }
    }
}

TEST_CASE("neutrality-dominant point splits omega evenly") {
    const Triple t(0.5, 0.4, 0.5);  // pi = kappa = 0, omega dominates
    for (const Variant v : kBothVariants) {
        const Hepta h = decompose(t, v);
        CHECK(h.truth == 0.0);
        CHECK(h.falsity == 0.0);
        CHECK(h.ignorance == 0.0);
        CHECK(h.contradiction == 0.0);
        CHECK(h.neutrality == h.saturation);
        CHECK_NEAR(h.ambiguity + h.neutrality + h.saturation, 1.0);
        CHECK(entropy(t, v).entropy == 1.0);
    }
    CHECK_NEAR(decompose(t, Variant::Czekanowski).neutrality, 0.2 / 1.4);
}

TEST_CASE("partition of unity and exclusivity across the cube") {
    SplitMix64 rng(31);
    for (int i = 0; i < 100000; ++i) {
        const Triple t = testutil::random_triple(rng);
        for (const Variant v : kBothVariants) {
            const Hepta h = decompose(t, v);
            const auto parts = h.components();
            double sum = 0.0;
            for (const double p : parts) {
                CHECK(p >= 0.0);
                CHECK(p <= 1.0 + 1e-12);
                sum += p;
            }
            CHECK(std::abs(sum - 1.0) <= 1e-12);
            CHECK(std::abs(h.uncertainty() - entropy(t, v).entropy) <= 1e-12);
            CHECK(h.truth * h.falsity == 0.0);
            CHECK(h.ignorance * h.contradiction == 0.0);
            int zeros = 0;
            for (const double p :
                 {h.ignorance, h.contradiction, h.neutrality, h.saturation}) {
                if (p == 0.0) ++zeros;
            }
            CHECK(zeros >= 2);
        }
    }
}

TEST_CASE("unified and case forms agree across the cube and on case boundaries") {
    SplitMix64 rng(32);
    const auto agree = [](const Triple& t) {
        for (const Variant v : kBothVariants) {
            const auto unified = decompose(t, v).components();
            const auto cases = decompose_by_cases(t, v).components();
            for (std::size_t i = 0; i < unified.size(); ++i) {
                INFO("component " << kComponentNames[i]);
                CHECK(std::abs(unified[i] - cases[i]) <= 1e-12);
            }
        }
    };
    for (int i = 0; i < 100000; ++i) {
        agree(testutil::random_triple(rng));
    }
    // Boundary sets: omega equal to the dominant index, and pi = kappa = 0.
    // Dyadic sigma keeps the realized indices exact, so omega can be placed
    // exactly on the boundary by evaluating the library's own defining
    // expressions.
    constexpr std::uint64_t lattice = 1ULL << 26;
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t j = rng.next() % (lattice + 1);
        const auto reach = static_cast<std::int64_t>(std::min(j, lattice - j));
        const std::int64_t m =
            static_cast<std::int64_t>(rng.next() % (2 * reach + 1)) - reach;
        const double mu = static_cast<double>(static_cast<std::int64_t>(j) + m) * 0x1.0p-26;
        const double nu = static_cast<double>(static_cast<std::int64_t>(j) - m) * 0x1.0p-26;
        const double sigma = mu + nu;
        const double pi = 1.0 - std::min(sigma, 1.0);
        const double kappa = std::max(sigma, 1.0) - 1.0;
        agree(Triple(mu, pi, nu));     // omega on the ignorance boundary
        agree(Triple(mu, kappa, nu));  // omega on the contradiction boundary
    }
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.next_unit();
        const double w = rng.next_unit();
        agree(Triple(x, w, 1.0 - x));  // pi = kappa = 0 exactly
    }
}

TEST_CASE("swapping mu and nu exchanges truth and falsity only") {
    SplitMix64 rng(33);
    for (int i = 0; i < 10000; ++i) {
        const Triple t = testutil::random_triple(rng);
        const Triple swapped(t.nu(), t.omega(), t.mu());
        for (const Variant v : kBothVariants) {
            const Hepta a = decompose(t, v);
            const Hepta b = decompose(swapped, v);
            CHECK(a.truth == b.falsity);
            CHECK(a.falsity == b.truth);
            CHECK(a.ambiguity == b.ambiguity);
            CHECK(a.ignorance == b.ignorance);
            CHECK(a.contradiction == b.contradiction);
            CHECK(a.neutrality == b.neutrality);
            CHECK(a.saturation == b.saturation);
        }
    }
}

TEST_CASE("no component carries a negative zero") {
    const std::array<Triple, 4> points = {Triple(0.4, 0.1, 0.4), Triple(0.5, 0, 0.5),
                                          Triple(0.3, 0, 0.7), Triple(1, 0, 0)};
    for (const Variant v : kBothVariants) {
        for (const Triple& t : points) {
            for (const double p : decompose(t, v).components()) {
                if (p == 0.0) CHECK(!std::signbit(p));
            }
        }
    }
}

TEST_CASE("reduced partitions vanish where the family demands") {
    SplitMix64 rng(34);
    for (int i = 0; i < 10000; ++i) {
        const Triple fuzzy = testutil::random_fuzzy(rng);
        const Triple intuit = testutil::random_intuitionistic(rng);
        const Triple para = testutil::random_paraconsistent(rng);
        for (const Variant v : kBothVariants) {
            const ReducedPartition rf = reduced_partition(fuzzy, v);
            CHECK(rf.kind == Kind::Fuzzy);
            CHECK(rf.parts.ignorance <= 1e-12);
            CHECK(rf.parts.contradiction <= 1e-12);
            CHECK(rf.parts.neutrality <= 1e-12);
            CHECK(rf.parts.saturation <= 1e-12);

            const ReducedPartition ri = reduced_partition(intuit, v);
            CHECK((ri.kind == Kind::IntuitionisticFuzzy || ri.kind == Kind::Fuzzy));
            CHECK(ri.parts.contradiction <= 1e-12);
            CHECK(ri.parts.neutrality <= 1e-12);
            CHECK(ri.parts.saturation <= 1e-12);

            const ReducedPartition rp = reduced_partition(para, v);
            CHECK((rp.kind == Kind::ParaconsistentFuzzy || rp.kind == Kind::Fuzzy));
            CHECK(rp.parts.ignorance <= 1e-12);
            CHECK(rp.parts.neutrality <= 1e-12);
            CHECK(rp.parts.saturation <= 1e-12);
        }
    }
}

}  // TEST_SUITE
