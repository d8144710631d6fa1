#include <doctest.h>

#include <algorithm>
#include <random>

#include "evident/combination.hpp"
#include "support/expect_error.hpp"
#include "support/oracles.hpp"

using namespace evident;
using testing::code_of;

TEST_CASE("conflict_mass") {
    const auto frame = make_frame({"lake", "tower"});
    const auto lake = frame.proposition({"lake"});
    const auto tower = frame.proposition({"tower"});
    const auto m1 = simple_support(frame, lake, 0.7);
    const auto m2 = simple_support(frame, tower, 0.6);
    CHECK(testing::oracle_combine(m1, m2).conflict == doctest::Approx(0.42).epsilon(1e-12));
    CHECK(conflict_mass(m1, m2) == doctest::Approx(0.42).epsilon(1e-12));
    CHECK(conflict_mass(m1, vacuous(frame)) == 0.0);
    CHECK(conflict_mass(simple_support(frame, lake, 1.0), simple_support(frame, tower, 1.0)) == 1.0);

    const auto other = make_frame({"lake", "tower"});
    CHECK(code_of([&] { conflict_mass(m1, vacuous(other)); }) == ErrorCode::FrameMismatch);
}

TEST_CASE("combine agreeing simple supports") {
    const auto frame = make_frame({"lake", "tower"});
    const auto lake = frame.proposition({"lake"});
    const auto report = combine(simple_support(frame, lake, 0.6), simple_support(frame, lake, 0.5));
    CHECK(report.conflict == 0.0);
    CHECK(report.result.mass(lake) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(report.result.mass(frame.full()) == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(report.result.focals().size() == 2);
}

TEST_CASE("combine conflicting simple supports matches the pairwise oracle") {
    const auto frame = make_frame({"lake", "tower"});
    const auto lake = frame.proposition({"lake"});
    const auto tower = frame.proposition({"tower"});
    const auto m1 = simple_support(frame, lake, 0.7);
    const auto m2 = simple_support(frame, tower, 0.6);
    const auto oracle = testing::oracle_combine(m1, m2);
    // Oracle: products 0.28 / 0.18 / 0.12 scaled by 1 / 0.58.
    CHECK(oracle.masses.at(lake.bits()) == doctest::Approx(0.482759).epsilon(1e-6));
    CHECK(oracle.masses.at(tower.bits()) == doctest::Approx(0.310345).epsilon(1e-6));
    CHECK(oracle.masses.at(frame.universe()) == doctest::Approx(0.206897).epsilon(1e-6));

    const auto report = combine(m1, m2);
    CHECK(report.conflict == doctest::Approx(0.42).epsilon(1e-12));
    CHECK(std::abs(report.result.mass(lake) - 0.482759) <= 1e-6);
    CHECK(std::abs(report.result.mass(tower) - 0.310345) <= 1e-6);
    CHECK(std::abs(report.result.mass(frame.full()) - 0.206897) <= 1e-6);
    CHECK(testing::max_mass_diff(report.result, oracle.masses) <= 1e-12);
}

TEST_CASE("vacuous is the identity and total conflict is an error") {
    const auto frame = make_frame({"lake", "tower"});
    const auto lake = frame.proposition({"lake"});
    const auto tower = frame.proposition({"tower"});
    const auto m = mass_new(frame, {{lake, 0.3}, {tower, 0.5}, {frame.full(), 0.2}});
    const auto report = combine(m, vacuous(frame));
    CHECK(report.conflict == 0.0);
    CHECK(testing::max_mass_diff(report.result, m) <= 1e-12);

    try {
        combine(simple_support(frame, lake, 1.0), simple_support(frame, tower, 1.0));
        FAIL("expected TotalConflict");
    } catch (const TotalConflictError& e) {
        CHECK(e.code() == ErrorCode::TotalConflict);
    }
}

TEST_CASE("combine_all folds left and accumulates conflict") {
    const auto frame = make_frame({"lake", "tower", "ridge"});
    const auto lake = frame.proposition({"lake"});
    const auto tower = frame.proposition({"tower"});

    const auto single = simple_support(frame, lake, 0.4);
    const auto one = combine_all(std::vector{single});
    CHECK(one.conflict == 0.0);
    CHECK(testing::max_mass_diff(one.result, single) == 0.0);

    const std::vector three(3, simple_support(frame, lake, 0.5));
    CHECK(combine_all(three).result.mass(lake) == doctest::Approx(0.875).epsilon(1e-12));

    // Cumulative conflict 1 - (1 - k1)(1 - k2).
    const std::vector mixed{simple_support(frame, lake, 0.7), simple_support(frame, tower, 0.6),
                            simple_support(frame, tower, 0.5)};
    const auto step1 = combine(mixed[0], mixed[1]);
    const auto step2 = combine(step1.result, mixed[2]);
    CHECK(combine_all(mixed).conflict ==
          doctest::Approx(1.0 - (1.0 - step1.conflict) * (1.0 - step2.conflict)).epsilon(1e-15));

    const std::vector hopeless{simple_support(frame, lake, 0.5), simple_support(frame, lake, 1.0),
                               simple_support(frame, tower, 1.0)};
    try {
        combine_all(hopeless);
        FAIL("expected TotalConflict");
    } catch (const TotalConflictError& e) {
        CHECK(e.index() == 2);
    }
    CHECK(code_of([] { combine_all(std::span<const MassFunction>{}); }) == ErrorCode::EmptyInput);
}

TEST_CASE("combine_all is order independent within tolerance") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto frame = testing::frame_of_size(2 + trial % 4);
        std::vector<MassFunction> masses;
        for (int i = 0; i < 3; ++i) masses.push_back(testing::random_mass(frame, rng));
        std::vector<int> order{0, 1, 2};
        CombinationReport reference{masses[0]};
        try {
            reference = combine_all(masses);
        } catch (const TotalConflictError&) {
            continue;
        }
        if (reference.conflict > 0.99) continue;
        do {
            std::vector<MassFunction> permuted;
            for (int i : order) permuted.push_back(masses[static_cast<std::size_t>(i)]);
            const auto r = combine_all(permuted);
            CHECK(testing::max_mass_diff(r.result, reference.result) <= 1e-9);
            CHECK(std::abs(r.conflict - reference.conflict) <= 1e-9);
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

TEST_CASE("discount") {
    const auto frame = make_frame({"lake", "tower"});
    const auto lake = frame.proposition({"lake"});
    const auto m = mass_new(frame, {{lake, 0.3}, {frame.proposition({"tower"}), 0.5}, {frame.full(), 0.2}});
    CHECK(testing::max_mass_diff(discount(m, 1.0), m) == 0.0);
    CHECK(testing::max_mass_diff(discount(m, 0.0), vacuous(frame)) == 0.0);

    const auto d = discount(simple_support(frame, lake, 0.6), 0.81);
    CHECK(0.6 * 0.81 == doctest::Approx(0.486).epsilon(1e-15));
    CHECK(testing::max_mass_diff(d, simple_support(frame, lake, 0.486)) <= 1e-12);
    CHECK(code_of([&] { discount(m, 1.01); }) == ErrorCode::FactorOutOfRange);
    CHECK(code_of([&] { discount(m, -0.5); }) == ErrorCode::FactorOutOfRange);
}

TEST_CASE("orthogonal sum properties on random masses") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        const auto frame = testing::frame_of_size(1 + trial % 5);
        const auto m1 = testing::random_mass(frame, rng);
        const auto m2 = testing::random_mass(frame, rng);
        const auto m3 = testing::random_mass(frame, rng);

        const auto oracle = testing::oracle_combine(m1, m2);
        if (oracle.conflict > 1.0 - 1e-9) continue;
        const auto r12 = combine(m1, m2);
        const auto r21 = combine(m2, m1);
        CHECK(testing::max_mass_diff(r12.result, r21.result) == 0.0);
        CHECK(r12.conflict == r21.conflict);
        CHECK(testing::max_mass_diff(r12.result, oracle.masses) <= 1e-9);
        CHECK(std::abs(r12.conflict - oracle.conflict) <= 1e-12);
        CHECK(std::abs(r12.result.total() - 1.0) <= 1e-12);
        CHECK(r12.result.mass(frame.empty()) == 0.0);

        try {
            const auto left = combine(r12.result, m3);
            const auto right = combine(m1, combine(m2, m3).result);
            CHECK(testing::max_mass_diff(left.result, right.result) <= 1e-9);
        } catch (const TotalConflictError&) {
        }
    }
}

TEST_CASE("n agreeing simple supports combine to 1 - prod(1 - s)") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> degree(0.0, 0.95);
    for (int trial = 0; trial < 100; ++trial) {
        const auto frame = testing::frame_of_size(1 + trial % 5);
        std::uniform_int_distribution<std::uint64_t> subset(1, frame.universe());
        const auto focus = frame.from_bits(subset(rng));
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 10);
        std::vector<MassFunction> masses;
        double residual = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double s = degree(rng);
            residual *= 1.0 - s;
            masses.push_back(simple_support(frame, focus, s));
        }
        const auto r = combine_all(masses);
        CHECK(r.conflict == 0.0);
        CHECK(belief(r.result, focus) == doctest::Approx(focus.is_full() ? 1.0 : 1.0 - residual).epsilon(1e-12));
        CHECK(testing::max_mass_diff(r.result, simple_support(frame, focus, 1.0 - residual)) <= 1e-12);
    }
}

TEST_CASE("bayesian combination is the normalized pointwise product") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto frame = testing::frame_of_size(1 + trial % 6);
        const auto p = testing::random_bayesian(frame, rng);
        const auto q = testing::random_bayesian(frame, rng);
        const auto r = combine(p, q);
        CHECK(is_bayesian(r.result));
        double z = 0.0;
        for (std::size_t i = 0; i < frame.size(); ++i) z += p.mass(frame.singleton(i)) * q.mass(frame.singleton(i));
        for (std::size_t i = 0; i < frame.size(); ++i) {
            const double expected = p.mass(frame.singleton(i)) * q.mass(frame.singleton(i)) / z;
            CHECK(std::abs(r.result.mass(frame.singleton(i)) - expected) <= 1e-12);
        }
    }
}

TEST_CASE("running conflict never decreases as reports are appended") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto frame = testing::frame_of_size(3);
        std::vector<MassFunction> masses;
        double previous = 0.0;
        for (int i = 0; i < 6; ++i) {
            std::uniform_int_distribution<std::uint64_t> subset(1, frame.universe());
            std::uniform_real_distribution<double> degree(0.0, 0.9);
            masses.push_back(simple_support(frame, frame.from_bits(subset(rng)), degree(rng)));
            const auto r = combine_all(masses);
            CHECK(r.conflict >= previous);
            previous = r.conflict;
        }
    }
}
