#include <doctest.h>

#include <cmath>
#include <random>

#include "novdist/errors.hpp"
#include "novdist/metric.hpp"
#include "space_oracle.hpp"

using namespace novdist;

namespace {

Solution sol(std::initializer_list<ActionVector> actions) { return Solution{actions}; }

// gridnav-style discrete actions
const ActionVector N{0.0, 1.0};
const ActionVector E{1.0, 0.0};

}  // namespace

TEST_CASE("action metric construction") {
    auto m = ActionMetricSpec::euclidean({{0.0, 3.0}, {0.0, 4.0}});
    CHECK(m.max_a == doctest::Approx(5.0));
    CHECK(ActionMetricSpec::discrete().max_a == 1.0);
    CHECK_THROWS_AS(ActionMetricSpec::euclidean({{1.0, 1.0}}), SpecValidation);
    CHECK_THROWS_AS(ActionMetricSpec::euclidean({}), SpecValidation);
}

TEST_CASE("solution_distance basics") {
    auto m = ActionMetricSpec::euclidean({{0.0, 1.0}, {0.0, 1.0}});
    auto s = sol({{0.25, 0.5}, {0.75, 0.0}});
    CHECK(solution_distance(s, s, m) == 0.0);

    // opposite corners of the bounds box, one action: diameter forces 1
    CHECK(solution_distance(sol({{0.0, 0.0}}), sol({{1.0, 1.0}}), m) == doctest::Approx(1.0));

    // discrete: (N,N,E) vs (N,E,E) differs in one of three positions
    auto d = ActionMetricSpec::discrete();
    CHECK(solution_distance(sol({N, N, E}), sol({N, E, E}), d) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("solution_distance errors") {
    auto m = ActionMetricSpec::euclidean({{0.0, 1.0}});
    CHECK_THROWS_AS(solution_distance(sol({{0.5}}), sol({{0.5}, {0.5}}), m), LengthMismatch);
    CHECK_THROWS_AS(solution_distance(sol({{0.5, 0.5}}), sol({{0.5, 0.5}}), m), DimensionMismatch);
    CHECK_THROWS_AS(solution_distance(sol({{std::nan("")}}), sol({{0.5}}), m), InvalidAction);
    auto d = ActionMetricSpec::discrete();
    CHECK_THROWS_AS(solution_distance(sol({{1.0}}), sol({{1.0, 2.0}}), d), DimensionMismatch);
}

TEST_CASE("partition_space dedups, partitions and sorts") {
    auto d = ActionMetricSpec::discrete();
    CHECK(partition_space({}, d).total_size == 0);

    auto space = partition_space({sol({E, N}), sol({E, N}), sol({N})}, d);
    CHECK(space.total_size == 2);
    REQUIRE(space.partitions.count(1) == 1);
    REQUIRE(space.partitions.count(2) == 1);
    CHECK(space.partitions.at(1) == std::vector<Solution>{sol({N})});
    CHECK(space.partitions.at(2) == std::vector<Solution>{sol({E, N})});

    CHECK_THROWS_AS(partition_space({sol({{1.0}}), sol({{1.0, 2.0}})}, d), DimensionMismatch);
}

TEST_CASE("partition_distance hand cases") {
    auto m = ActionMetricSpec::euclidean({{0.0, 1.0}});
    const std::vector<Solution> two = {sol({{0.0}}), sol({{1.0}})};
    const std::vector<Solution> one = {sol({{0.0}})};

    auto [t0, s0] = partition_distance(two, two, {2, 2}, m);
    CHECK(t0 == 0.0);
    CHECK(s0 == 0.0);

    auto [t1, s1] = partition_distance(two, one, {2, 1}, m);
    CHECK(t1 == doctest::Approx(0.5));
    CHECK(s1 == 0.0);

    auto [t2, s2] = partition_distance(one, two, {1, 2}, m);
    CHECK(t2 == doctest::Approx(-0.5));
    CHECK(s2 == 0.0);

    CHECK_THROWS_AS(partition_distance(one, one, {0, 0}, m), InternalInvariantViolation);
}

TEST_CASE("space_distance hand cases") {
    auto m = ActionMetricSpec::euclidean({{0.0, 1.0}});
    auto a = partition_space({sol({{0.0}}), sol({{1.0}})}, m);
    auto b = partition_space({sol({{0.0}})}, m);

    CHECK(space_distance(a, a, NormalizationMode::Literal).distance == 0.0);
    CHECK(space_distance(a, a, NormalizationMode::Single).distance == 0.0);

    auto lit = space_distance(a, b, NormalizationMode::Literal);
    CHECK(lit.distance == doctest::Approx(0.25));
    CHECK(lit.per_partition.size() == 1);
    CHECK(lit.per_partition[0].size_a == 2);
    CHECK(lit.per_partition[0].size_b == 1);
    CHECK(space_distance(a, b, NormalizationMode::Single).distance == doctest::Approx(0.5));

    CHECK(space_distance(b, a, NormalizationMode::Literal).distance == doctest::Approx(-0.25));
    CHECK(space_distance(b, a, NormalizationMode::Single).distance == doctest::Approx(-0.5));

    PartitionedSolutionSpace empty;
    empty.metric = m;
    CHECK_THROWS_AS(space_distance(empty, empty, NormalizationMode::Literal),
                    EmptySolutionSpaces);
    // one empty side is fine
    CHECK(space_distance(a, empty, NormalizationMode::Literal).distance == doctest::Approx(0.5));
}

TEST_CASE("classify_difficulty thresholds") {
    CHECK(classify_difficulty(0.76) == DifficultyClass::Hard);
    CHECK(classify_difficulty(-0.15) == DifficultyClass::Easy);
    CHECK(classify_difficulty(0.26) == DifficultyClass::Medium);
    CHECK(classify_difficulty(0.0) == DifficultyClass::Easy);   // boundary
    CHECK(classify_difficulty(0.3) == DifficultyClass::Medium); // boundary
    CHECK_THROWS_AS(classify_difficulty(std::nan("")), InvalidDistance);
    CHECK_THROWS_AS(classify_difficulty(0.5, {0.4, 0.2}), SpecValidation);
}

TEST_CASE("properties on random space pairs") {
    std::mt19937_64 rng(20240817);
    for (int iter = 0; iter < 300; ++iter) {
        auto pair = oracle::random_pair(rng);
        auto a = partition_space(pair.a, pair.metric);
        auto b = partition_space(pair.b, pair.metric);

        for (auto mode : {NormalizationMode::Literal, NormalizationMode::Single}) {
            auto ab = space_distance(a, b, mode);
            auto ba = space_distance(b, a, mode);

            // brute-force oracle equivalence
            const double expect = oracle::brute_force_distance(pair.a, pair.b, pair.metric, mode);
            CHECK(std::abs(ab.distance - expect) <= 1e-12);

            // bound
            CHECK(std::abs(ab.distance) <= 2.0 + 1e-12);

            // decomposition identities
            const double M = static_cast<double>(std::max(a.total_size, b.total_size));
            const double Mk = mode == NormalizationMode::Literal ? M * M : M;
            double matched = 0;
            for (const auto& p : ab.per_partition) matched += p.matched_sum;
            CHECK(std::abs(ab.distance + ba.distance - 2.0 * matched / Mk) <= 1e-12);
            CHECK(ab.distance + ba.distance >= -1e-12);
            const double size_diff =
                static_cast<double>(a.total_size) - static_cast<double>(b.total_size);
            CHECK(std::abs(ab.distance - ba.distance - 2.0 * size_diff / Mk) <= 1e-12);

            // identity
            if (!a.empty()) CHECK(space_distance(a, a, mode).distance == 0.0);
        }

        // verify distance recomposes from the per-partition breakdown
        auto lit = space_distance(a, b, NormalizationMode::Literal);
        const double M = static_cast<double>(std::max(a.total_size, b.total_size));
        double recomputed = 0;
        for (const auto& p : lit.per_partition) recomputed += p.term / M;
        CHECK(std::abs(lit.distance - recomputed) <= 1e-12);
    }
}

TEST_CASE("superset easiness and pure-shrink hardness") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        auto pair = oracle::random_pair(rng);
        if (pair.a.empty()) continue;
        auto a = partition_space(pair.a, pair.metric);

        // superset: b = a plus extras
        auto plus = pair.a;
        plus.insert(plus.end(), pair.b.begin(), pair.b.end());
        auto b_sup = partition_space(plus, pair.metric);
        for (auto mode : {NormalizationMode::Literal, NormalizationMode::Single}) {
            const double d = space_distance(a, b_sup, mode).distance;
            CHECK(d <= 1e-12);
            CHECK(classify_difficulty(d) == DifficultyClass::Easy);
        }

        // pure shrink: b = strict subset of a (drop the last solution of each partition)
        if (a.total_size < 2) continue;
        std::vector<Solution> kept;
        for (const auto& [n, part] : a.partitions)
            for (std::size_t i = 0; i + 1 < part.size(); ++i) kept.push_back(part[i]);
        if (kept.empty()) continue;
        auto b_sub = partition_space(kept, pair.metric);
        const double M = static_cast<double>(a.total_size);
        const double drop = M - static_cast<double>(b_sub.total_size);
        CHECK(std::abs(space_distance(a, b_sub, NormalizationMode::Literal).distance -
                      drop / (M * M)) <= 1e-12);
        CHECK(std::abs(space_distance(a, b_sub, NormalizationMode::Single).distance -
                      drop / M) <= 1e-12);
    }
}
