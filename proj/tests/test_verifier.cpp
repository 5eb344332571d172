#include <doctest.h>

#include <cmath>

#include "pucs/report_io.hpp"
#include "pucs/verifier.hpp"
#include "test_support.hpp"

using namespace pucs;
using pucs::testing::random_planted_instance;
using pucs::testing::two_union_tangent_balls;

TEST_CASE("brute-force projection: exhaustive argmin and tie reporting") {
    Problem problem = two_union_tangent_balls();
    const UcsSet& c1 = problem.set(1);
    const UcsSet& c2 = problem.set(2);

    BruteForceProjection far = brute_force_ucs_projection(c2, {50.0, 0.0});
    CHECK(far.piece_indices == std::vector<int>{1});
    CHECK(far.distance == doctest::Approx(std::sqrt(2501.0) - 1.0).epsilon(1e-12));

    // (150,2) is equidistant from pieces 2 and 3 of C1: both reported.
    BruteForceProjection tie = brute_force_ucs_projection(c1, {150.0, 2.0});
    CHECK(tie.piece_indices == std::vector<int>{2, 3});
    CHECK(tie.distance == doctest::Approx(49.0));

    std::vector<ConvexPiece> single;
    single.emplace_back(Box{{0.0, 0.0}, {1.0, 1.0}});
    UcsSet one("one", std::move(single));
    BruteForceProjection only = brute_force_ucs_projection(one, {5.0, 0.5});
    CHECK(only.piece_indices == std::vector<int>{1});
    CHECK(only.distance == doctest::Approx(4.0));
}

TEST_CASE("combo enumeration on the tangent-ball problem") {
    Problem problem = two_union_tangent_balls();
    auto reports = enumerate_feasible_combos(problem);
    REQUIRE(reports.size() == 8);

    int feasible = 0;
    for (const ComboReport& report : reports) {
        if (!report.feasible) continue;
        ++feasible;
        CHECK(report.combo == std::vector<int>{1, 1});
        REQUIRE(report.witness.has_value());
        CHECK(norm(*report.witness) <= 1e-6);
    }
    CHECK(feasible == 1);
}

TEST_CASE("combo enumeration: tangent pair feasible, separated pair not") {
    auto make = [](double gap_x) {
        std::vector<UcsSet> sets;
        std::vector<ConvexPiece> a;
        a.emplace_back(Ball{{0.0, 1.0}, 1.0});
        std::vector<ConvexPiece> b;
        b.emplace_back(Ball{{gap_x, -1.0}, 1.0});
        sets.emplace_back("A", std::move(a));
        sets.emplace_back("B", std::move(b));
        return Problem(2, std::move(sets));
    };

    auto tangent = enumerate_feasible_combos(make(0.0));
    REQUIRE(tangent.size() == 1);
    CHECK(tangent[0].feasible);
    CHECK(dist(*tangent[0].witness, {0.0, 0.0}) <= 1e-6);

    auto apart = enumerate_feasible_combos(make(10.0));
    REQUIRE(apart.size() == 1);
    CHECK_FALSE(apart[0].feasible);
    ConvexPiece pa(Ball{{0.0, 1.0}, 1.0});
    ConvexPiece pb(Ball{{10.0, -1.0}, 1.0});
    CHECK(apart[0].final_gap == doctest::Approx(gap(pa, pb)).epsilon(1e-6));
}

TEST_CASE("combo budget is enforced") {
    Problem problem = two_union_tangent_balls();  // 4 x 2 combos
    OracleConfig config;
    config.combo_budget = 7;
    CHECK_THROWS_AS(enumerate_feasible_combos(problem, config), BudgetError);
}

TEST_CASE("condition checker reproduces the expected theta table") {
    Problem problem = two_union_tangent_balls();
    ConditionReport report = check_condition(problem, 1000, 1e-6, 0);
    CHECK(report.holds);

    auto theta = [&report](int i, int j) {
        for (const ConditionEntry& entry : report.entries)
            if (entry.set_index == i && entry.piece_index == j) return entry.theta;
        return -1;
    };
    CHECK(theta(1, 1) == 1);
    CHECK(theta(1, 2) == 2);
    CHECK(theta(1, 3) == 2);
    CHECK(theta(1, 4) == 1);
    CHECK(theta(2, 1) == 1);
    CHECK(theta(2, 2) == 2);
}

TEST_CASE("condition checker fails on the symmetric counterexample") {
    std::vector<UcsSet> sets;
    std::vector<ConvexPiece> a;
    a.emplace_back(Ball{{0.0, 0.0}, 1.0});
    std::vector<ConvexPiece> b;
    b.emplace_back(Ball{{0.0, 5.0}, 1.0});
    b.emplace_back(Ball{{0.0, -5.0}, 1.0});
    sets.emplace_back("A", std::move(a));
    sets.emplace_back("B", std::move(b));
    Problem problem(2, std::move(sets));

    ConditionReport report = check_condition(problem, 10000, 1e-6, 0);
    CHECK_FALSE(report.holds);
    CHECK_FALSE(report.entries[0].constant);
    CHECK(report.entries[0].min_margin <= 1e-3);
}

TEST_CASE("condition checker: m = 1 single piece holds with theta = 1") {
    std::vector<UcsSet> sets;
    std::vector<ConvexPiece> a;
    a.emplace_back(Ball{{2.0, 2.0}, 1.0});
    sets.emplace_back("A", std::move(a));
    Problem problem(2, std::move(sets));

    ConditionReport report = check_condition(problem, 100, 1e-6, 0);
    CHECK(report.holds);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].theta == 1);
    CHECK(report.entries[0].min_margin == std::numeric_limits<double>::infinity());
}

TEST_CASE("condition checker rejects unbounded pieces") {
    std::vector<UcsSet> sets;
    std::vector<ConvexPiece> a;
    a.emplace_back(Halfspace{{1.0, 0.0}, 0.0});
    sets.emplace_back("A", std::move(a));
    Problem problem(2, std::move(sets));
    CHECK_THROWS_AS(check_condition(problem, 10, 1e-6, 0), SamplingError);
}

TEST_CASE("condition checker is deterministic per seed") {
    Problem problem = two_union_tangent_balls();
    std::string a = condition_report_to_json(check_condition(problem, 500, 1e-6, 123));
    std::string b = condition_report_to_json(check_condition(problem, 500, 1e-6, 123));
    std::string c = condition_report_to_json(check_condition(problem, 500, 1e-6, 124));
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("segment walks: no ties inside a basin, a tie across the bisector") {
    Problem problem = two_union_tangent_balls();

    SegmentWalkReport clean =
        check_singleton_projection_property(problem.set(2), {-10.0, 0.0}, {10.0, 0.0}, 101);
    CHECK_FALSE(clean.ties_observed);
    CHECK(clean.constant_index);
    CHECK(clean.indices_seen == std::vector<int>{1});

    SegmentWalkReport crossing =
        check_singleton_projection_property(problem.set(1), {90.0, -5.0}, {210.0, -5.0}, 121);
    CHECK(crossing.ties_observed);  // equidistance at x1 = 150
    CHECK_FALSE(crossing.constant_index);

    std::vector<ConvexPiece> single;
    single.emplace_back(Ball{{0.0, 0.0}, 1.0});
    UcsSet one("one", std::move(single));
    SegmentWalkReport trivial =
        check_singleton_projection_property(one, {5.0, 5.0}, {-3.0, 2.0}, 11);
    CHECK_FALSE(trivial.ties_observed);
    CHECK(trivial.constant_index);

    CHECK_THROWS_AS(check_singleton_projection_property(one, {0.0, 0.0}, {1.0, 1.0}, 1),
                    ValidationError);
}

TEST_CASE("cross-validation: planted feasible combo implies the PUCS orbit converges") {
    Rng rng(2025);
    int validated = 0;
    for (int trial = 0; trial < 8; ++trial) {
        auto instance = random_planted_instance(rng);
        if (!check_condition(instance.problem, 100, 1e-6, 1).holds) continue;

        auto combos = enumerate_feasible_combos(instance.problem);
        bool planted_found = false;
        for (const ComboReport& combo : combos)
            if (combo.combo == instance.planted_combo) planted_found = combo.feasible;
        CHECK(planted_found);

        SolveReport report = solve(instance.problem);
        int r = instance.planted_combo[0];
        const OrbitState& orbit = report.orbits[static_cast<std::size_t>(r) - 1];
        REQUIRE(orbit.status == OrbitStatus::Converged);
        for (const UcsSet& set : instance.problem.sets())
            CHECK(dist_ucs(set, orbit.current) <= 1e-6);

        // R-consistency: a pruned orbit's start piece holds no planted combo.
        for (int pruned_r : report.pruned) CHECK(pruned_r != r);
        ++validated;
    }
    CHECK(validated > 0);
}
