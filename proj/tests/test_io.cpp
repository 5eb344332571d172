#include <doctest.h>

#include "pucs/problem_io.hpp"
#include "pucs/report_io.hpp"
#include "pucs/solver.hpp"
#include "test_support.hpp"

using namespace pucs;
using pucs::testing::two_union_tangent_balls;
using pucs::testing::two_union_tangent_balls_text;

TEST_CASE("parsing the tangent-ball problem file") {
    ParsedProblem parsed = parse_problem(two_union_tangent_balls_text());
    CHECK(parsed.problem.dimension() == 2);
    REQUIRE(parsed.problem.set_count() == 2);
    CHECK(parsed.problem.set(1).piece_count() == 4);
    CHECK(parsed.problem.set(2).piece_count() == 2);
    CHECK(parsed.problem.set(1).name() == "C1");
    CHECK(parsed.warnings.empty());
    CHECK(parsed.initial_points.empty());
}

TEST_CASE("parsing initial points") {
    std::string text = std::string(two_union_tangent_balls_text()) + "initial 1 0.5 1\n";
    ParsedProblem parsed = parse_problem(text);
    REQUIRE(parsed.initial_points.size() == 1);
    CHECK(parsed.initial_points[0].first == 1);
    CHECK(parsed.initial_points[0].second == Vec{0.5, 1.0});
}

TEST_CASE("parse errors carry line numbers") {
    auto check_line = [](const std::string& text, int line) {
        try {
            parse_problem(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };

    check_line("dimension 2\nset A\n  ball center 0 0 radius -1\n", 3);
    check_line("dimension 2\nset A\n  ball center 0 0 0 radius 1\n", 3);  // 3-dim center
    check_line("dimension 2\nset A\n  sphere center 0 0 radius 1\n", 3);
    check_line("set A\n  ball center 0 0 radius 1\n", 1);  // sets before dimension
    check_line("dimension 0\n", 1);
    check_line("dimension 2\nset A\n", 2);  // empty set
    check_line("dimension 2\n", 1);         // no sets
    check_line("dimension 2\nset A\n  ball center 0 0 radius 1 extra\n", 3);
}

TEST_CASE("overlapping pieces surface as warnings, not errors") {
    std::string text =
        "dimension 2\n"
        "set A\n"
        "  ball center 0 0 radius 1\n"
        "  ball center 1 0 radius 1\n";
    ParsedProblem parsed = parse_problem(text);
    REQUIRE(parsed.warnings.size() == 1);
    CHECK(parsed.warnings[0].find("not strictly disjoint") != std::string::npos);
}

TEST_CASE("serialize round-trips every binary64 value") {
    Problem problem = two_union_tangent_balls();
    std::string text = serialize_problem(problem, {{1, {0.5, 1.0}}});
    ParsedProblem parsed = parse_problem(text);
    CHECK(serialize_problem(parsed.problem, parsed.initial_points) == text);

    // Awkward values: negative zero, tiny, huge, non-round decimals.
    std::vector<ConvexPiece> pieces;
    pieces.emplace_back(Ball{{-0.0, 0.1 + 0.2}, 1.0e-13});
    pieces.emplace_back(Box{{1.0e15, -7.0 / 3.0}, {1.1e15, 0.0}});
    std::vector<UcsSet> sets;
    sets.emplace_back("weird", std::move(pieces));
    Problem awkward(2, std::move(sets));
    std::string a = serialize_problem(awkward);
    CHECK(serialize_problem(parse_problem(a).problem) == a);
}

TEST_CASE("round-trip through parse preserves solver behavior exactly") {
    Problem original = two_union_tangent_balls();
    ParsedProblem reparsed = parse_problem(serialize_problem(original));
    SolveReport a = solve(original);
    SolveReport b = solve(reparsed.problem);
    CHECK(solve_report_to_json(a, original) == solve_report_to_json(b, reparsed.problem));
}

TEST_CASE("trace CSV has the documented header and row count") {
    ParsedProblem parsed = parse_problem(two_union_tangent_balls_text());
    SolverConfig config;
    config.record_trace = true;
    SolveReport report = solve(parsed.problem, config, parsed.initial_points);
    std::string csv = trace_to_csv(report, parsed.problem);

    CHECK(csv.rfind("orbit,sweep,k,i,tau,x1,x2,step,dist_C1,dist_C2\n", 0) == 0);
    long rows = -1;  // header
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == static_cast<long>(report.trace.size()));
}
