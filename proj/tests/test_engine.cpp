#include <catch2/catch_amalgamated.hpp>

#include "trigather/engine.hpp"
#include "trigather/gen.hpp"
#include "trigather/trace_io.hpp"

using namespace trigather;

namespace {

Configuration make(std::initializer_list<GridPoint> points) {
    std::vector<Placement> pl;
    for (GridPoint p : points) pl.push_back({p, 1});
    return Configuration::from_placements(pl);
}

}  // namespace

TEST_CASE("step applies snapshot semantics") {
    const Configuration pair = make({{0, 0}, {0, 2}});

    const Configuration both = step(pair, {0, 1});
    REQUIRE(both.count_at({0, 0}) == 2);
    REQUIRE(is_gathered(both));

    const Configuration bottom_only = step(pair, {0});
    REQUIRE(bottom_only == pair);

    REQUIRE_THROWS_AS(step(pair, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(step(pair, {5}), std::out_of_range);
}

TEST_CASE("step is independent of activation order") {
    const Configuration c = make({{0, 0}, {1, 1}, {2, 2}, {2, 0}});
    const Configuration a = step(c, {0, 1, 2, 3});
    const Configuration b = step(c, {3, 2, 1, 0});
    const Configuration d = step(c, {2, 0, 3, 1});
    REQUIRE(a == b);
    REQUIRE(a == d);
}

TEST_CASE("vertical line of three gathers in two fsync rounds") {
    const Trace t = run(make({{0, 0}, {0, 2}, {0, 4}}), Scheduler::fsync());
    REQUIRE(t.outcome == Outcome::Gathered);
    REQUIRE(t.rounds == 2);
    REQUIRE(t.epochs == 2);
    REQUIRE(t.swap_count == 0);
    REQUIRE(t.records.size() == 2);
    REQUIRE(t.records[0].epoch_boundary);
    REQUIRE(t.records[0].after.top_hrow == 2);
}

TEST_CASE("staircase of three gathers at the bottom-left corner") {
    const Trace t = run(make({{0, 0}, {1, 1}, {2, 2}}), Scheduler::fsync());
    REQUIRE(t.outcome == Outcome::Gathered);
    REQUIRE(t.rounds == 2);
    REQUIRE(t.epochs == 2);
}

TEST_CASE("fsync line of n robots takes exactly n-1 rounds and epochs") {
    for (int n : {2, 4, 7, 12}) {
        const Trace t = run(generate_connected(n, 0, Shape::Line), Scheduler::fsync());
        REQUIRE(t.outcome == Outcome::Gathered);
        REQUIRE(t.rounds == n - 1);
        REQUIRE(t.epochs == n - 1);
    }
}

TEST_CASE("single robot is gathered at round zero") {
    const Trace t = run(make({{3, 1}}), Scheduler::random_fair(9));
    REQUIRE(t.outcome == Outcome::Gathered);
    REQUIRE(t.rounds == 0);
    REQUIRE(t.epochs == 0);
}

TEST_CASE("disconnected initial configurations are rejected") {
    REQUIRE_THROWS_WITH(run(make({{0, 0}, {2, 0}}), Scheduler::fsync()),
                        "disconnected initial configuration");
}

TEST_CASE("round limit yields MaxRoundsExceeded") {
    RunOptions opt;
    opt.max_rounds = 1;
    const Trace t = run(make({{0, 0}, {0, 2}, {0, 4}}), Scheduler::fsync(), opt);
    REQUIRE(t.outcome == Outcome::MaxRoundsExceeded);
    REQUIRE(t.rounds == 1);
}

TEST_CASE("script exhaustion ends the run") {
    const Trace t = run(make({{0, 0}, {0, 2}, {0, 4}}),
                        Scheduler::scripted({{0, 1, 2}}));
    REQUIRE(t.outcome == Outcome::MaxRoundsExceeded);
    REQUIRE(t.rounds == 1);
    REQUIRE(t.epochs == 1);
}

TEST_CASE("epoch counting is greedy with a partial tail") {
    REQUIRE(epoch_count({{0, 1, 2}}, 3) == 1);
    REQUIRE(epoch_count({{0}, {1}, {2}}, 3) == 1);
    REQUIRE(epoch_count({{0}, {0}, {1}, {2}, {0, 1, 2}}, 3) == 2);
    REQUIRE(epoch_count({}, 3) == 0);
    REQUIRE(epoch_count({{0}, {0}}, 3) == 1);  // partial only
}

TEST_CASE("random fair scheduler meets its fairness window") {
    const int n = 6, window = 3;
    Scheduler sched = Scheduler::random_fair(123, 0.15, window);
    std::vector<int> idle(n, 0);
    for (int round = 0; round < 300; ++round) {
        const auto active = sched.next(n);
        REQUIRE(active.has_value());
        REQUIRE_FALSE(active->empty());
        for (int& v : idle) ++v;
        for (int id : *active) idle[static_cast<std::size_t>(id)] = 0;
        for (int v : idle) REQUIRE(v < window);
    }
}

TEST_CASE("identical seeds reproduce bit-identical traces") {
    const Configuration c0 = generate_connected(8, 5, Shape::Blob);
    const Trace a = run(c0, Scheduler::random_fair(21, 0.4, 6));
    const Trace b = run(c0, Scheduler::random_fair(21, 0.4, 6));
    REQUIRE(trace_to_jsonl(a) == trace_to_jsonl(b));

    const Trace s1 = run(c0, Scheduler::scripted({{0, 1, 2}, {3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7}}));
    const Trace s2 = run(c0, Scheduler::scripted({{0, 1, 2}, {3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7}}));
    REQUIRE(trace_to_jsonl(s1) == trace_to_jsonl(s2));
}

TEST_CASE("a gathered configuration stays put under further rounds") {
    Configuration pile = Configuration::from_placements({{{2, 0}, 5}});
    for (int round = 0; round < 20; ++round) {
        pile = step(pile, {0, 1, 2, 3, 4});
        REQUIRE(is_gathered(pile));
        REQUIRE(pile.count_at({2, 0}) == 5);
    }
}

TEST_CASE("monitors flag a robot outside the initial polygon") {
    const Configuration before = make({{0, 0}, {0, 2}});
    const BoundingPolygon poly = bounding_polygon(smallest_enclosing_rectangle(before));
    Configuration after = before;
    after.move_robot(0, {0, -2});  // below the degenerate apex
    const auto violations =
        check_round_invariants(before, after, {0}, poly, 1, false, 2);
    REQUIRE_FALSE(violations.empty());
    bool saw_polygon = false;
    for (const Violation& v : violations) {
        if (v.code == MonitorCode::PolygonExited) saw_polygon = true;
    }
    REQUIRE(saw_polygon);
}

TEST_CASE("monitors flag an epoch without descent") {
    const Configuration c = make({{0, 0}, {0, 2}});
    const BoundingPolygon poly = bounding_polygon(smallest_enclosing_rectangle(c));
    const auto violations = check_round_invariants(
        c, c, {0}, poly, 4, /*epoch boundary=*/true, /*top at last boundary=*/2);
    REQUIRE(violations.size() == 1);
    REQUIRE(violations[0].code == MonitorCode::EpochWithoutDescent);
}

TEST_CASE("monitored runs of well-behaved schedules stay clean") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        const Configuration c0 = generate_connected(9, seed, Shape::Blob);
        for (Scheduler sched : {Scheduler::fsync(), Scheduler::round_robin(2),
                                Scheduler::random_fair(seed, 0.5, 18)}) {
            RunOptions opt;
            opt.max_rounds = 2000;
            const Trace t = run(c0, std::move(sched), opt);
            REQUIRE(t.outcome == Outcome::Gathered);
            REQUIRE(t.swap_count == 0);
            for (const RoundRecord& rec : t.records) {
                REQUIRE(rec.violations.empty());
            }
        }
    }
}
