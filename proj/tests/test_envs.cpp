#include "hxplain/env/connect4.hpp"
#include "hxplain/env/drone_coverage.hpp"
#include "hxplain/env/frozen_lake.hpp"
#include "hxplain/env/sum_goal.hpp"
#include "hxplain/scoring.hpp"

#include <doctest.h>

using namespace hxplain;

// --- frozen lake ------------------------------------------------------------

TEST_CASE("fl: slippery support matches the hand table") {
    fl::FlModel m(fl::map_4x4());
    // From (2, 1) moving Right on the 4x4 map: intended (2, 2) with 3/5,
    // laterals Up (1, 1) (a hole, still a legal landing) and Down (3, 1)
    // each 1/5.
    State s = m.make_state({2, 1}, {2, 1});
    WeightedStates w = m.support(s, fl::Right);
    CHECK(w.mass() == Rational(1));
    REQUIRE(w.entries().size() == 3);
    CHECK(w.entries().at(m.make_state({2, 2}, {2, 1})) == Rational(3, 5));
    CHECK(w.entries().at(m.make_state({1, 1}, {2, 1})) == Rational(1, 5));
    CHECK(w.entries().at(m.make_state({3, 1}, {2, 1})) == Rational(1, 5));
}

TEST_CASE("fl: blocked moves merge their mass on the kept position") {
    fl::FlModel m(fl::map_4x4());
    // Top-left corner moving Up: intended and one lateral both stay put.
    State s = m.make_state({0, 0}, {0, 0});
    WeightedStates w = m.support(s, fl::Up);
    CHECK(w.mass() == Rational(1));
    CHECK(w.entries().at(m.make_state({0, 0}, {0, 0})) == Rational(4, 5));
    CHECK(w.entries().at(m.make_state({0, 1}, {0, 0})) == Rational(1, 5));
}

TEST_CASE("fl: terminal cells are absorbing singletons") {
    fl::FlModel m(fl::map_4x4());
    State goal = m.make_state(m.map().goal, m.map().goal);
    auto acts = m.actions(goal);
    REQUIRE(acts.size() == 1);
    CHECK(acts[0] == fl::Stay);
    WeightedStates w = m.support(goal, fl::Stay);
    CHECK(w.entries().size() == 1);
    CHECK(w.entries().at(goal) == Rational(1));
}

TEST_CASE("fl: derived features are recomputed consistently") {
    fl::FlModel m(fl::map_4x4());
    State s = m.make_state({1, 0}, {0, 0});
    CHECK(s.as_cell(0) == Cell{1, 0});            // P
    CHECK(s.as_cell(1) == Cell{0, 0});            // PP
    CHECK(s.as_cell(2) == m.closest_hole({1, 0})); // HP
    CHECK(m.valid_state(s));
    // Tampering with the hole pointer invalidates the state.
    State bad = s.with_value(2, Value(Cell{3, 3}));
    CHECK_FALSE(m.valid_state(bad));
}

TEST_CASE("fl: predicates") {
    fl::FlModel m(fl::map_4x4());
    State goal = m.make_state(m.map().goal, m.map().goal);
    State hole = m.make_state(*m.map().holes.begin(), m.map().start);
    CHECK(fl::win_predicate(m).eval(goal));
    CHECK_FALSE(fl::win_predicate(m).eval(hole));
    CHECK(fl::holes_predicate(m).eval(hole));
    CHECK(fl::region_predicate(m, {m.map().goal}).eval(goal));
    CHECK_FALSE(fl::region_predicate(m, {{0, 0}}).eval(goal));
}

TEST_CASE("fl: training on the 4x4 map reaches the goal reliably") {
    fl::FlModel m(fl::map_4x4());
    fl::TrainParams p;
    p.episodes = 20'000;
    fl::QTablePolicy pi = fl::train_q(m, p);
    // The trained policy hugs the hole-free wall and mixes slowly, so give
    // it a generous horizon before checking the goal mass.
    Rational u =
        state_utility(m, pi, m.initial_state(), fl::win_predicate(m), 100);
    CHECK(u > Rational(3, 5));
}

// --- connect4 ---------------------------------------------------------------

TEST_CASE("c4: gravity drop and win detection") {
    c4::Board b;
    for (int i = 0; i < 4; ++i) CHECK(b.drop(2, c4::Agent));
    CHECK(b.at(5, 2) == c4::Agent);
    CHECK(b.at(2, 2) == c4::Agent);
    CHECK(b.has_four(c4::Agent));
    CHECK_FALSE(b.has_four(c4::Opponent));
    CHECK(b.column_count(2, c4::Agent) == 4);
}

TEST_CASE("c4: full column refuses a drop") {
    c4::Board b;
    for (int i = 0; i < 6; ++i)
        CHECK(b.drop(0, i % 2 == 0 ? c4::Agent : c4::Opponent));
    CHECK_FALSE(b.column_open(0));
    CHECK_FALSE(b.drop(0, c4::Agent));
}

TEST_CASE("c4: opponent folded into transitions with unit mass") {
    c4::C4Model m({c4::OpponentModel::Kind::Uniform});
    State s0 = m.initial_state();
    WeightedStates w = m.support(s0, 3);
    CHECK(w.mass() == Rational(1));
    // 7 open opponent replies to the first drop.
    CHECK(w.entries().size() == 7);
    for (const auto& [s2, pr] : w.entries()) {
        c4::Board b = c4::Board::from_state(s2);
        CHECK(b.token_count(c4::Agent) == 1);
        CHECK(b.token_count(c4::Opponent) == 1);
        CHECK(pr == Rational(1, 7));
    }
}

TEST_CASE("c4: agent win ends the step before the opponent replies") {
    c4::Board b;
    for (int c : {0, 1, 0, 1, 0, 1}) // three agent tokens on 0, opponent on 1
        b.drop(c, b.token_count(c4::Agent) > b.token_count(c4::Opponent)
                      ? c4::Opponent
                      : c4::Agent);
    c4::C4Model m;
    State s = b.to_state(m.schema());
    WeightedStates w = m.support(s, 0); // completes four in column 0
    REQUIRE(w.entries().size() == 1);
    c4::Board after = c4::Board::from_state(w.entries().begin()->first);
    CHECK(after.has_four(c4::Agent));
}

TEST_CASE("c4: heuristic policy wins in one and blocks") {
    auto pi = c4::heuristic_policy();
    c4::C4Model m;
    c4::Board b;
    b.drop(4, c4::Agent);
    b.drop(4, c4::Agent);
    b.drop(4, c4::Agent);
    b.drop(0, c4::Opponent);
    b.drop(1, c4::Opponent);
    // Win-in-1 at column 4 beats blocking the opponent's pair.
    CHECK(pi->action(b.to_state(m.schema())) == 4);

    c4::Board blocked;
    blocked.drop(0, c4::Opponent);
    blocked.drop(1, c4::Opponent);
    blocked.drop(2, c4::Opponent);
    CHECK(pi->action(blocked.to_state(m.schema())) == 3);
}

TEST_CASE("c4: comparative predicates against the reference board") {
    c4::C4Model m;
    c4::Board ref;
    State ref_state = ref.to_state(m.schema());
    Predicate mid = c4::make_predicate(m, "mid_column", ref_state);
    c4::Board more = ref;
    more.drop(3, c4::Agent);
    CHECK(mid.eval(more.to_state(m.schema())));
    CHECK_FALSE(mid.eval(ref_state));
}

TEST_CASE("c4: parity validation") {
    c4::C4Model m;
    c4::Board b;
    b.drop(0, c4::Agent);
    b.drop(1, c4::Agent); // two agent tokens, no opponent: unreachable
    CHECK_FALSE(m.valid_state(b.to_state(m.schema())));
    c4::Board ok;
    ok.drop(0, c4::Agent);
    ok.drop(1, c4::Opponent);
    CHECK(m.valid_state(ok.to_state(m.schema())));
}

// --- drone coverage ---------------------------------------------------------

TEST_CASE("dc: wind distribution sums to one and stays in bounds") {
    dc::DcModel m(dc::world_default().trees);
    State s = m.initial_state(dc::world_default());
    for (ActionId a : m.actions(s)) {
        WeightedStates w = m.support(s, a);
        CHECK(w.mass() == Rational(1));
        for (const auto& [s2, pr] : w.entries()) {
            CHECK(pr > Rational(0));
            if (!m.crashed(s2)) {
                Cell p = m.position(s2);
                CHECK(0 <= p.x);
                CHECK(p.x < dc::kSize);
                CHECK(0 <= p.y);
                CHECK(p.y < dc::kSize);
            }
        }
    }
}

TEST_CASE("dc: crash state is absorbing") {
    dc::DcModel m(dc::world_default().trees);
    State crashed = m.make_crashed({4, 4});
    CHECK(m.crashed(crashed));
    auto acts = m.actions(crashed);
    REQUIRE(acts.size() == 1);
    WeightedStates w = m.support(crashed, acts[0]);
    REQUIRE(w.entries().size() == 1);
    CHECK(w.entries().begin()->first == crashed);
}

TEST_CASE("dc: cover quality counts unobstructed own cells") {
    dc::DcModel m({});
    // Center position with no trees and no other drones: full 3x3.
    CHECK(m.cover_quality({5, 5}, {}) == 9);
    // Corner position loses the out-of-bounds part of its square.
    CHECK(m.cover_quality({0, 0}, {}) == 4);
    // An adjacent drone overlaps part of the cover.
    CHECK(m.cover_quality({5, 5}, {{5, 7}}) < 9);
}

TEST_CASE("dc: greedy policy is deterministic") {
    dc::DcModel m(dc::world_default().trees);
    State s = m.initial_state(dc::world_default());
    auto pi = dc::greedy_policy(m);
    CHECK(pi->action(s) == pi->action(s));
}

TEST_CASE("dc: local and global predicates") {
    dc::DcModel m({});
    State alone = m.make_state({5, 5}, {});
    CHECK(dc::make_predicate(m, "perfect_cover").eval(alone));
    CHECK(dc::make_predicate(m, "no_drones").eval(alone));
    CHECK_FALSE(dc::make_predicate(m, "crash").eval(alone));
    CHECK(dc::make_predicate(m, "crash").eval(m.make_crashed({5, 5})));
    State crowded = m.make_state({5, 5}, {{5, 6}});
    CHECK_FALSE(dc::make_predicate(m, "no_drones").eval(crowded));
}

// --- sumgoal ----------------------------------------------------------------

TEST_CASE("sg: deterministic assignment dynamics") {
    sg::SumGoalModel m(5);
    State z = m.zero_state();
    ActionId a = m.assign(0, 1); // f1 <- 1
    WeightedStates w = m.support(z, a);
    REQUIRE(w.entries().size() == 1);
    CHECK(w.entries().begin()->first.as_int(0) == 1);
    auto [f, j] = m.decode(a);
    CHECK(f == 0);
    CHECK(j == 1);
}

TEST_CASE("sg: goal predicate matches the threshold") {
    sg::SumGoalModel m(5); // target sum: 5 + 2 = 7
    CHECK(sg::goal_predicate(m).eval(m.state_of({1, 1, 0, 0, 5})));
    CHECK_FALSE(sg::goal_predicate(m).eval(m.state_of({1, 0, 0, 0, 5})));
    CHECK_FALSE(sg::goal_predicate(m).eval(m.state_of({1, 1, 1, 1, 0})));
}

TEST_CASE("sg: threshold policy assigns f_n by the ones count") {
    sg::SumGoalModel m(5);
    auto pi = sg::threshold_policy(m);
    auto [f_hi, j_hi] = m.decode(pi->action(m.state_of({1, 1, 0, 0, 0})));
    CHECK(f_hi == 4);
    CHECK(m.state_of({1, 1, 0, 0, 0}).schema()->feature(4).domain[std::size_t(j_hi)] ==
          Value(std::int64_t(5)));
    auto [f_lo, j_lo] = m.decode(pi->action(m.state_of({1, 0, 0, 0, 0})));
    CHECK(f_lo == 4);
    CHECK(m.state_of({1, 0, 0, 0, 0}).schema()->feature(4).domain[std::size_t(j_lo)] ==
          Value(std::int64_t(0)));
}
