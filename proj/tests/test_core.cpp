#include "hxplain/history.hpp"
#include "hxplain/tabular.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace hxplain;

namespace {

// Two-state chain: action 0 stays with 1/3, moves on with 2/3.
std::shared_ptr<TabularModel> chain3() {
    auto m = std::make_shared<TabularModel>(3);
    m->add_transition(0, 0, 0, Rational(1, 3));
    m->add_transition(0, 0, 1, Rational(2, 3));
    m->add_transition(1, 0, 1, Rational(1, 3));
    m->add_transition(1, 0, 2, Rational(2, 3));
    m->add_transition(2, 0, 2, Rational(1));
    m->check();
    return m;
}

} // namespace

TEST_CASE("next merges duplicate successors and conserves mass") {
    auto m = chain3();
    TablePolicy pi({0, 0, 0});
    WeightedStates frontier = WeightedStates::single(m->state(0));
    WeightedStates step = next(*m, pi, frontier);
    CHECK(step.entries().size() == 2);
    CHECK(step.mass() == Rational(1));
    CHECK(step.entries().at(m->state(0)) == Rational(1, 3));
    CHECK(step.entries().at(m->state(1)) == Rational(2, 3));
}

TEST_CASE("succ matches the scenario-enumeration oracle") {
    auto m = chain3();
    TablePolicy pi({0, 0, 0});
    for (int k = 0; k <= 6; ++k) {
        WeightedStates got = succ(*m, pi, WeightedStates::single(m->state(0)), k);
        auto want = oracle::oracle_succ(*m, pi, m->state(0), k);
        CHECK(got.entries().size() == want.size());
        for (const auto& [s, pr] : want) CHECK(got.entries().at(s) == pr);
        CHECK(got.mass() == Rational(1));
    }
}

TEST_CASE("succ on random models equals the oracle distribution") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto mdp = oracle::random_mdp(seed);
        for (int k = 0; k <= 4; ++k) {
            WeightedStates got = succ(*mdp.model, *mdp.policy,
                                      WeightedStates::single(mdp.initial), k);
            auto want =
                oracle::oracle_succ(*mdp.model, *mdp.policy, mdp.initial, k);
            REQUIRE(got.entries().size() == want.size());
            for (const auto& [s, pr] : want) CHECK(got.entries().at(s) == pr);
            CHECK(got.mass() == Rational(1));
        }
    }
}

TEST_CASE("next rejects a policy action outside the available set") {
    auto m = chain3();
    TablePolicy bad({7, 7, 7});
    CHECK_THROWS_AS(next(*m, bad, WeightedStates::single(m->state(0))),
                    PolicyUndefined);
}

TEST_CASE("history validation") {
    auto m = chain3();
    History h;
    h.env = m->env_id();
    h.schema = m->schema();
    h.states = {m->state(0), m->state(1), m->state(2)};
    h.actions = {0, 0};
    CHECK_NOTHROW(h.check_against(*m));

    History skip = h;
    skip.states[1] = m->state(2); // not in support of (state 0, action 0)
    CHECK_THROWS(skip.check_against(*m));

    History ragged = h;
    ragged.actions.push_back(0);
    CHECK_THROWS(ragged.check());
}

TEST_CASE("tabular model rejects non-unit action mass") {
    TabularModel m(2);
    m.add_transition(0, 0, 1, Rational(1, 2));
    m.add_transition(1, 0, 1, Rational(1));
    CHECK_THROWS(m.check());
}
