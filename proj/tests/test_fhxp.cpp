#include "hxplain/fhxp.hpp"
#include "hxplain/tabular.hpp"
#include "oracle.hpp"

#include <doctest.h>

using namespace hxplain;

namespace {

struct LineFixture {
    std::shared_ptr<TabularModel> model;
    std::shared_ptr<TablePolicy> policy;
    History h;
    Predicate d;

    LineFixture() {
        model = std::make_shared<TabularModel>(5);
        for (int s = 0; s < 5; ++s) {
            model->add_transition(s, 0, std::min(s + 1, 4), Rational(1));
            model->add_transition(s, 1, s, Rational(1));
        }
        model->check();
        policy = std::make_shared<TablePolicy>(
            std::vector<ActionId>{0, 0, 0, 0, 0});
        h.env = model->env_id();
        h.schema = model->schema();
        for (int s = 0; s <= 4; ++s) h.states.push_back(model->state(s));
        h.actions = {0, 0, 0, 0};
        d = Predicate::dnf({Term({{0, Value(std::int64_t(4))}})});
    }
};

} // namespace

TEST_CASE("forward scores every action at the remaining horizon") {
    LineFixture fx;
    ForwardExplanation e = explain_forward(*fx.model, *fx.policy, fx.h, fx.d);
    REQUIRE(e.scores.size() == 4);
    for (int i = 0; i < 4; ++i) {
        Rational want = oracle::oracle_importance(
            *fx.model, *fx.policy, fx.h.states[std::size_t(i)],
            fx.h.actions[std::size_t(i)], fx.d, fx.h.length() - i - 1);
        CHECK(e.scores[std::size_t(i)] == want);
    }
}

TEST_CASE("ranking sorts by score descending with index tiebreak") {
    LineFixture fx;
    ForwardExplanation e = explain_forward(*fx.model, *fx.policy, fx.h, fx.d);
    REQUIRE(e.ranking.size() == 4);
    for (std::size_t i = 1; i < e.ranking.size(); ++i) {
        const Rational& prev = e.scores[std::size_t(e.ranking[i - 1])];
        const Rational& cur = e.scores[std::size_t(e.ranking[i])];
        CHECK((prev > cur ||
               (prev == cur && e.ranking[i - 1] < e.ranking[i])));
    }
}

TEST_CASE("fixed horizon overrides the remaining-steps convention") {
    LineFixture fx;
    ForwardExplanation e =
        explain_forward(*fx.model, *fx.policy, fx.h, fx.d, {}, 1);
    for (int i = 0; i < 4; ++i) {
        Rational want = oracle::oracle_importance(
            *fx.model, *fx.policy, fx.h.states[std::size_t(i)],
            fx.h.actions[std::size_t(i)], fx.d, 1);
        CHECK(e.scores[std::size_t(i)] == want);
    }
}

TEST_CASE("forward scores stay within [-1, 1] on random models") {
    for (std::uint64_t seed = 300; seed < 320; ++seed) {
        auto mdp = oracle::random_mdp(seed);
        // Build a short legal history by following the policy greedily.
        History h;
        h.env = mdp.model->env_id();
        h.schema = mdp.model->schema();
        h.states.push_back(mdp.initial);
        for (int i = 0; i < 3; ++i) {
            const State& cur = h.states.back();
            ActionId a = mdp.policy->action(cur);
            WeightedStates branch = mdp.model->support(cur, a);
            h.actions.push_back(a);
            h.states.push_back(branch.entries().begin()->first);
        }
        ForwardExplanation e =
            explain_forward(*mdp.model, *mdp.policy, h, mdp.d);
        for (const Rational& s : e.scores) {
            CHECK(s >= Rational(-1));
            CHECK(s <= Rational(1));
        }
    }
}
