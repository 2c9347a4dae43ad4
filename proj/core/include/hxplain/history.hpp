#pragma once

#include "hxplain/model.hpp"

#include <string>
#include <vector>

namespace hxplain {

/// Recorded run (s_0, a_0, ..., a_{k-1}, s_k). k = actions.size() >= 1.
struct History {
    std::string env;
    SchemaPtr schema;
    std::vector<State> states;
    std::vector<ActionId> actions;
    bool terminal = false;

    int length() const { return static_cast<int>(actions.size()); }

    void check() const {
        if (actions.empty()) throw EmptyHistory("history: no actions");
        if (states.size() != actions.size() + 1)
            throw Error("history: |states| must be |actions|+1");
    }

    /// Verifies each recorded step against the model's support chain.
    void check_against(const TransitionModel& model) const {
        check();
        for (std::size_t i = 0; i < actions.size(); ++i) {
            auto avail = model.actions(states[i]);
            bool legal = false;
            for (ActionId a : avail) legal = legal || a == actions[i];
            if (!legal)
                throw IllegalAction("history: illegal action at step " +
                                    std::to_string(i));
            WeightedStates sup = model.support(states[i], actions[i]);
            if (!sup.entries().contains(states[i + 1]))
                throw Error("history: state " + std::to_string(i + 1) +
                            " not in support");
        }
    }
};

} // namespace hxplain
