#pragma once

#include "hxplain/model.hpp"
#include "hxplain/predicate.hpp"

#include <array>
#include <optional>

namespace hxplain::c4 {

constexpr int kRows = 6;
constexpr int kCols = 7;

enum Token : std::int64_t { Empty = 0, Agent = 1, Opponent = 2 };

/// Board helper over the 42-feature state. Row 0 is the top row; gravity
/// fills from the bottom.
struct Board {
    std::array<std::int64_t, kRows * kCols> cells{};

    std::int64_t at(int row, int col) const { return cells[row * kCols + col]; }
    void set(int row, int col, std::int64_t v) { cells[row * kCols + col] = v; }

    bool column_open(int col) const { return at(0, col) == Empty; }
    std::vector<int> open_columns() const;

    /// Drops into the lowest empty cell; false if the column is full.
    bool drop(int col, Token token);

    bool has_four(Token token) const;
    int count_three(Token token) const; // length-4 windows with 3 tokens + 1 empty
    int column_count(int col, Token token) const;
    int token_count(Token token) const;
    bool full() const;
    bool terminal() const {
        return has_four(Agent) || has_four(Opponent) || full();
    }
    bool gravity_ok() const;

    static Board from_state(const State& s);
    State to_state(const SchemaPtr& schema) const;
};

/// Distribution over the opponent's reply columns.
struct OpponentModel {
    enum class Kind { Uniform, Heuristic };
    Kind kind = Kind::Uniform;
    // Heuristic: win-in-1, else block, else center-weighted argmax.
    std::array<int, kCols> weights = {1, 2, 3, 4, 3, 2, 1};

    /// (column, probability) pairs over the open columns; mass 1.
    std::vector<std::pair<int, Rational>> distribution(const Board& b) const;
};

/// Connect4 with the opponent folded into the transition function: the
/// agent drops a token, then every legal opponent reply becomes one
/// weighted successor. Terminal boards are absorbing via action 0.
class C4Model final : public TransitionModel {
public:
    explicit C4Model(OpponentModel opponent = {});

    std::string env_id() const override { return "connect4"; }
    SchemaPtr schema() const override { return schema_; }
    std::vector<ActionId> actions(const State& s) const override;
    WeightedStates support(const State& s, ActionId a) const override;
    int branching_bound() const override { return kCols; }
    Rational reward(const State& s, ActionId a) const override;
    bool valid_state(const State& s) const override;
    std::string action_name(ActionId a) const override {
        return "col" + std::to_string(a);
    }

    const OpponentModel& opponent() const { return opponent_; }
    State initial_state() const { return Board{}.to_state(schema_); }

private:
    OpponentModel opponent_;
    SchemaPtr schema_;
};

/// Comparative predicates (mid_column, three_row, counter_three_row) need
/// the history-initial reference board; strict margin comparison by
/// default.
Predicate make_predicate(const C4Model& model, const std::string& name,
                         const std::optional<State>& reference = {},
                         bool strict = true);

/// Deterministic agent: win-in-1, else block opponent's win-in-1, else the
/// highest-weighted open column; ties go to the lowest column.
std::shared_ptr<Policy> heuristic_policy(std::array<int, kCols> weights = {1, 2, 3, 4, 3, 2, 1},
                                         std::uint64_t seed = 0);

} // namespace hxplain::c4
