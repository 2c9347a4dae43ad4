#include "hxplain/env/connect4.hpp"

namespace hxplain::c4 {

std::vector<int> Board::open_columns() const {
    std::vector<int> cols;
    for (int c = 0; c < kCols; ++c)
        if (column_open(c)) cols.push_back(c);
    return cols;
}

bool Board::drop(int col, Token token) {
    for (int row = kRows - 1; row >= 0; --row) {
        if (at(row, col) == Empty) {
            set(row, col, token);
            return true;
        }
    }
    return false;
}

namespace {

constexpr int kDirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};

// Scans all 69 length-4 windows.
template <typename Fn> void for_each_window(Fn&& fn) {
    for (int r = 0; r < kRows; ++r)
        for (int c = 0; c < kCols; ++c)
            for (const auto& d : kDirs) {
                int r3 = r + 3 * d[0], c3 = c + 3 * d[1];
                if (r3 >= kRows || c3 < 0 || c3 >= kCols) continue;
                fn(r, c, d[0], d[1]);
            }
}

} // namespace

bool Board::has_four(Token token) const {
    bool found = false;
    for_each_window([&](int r, int c, int dr, int dc) {
        int n = 0;
        for (int i = 0; i < 4; ++i) n += at(r + i * dr, c + i * dc) == token;
        found = found || n == 4;
    });
    return found;
}

int Board::count_three(Token token) const {
    int count = 0;
    for_each_window([&](int r, int c, int dr, int dc) {
        int mine = 0, empty = 0;
        for (int i = 0; i < 4; ++i) {
            auto v = at(r + i * dr, c + i * dc);
            mine += v == token;
            empty += v == Empty;
        }
        count += mine == 3 && empty == 1;
    });
    return count;
}

int Board::column_count(int col, Token token) const {
    int n = 0;
    for (int r = 0; r < kRows; ++r) n += at(r, col) == token;
    return n;
}

int Board::token_count(Token token) const {
    int n = 0;
    for (auto v : cells) n += v == token;
    return n;
}

bool Board::full() const {
    for (int c = 0; c < kCols; ++c)
        if (column_open(c)) return false;
    return true;
}

bool Board::gravity_ok() const {
    for (int c = 0; c < kCols; ++c)
        for (int r = 0; r + 1 < kRows; ++r)
            if (at(r, c) != Empty && at(r + 1, c) == Empty) return false;
    return true;
}

Board Board::from_state(const State& s) {
    Board b;
    for (int i = 0; i < kRows * kCols; ++i) b.cells[i] = s.as_int(i);
    return b;
}

State Board::to_state(const SchemaPtr& schema) const {
    std::vector<Value> values(cells.begin(), cells.end());
    return State(schema, std::move(values));
}

std::vector<std::pair<int, Rational>>
OpponentModel::distribution(const Board& b) const {
    auto open = b.open_columns();
    if (open.empty()) throw TerminalBoard("opponent: board full");
    if (kind == Kind::Uniform) {
        std::vector<std::pair<int, Rational>> out;
        Rational p(1, static_cast<long long>(open.size()));
        for (int c : open) out.emplace_back(c, p);
        return out;
    }
    // Heuristic opponent is deterministic: win, block, then weights.
    for (int c : open) {
        Board b2 = b;
        b2.drop(c, Opponent);
        if (b2.has_four(Opponent)) return {{c, Rational(1)}};
    }
    for (int c : open) {
        Board b2 = b;
        b2.drop(c, Agent);
        if (b2.has_four(Agent)) return {{c, Rational(1)}};
    }
    int best = open[0];
    for (int c : open)
        if (weights[c] > weights[best]) best = c;
    return {{best, Rational(1)}};
}

C4Model::C4Model(OpponentModel opponent) : opponent_(opponent) {
    Domain tokens{std::int64_t(Empty), std::int64_t(Agent),
                  std::int64_t(Opponent)};
    std::vector<FeatureSchema::Feature> features;
    for (int r = 0; r < kRows; ++r)
        for (int c = 0; c < kCols; ++c)
            features.push_back(
                {"c" + std::to_string(r) + "_" + std::to_string(c), tokens});
    schema_ = std::make_shared<FeatureSchema>(std::move(features));
}

std::vector<ActionId> C4Model::actions(const State& s) const {
    Board b = Board::from_state(s);
    if (b.terminal()) return {0}; // absorbing no-op
    std::vector<ActionId> out;
    for (int c : b.open_columns()) out.push_back(c);
    return out;
}

WeightedStates C4Model::support(const State& s, ActionId a) const {
    Board b = Board::from_state(s);
    WeightedStates out(true);
    if (b.terminal()) {
        out.add(s, Rational(1));
        return out;
    }
    if (a < 0 || a >= kCols || !b.column_open(a))
        throw IllegalColumn("c4: column " + std::to_string(a));
    Board after = b;
    after.drop(a, Agent);
    if (after.terminal()) {
        out.add(after.to_state(schema_), Rational(1));
        return out;
    }
    for (const auto& [col, pr] : opponent_.distribution(after)) {
        Board reply = after;
        reply.drop(col, Opponent);
        out.add(reply.to_state(schema_), pr);
    }
    return out;
}

Rational C4Model::reward(const State& s, ActionId a) const {
    Rational r;
    WeightedStates branch = support(s, a);
    for (const auto& [s2, pr] : branch.entries()) {
        Board b = Board::from_state(s2);
        if (b.has_four(Agent))
            r += pr * Rational(1);
        else if (b.has_four(Opponent))
            r += pr * Rational(-1);
        else if (b.full())
            r += pr * Rational(1, 2);
    }
    return r;
}

bool C4Model::valid_state(const State& s) const {
    Board b = Board::from_state(s);
    if (!b.gravity_ok()) return false;
    int diff = b.token_count(Agent) - b.token_count(Opponent);
    if (diff != 0 && diff != 1) return false;
    return !(b.has_four(Agent) && b.has_four(Opponent));
}

Predicate make_predicate(const C4Model& model, const std::string& name,
                         const std::optional<State>& reference, bool strict) {
    if (name == "win")
        return Predicate::native({"connect4", "win", [](const State& s) {
                                      return Board::from_state(s).has_four(Agent);
                                  }});
    if (name == "lose")
        return Predicate::native(
            {"connect4", "lose", [](const State& s) {
                 return Board::from_state(s).has_four(Opponent);
             }});

    if (!reference)
        throw MissingReference("c4: predicate " + name +
                               " needs a reference state");
    Board ref = Board::from_state(*reference);
    auto improved = [strict](int now, int before) {
        return strict ? now > before : now >= before;
    };
    std::string params = std::string("{\"strict\":") +
                         (strict ? "true" : "false") + ",\"reference\":[";
    for (int i = 0; i < kRows * kCols; ++i) {
        if (i) params += ",";
        params += ref.cells[i] == Agent      ? "\"A\""
                  : ref.cells[i] == Opponent ? "\"O\""
                                             : "\".\"";
    }
    params += "]}";

    if (name == "mid_column") {
        int mid = kCols / 2;
        int ref_margin =
            ref.column_count(mid, Agent) - ref.column_count(mid, Opponent);
        return Predicate::native(
            {"connect4", "mid_column",
             [improved, ref_margin, mid](const State& s) {
                 Board b = Board::from_state(s);
                 int margin = b.column_count(mid, Agent) -
                              b.column_count(mid, Opponent);
                 return margin > 0 && improved(margin, ref_margin);
             },
             params});
    }
    if (name == "three_row") {
        int before = ref.count_three(Agent);
        return Predicate::native(
            {"connect4", "three_row",
             [improved, before](const State& s) {
                 return improved(Board::from_state(s).count_three(Agent), before);
             },
             params});
    }
    if (name == "counter_three_row") {
        int before = ref.count_three(Opponent);
        return Predicate::native(
            {"connect4", "counter_three_row",
             [before](const State& s) {
                 return Board::from_state(s).count_three(Opponent) <= before;
             },
             params});
    }
    throw UnknownPredicate("c4: unknown predicate " + name);
}

std::shared_ptr<Policy> heuristic_policy(std::array<int, kCols> weights,
                                         std::uint64_t seed) {
    auto fn = [weights](const State& s) -> ActionId {
        Board b = Board::from_state(s);
        if (b.terminal()) return 0;
        auto open = b.open_columns();
        for (int c : open) {
            Board b2 = b;
            b2.drop(c, Agent);
            if (b2.has_four(Agent)) return c;
        }
        for (int c : open) {
            Board b2 = b;
            b2.drop(c, Opponent);
            if (b2.has_four(Opponent)) return c;
        }
        int best = open[0];
        for (int c : open)
            if (weights[c] > weights[best]) best = c;
        return best;
    };
    return std::make_shared<FunctionPolicy>("heuristic", fn, seed);
}

} // namespace hxplain::c4
