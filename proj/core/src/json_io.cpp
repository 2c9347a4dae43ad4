#include "hxplain/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hxplain::io {

json value_to_json(const Value& v) {
    if (std::holds_alternative<std::int64_t>(v))
        return std::get<std::int64_t>(v);
    if (std::holds_alternative<Cell>(v)) {
        Cell c = std::get<Cell>(v);
        return json::array({c.x, c.y});
    }
    return std::get<std::string>(v);
}

Value value_from_json(const json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_array()) return Cell{j.at(0).get<int>(), j.at(1).get<int>()};
    if (j.is_string()) return j.get<std::string>();
    throw Error("value: unsupported JSON form");
}

json state_to_json(const State& s) {
    json out = json::array();
    for (const Value& v : s.values()) out.push_back(value_to_json(v));
    return out;
}

State state_from_json(const SchemaPtr& schema, const json& j) {
    std::vector<Value> values;
    for (const json& v : j) values.push_back(value_from_json(v));
    return State(schema, std::move(values));
}

json score_to_json(const Rational& r) {
    return json{{"exact", r.to_string()}, {"decimal", r.to_double()}};
}

Rational score_from_json(const json& j) {
    return Rational::parse(j.at("exact").get<std::string>());
}

// -- environments ------------------------------------------------------------

json map_to_json(const fl::FlMap& map) {
    json holes = json::array();
    for (Cell h : map.holes) holes.push_back({h.x, h.y});
    return json{{"width", map.width},
                {"height", map.height},
                {"start", {map.start.x, map.start.y}},
                {"goal", {map.goal.x, map.goal.y}},
                {"holes", holes}};
}

fl::FlMap map_from_json(const json& j) {
    fl::FlMap map;
    map.width = j.at("width").get<int>();
    map.height = j.at("height").get<int>();
    map.start = {j.at("start").at(0).get<int>(), j.at("start").at(1).get<int>()};
    map.goal = {j.at("goal").at(0).get<int>(), j.at("goal").at(1).get<int>()};
    for (const json& h : j.at("holes"))
        map.holes.insert({h.at(0).get<int>(), h.at(1).get<int>()});
    map.check();
    return map;
}

json world_to_json(const dc::DcWorld& world) {
    json trees = json::array();
    for (Cell t : world.trees) trees.push_back({t.x, t.y});
    json drones = json::array();
    for (Cell d : world.drones) drones.push_back({d.x, d.y});
    return json{{"trees", trees}, {"drones", drones}, {"ego", world.ego}};
}

dc::DcWorld world_from_json(const json& j) {
    dc::DcWorld world;
    for (const json& t : j.at("trees"))
        world.trees.insert({t.at(0).get<int>(), t.at(1).get<int>()});
    const json& drones = j.at("drones");
    for (int i = 0; i < dc::kDrones; ++i)
        world.drones[i] = {drones.at(i).at(0).get<int>(),
                           drones.at(i).at(1).get<int>()};
    world.ego = j.value("ego", 0);
    world.check();
    return world;
}

json board_to_json(const c4::Board& board) {
    json out = json::array();
    for (std::int64_t v : board.cells)
        out.push_back(v == c4::Agent ? "A" : v == c4::Opponent ? "O" : ".");
    return out;
}

c4::Board board_from_json(const json& j) {
    c4::Board board;
    for (int i = 0; i < c4::kRows * c4::kCols; ++i) {
        std::string t = j.at(i).get<std::string>();
        board.cells[i] = t == "A"   ? c4::Agent
                         : t == "O" ? c4::Opponent
                                    : c4::Empty;
    }
    return board;
}

EnvBundle make_env(const std::string& env, const json& raw_config) {
    const json config = raw_config.is_null() ? json::object() : raw_config;
    EnvBundle bundle;
    bundle.env = env;
    bundle.config = config;
    if (env == "frozen_lake") {
        fl::FlMap map = config.contains("map") ? map_from_json(config.at("map"))
                                               : fl::map_8x8();
        bundle.fl_model = std::make_shared<fl::FlModel>(map);
        bundle.model = bundle.fl_model;
        bundle.initial = bundle.fl_model->initial_state();
        bundle.config["map"] = map_to_json(map);
    } else if (env == "connect4") {
        c4::OpponentModel opp;
        if (config.contains("opponent")) {
            const json& o = config.at("opponent");
            if (o.value("kind", "uniform") == "heuristic")
                opp.kind = c4::OpponentModel::Kind::Heuristic;
            if (o.contains("weights"))
                for (int i = 0; i < c4::kCols; ++i)
                    opp.weights[i] = o.at("weights").at(i).get<int>();
        }
        bundle.c4_model = std::make_shared<c4::C4Model>(opp);
        bundle.model = bundle.c4_model;
        bundle.default_policy = c4::heuristic_policy();
        bundle.initial = bundle.c4_model->initial_state();
        bundle.config["opponent"] = json{
            {"kind", opp.kind == c4::OpponentModel::Kind::Uniform ? "uniform"
                                                                  : "heuristic"}};
    } else if (env == "drone_coverage") {
        dc::DcWorld world = config.contains("world")
                                ? world_from_json(config.at("world"))
                                : dc::world_default();
        dc::WindMode mode = config.value("wind_mode", "ego") == "joint"
                                ? dc::WindMode::JointWind
                                : dc::WindMode::EgoWind;
        bundle.dc_model = std::make_shared<dc::DcModel>(world.trees, mode);
        bundle.model = bundle.dc_model;
        bundle.default_policy = dc::greedy_policy(*bundle.dc_model);
        bundle.initial = bundle.dc_model->initial_state(world);
        bundle.config["world"] = world_to_json(world);
        bundle.config["wind_mode"] =
            mode == dc::WindMode::EgoWind ? "ego" : "joint";
    } else if (env == "sumgoal") {
        int n = config.value("n", 5);
        bundle.sg_model = std::make_shared<sg::SumGoalModel>(n);
        bundle.model = bundle.sg_model;
        bundle.default_policy = sg::threshold_policy(*bundle.sg_model);
        bundle.initial = bundle.sg_model->zero_state();
        bundle.config["n"] = n;
    } else {
        throw Error("unknown env: " + env);
    }
    return bundle;
}

Predicate EnvBundle::make_predicate(const json& spec) const {
    return predicate_from_json(*this, spec);
}

std::shared_ptr<Policy> EnvBundle::policy_from_json(const json& j) const {
    std::string type = j.at("type").get<std::string>();
    if (type == "q_table") {
        if (env != "frozen_lake") throw Error("q_table policy: wrong env");
        std::map<Cell, std::array<double, 4>> q;
        for (const json& row : j.at("q")) {
            Cell c{row.at("cell").at(0).get<int>(),
                   row.at("cell").at(1).get<int>()};
            std::array<double, 4> values{};
            for (int a = 0; a < 4; ++a)
                values[a] = row.at("values").at(a).get<double>();
            q[c] = values;
        }
        return std::make_shared<fl::QTablePolicy>(std::move(q),
                                                  j.value("seed", 0ULL));
    }
    if (type == "heuristic") {
        if (env == "connect4") {
            std::array<int, c4::kCols> weights = {1, 2, 3, 4, 3, 2, 1};
            if (j.contains("weights"))
                for (int i = 0; i < c4::kCols; ++i)
                    weights[i] = j.at("weights").at(i).get<int>();
            return c4::heuristic_policy(weights, j.value("seed", 0ULL));
        }
        if (env == "drone_coverage") return dc::greedy_policy(*dc_model);
        if (env == "sumgoal") return sg::threshold_policy(*sg_model);
        throw Error("heuristic policy: unsupported env " + env);
    }
    throw Error("unknown policy type: " + type);
}

json EnvBundle::policy_to_json(const Policy& p) const {
    json out{{"type", p.kind()}, {"env", env}, {"seed", p.seed()}};
    if (p.kind() == "q_table") {
        const auto* qp = dynamic_cast<const fl::QTablePolicy*>(&p);
        if (!qp) throw Error("policy_to_json: not a q_table policy");
        json rows = json::array();
        for (const auto& [cell, values] : qp->table())
            rows.push_back(json{{"cell", {cell.x, cell.y}},
                                {"values", values}});
        out["q"] = rows;
    }
    return out;
}

// -- predicates --------------------------------------------------------------

json predicate_to_json(const Predicate& p, const SchemaPtr& schema) {
    if (p.is_dnf()) {
        json terms = json::array();
        for (const Term& t : p.terms()) {
            json lits = json::array();
            for (const Literal& l : t.literals())
                lits.push_back(json{{"feature", schema->feature(l.feature).name},
                                    {"value", value_to_json(l.value)}});
            terms.push_back(lits);
        }
        return json{{"type", "dnf"}, {"terms", terms}};
    }
    const auto& n = p.native();
    return json{{"type", "native"},
                {"env", n.env},
                {"name", n.name},
                {"params", json::parse(n.params_json)}};
}

Predicate predicate_from_json(const EnvBundle& bundle, const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "dnf") {
        SchemaPtr schema = bundle.model->schema();
        std::vector<Term> terms;
        for (const json& t : j.at("terms")) {
            std::vector<Literal> lits;
            for (const json& l : t)
                lits.push_back(
                    {schema->index_of(l.at("feature").get<std::string>()),
                     value_from_json(l.at("value"))});
            terms.push_back(Term(std::move(lits)));
        }
        return Predicate::dnf(std::move(terms));
    }
    if (type != "native") throw Error("predicate: unknown type " + type);
    std::string name = j.at("name").get<std::string>();
    json params = j.value("params", json::object());

    if (bundle.env == "frozen_lake") {
        std::set<Cell> cells;
        if (params.contains("cells"))
            for (const json& c : params.at("cells"))
                cells.insert({c.at(0).get<int>(), c.at(1).get<int>()});
        return fl::make_predicate(*bundle.fl_model, name, cells);
    }
    if (bundle.env == "connect4") {
        std::optional<State> ref;
        if (params.contains("reference")) {
            c4::Board b = board_from_json(params.at("reference"));
            ref = b.to_state(bundle.model->schema());
        }
        return c4::make_predicate(*bundle.c4_model, name, ref,
                                  params.value("strict", true));
    }
    if (bundle.env == "drone_coverage") {
        bool global = name.starts_with("global_");
        std::string base =
            global || name.starts_with("local_") ? name.substr(name.find('_') + 1)
                                                 : name;
        return dc::make_predicate(*bundle.dc_model, base, global,
                                  params.value("quadrant", 0));
    }
    if (bundle.env == "sumgoal") {
        if (name == "goal") return sg::goal_predicate(*bundle.sg_model);
    }
    throw UnknownPredicate("predicate: " + bundle.env + "/" + name);
}

// -- histories ---------------------------------------------------------------

json history_to_json(const History& h, const json& env_config) {
    json states = json::array();
    for (const State& s : h.states) states.push_back(state_to_json(s));
    return json{{"env", h.env},
                {"schema_version", 1},
                {"env_config", env_config},
                {"states", states},
                {"actions", h.actions},
                {"terminal", h.terminal}};
}

History history_from_json(const EnvBundle& bundle, const json& j) {
    History h;
    h.env = j.at("env").get<std::string>();
    if (h.env != bundle.env) throw SchemaMismatch("history: env mismatch");
    h.schema = bundle.model->schema();
    for (const json& s : j.at("states"))
        h.states.push_back(state_from_json(h.schema, s));
    for (const json& a : j.at("actions")) h.actions.push_back(a.get<int>());
    h.terminal = j.value("terminal", false);
    h.check();
    return h;
}

History rollout(const TransitionModel& model, const Policy& policy,
                const State& initial, int steps, std::uint64_t seed) {
    Rng rng = Rng::substream(seed, "rollout");
    History h;
    h.env = model.env_id();
    h.schema = model.schema();
    h.states.push_back(initial);
    for (int i = 0; i < steps; ++i) {
        const State& s = h.states.back();
        auto avail = model.actions(s);
        if (avail.size() == 1 && i > 0) {
            // Absorbing terminal: truncate.
            h.terminal = true;
            break;
        }
        ActionId a = policy.action(s);
        std::vector<State> succs;
        std::vector<Rational> weights;
        WeightedStates branch = model.support(s, a);
        for (const auto& [s2, pr] : branch.entries()) {
            succs.push_back(s2);
            weights.push_back(pr);
        }
        h.actions.push_back(a);
        h.states.push_back(succs[rng.next_weighted(weights)]);
    }
    if (!h.actions.empty() &&
        model.actions(h.states.back()).size() == 1)
        h.terminal = true;
    return h;
}

// -- explanations ------------------------------------------------------------

json explanation_to_json(const Explanation& e, const SchemaPtr& schema,
                         const TransitionModel& model) {
    json steps = json::array();
    json actions = json::array();
    json predicates = json::array();
    for (const BhxpStep& st : e.steps) {
        json step{{"window", {st.window_lo, st.window_hi}},
                  {"index", st.index},
                  {"action", st.action},
                  {"action_name", model.action_name(st.action)},
                  {"score", score_to_json(st.score)},
                  {"single_action", st.single_action},
                  {"anchor_utility", score_to_json(st.anchor_utility)},
                  {"predicate_studied",
                   predicate_to_json(st.predicate_studied, schema)},
                  {"predicate_next",
                   predicate_to_json(st.predicate_next, schema)}};
        steps.push_back(step);
        actions.push_back(st.action);
        predicates.push_back(predicate_to_json(st.predicate_next, schema));
    }
    return json{{"mode", "backward"},
                {"steps", steps},
                {"actions", actions},
                {"predicates", predicates},
                {"termination_reason", e.termination == Termination::ZeroUtility
                                           ? "zero_utility"
                                           : "reached_start"},
                {"final_state_satisfied", e.final_state_satisfied}};
}

json forward_to_json(const ForwardExplanation& e,
                     const TransitionModel& model, const History& h) {
    json scores = json::array();
    for (std::size_t i = 0; i < e.scores.size(); ++i)
        scores.push_back(json{{"index", i},
                              {"action", h.actions[i]},
                              {"action_name", model.action_name(h.actions[i])},
                              {"score", score_to_json(e.scores[i])},
                              {"single_action", bool(e.single_action[i])}});
    return json{{"mode", "forward"},
                {"scores", scores},
                {"ranking", e.ranking}};
}

// -- files -------------------------------------------------------------------

std::string digest_hex(const std::string& content) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : content) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << h;
    return os.str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void atomic_write(const std::filesystem::path& path,
                  const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp.string());
        out << content;
        if (!out.good()) throw Error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace hxplain::io
