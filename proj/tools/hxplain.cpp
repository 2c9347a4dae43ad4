// Command-line surface: train, rollout, explain, render, paxp.
// All outputs embed a manifest (command, config echo, input digests) and
// are written atomically; identical flags + seed give byte-identical files.

#include "hxplain/json_io.hpp"
#include "hxplain/render.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace hxplain;
using io::json;

constexpr int kExitBadArgs = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInvalidInput = 4;
constexpr int kExitBudget = 5;

Rational parse_rational(const std::string& text) {
    if (text.find('.') == std::string::npos) return Rational::parse(text);
    // Decimal like "0.7" -> 7/10.
    auto dot = text.find('.');
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    BigInt num = BigInt(whole.empty() ? "0" : whole) * den + BigInt(frac);
    return Rational(num, den);
}

json make_manifest(const std::string& command, const std::string& env,
                   const json& config,
                   const std::vector<std::pair<std::string, std::string>>& inputs,
                   const std::vector<std::string>& deviations) {
    json in = json::object();
    for (const auto& [name, path] : inputs)
        in[name] = io::digest_hex(io::read_file(path));
    return json{{"command", command},
                {"env", env},
                {"config", config},
                {"inputs", in},
                {"version", io::kToolVersion},
                {"deviations", deviations}};
}

void write_output(const std::string& path, json doc, json manifest) {
    doc["manifest"] = std::move(manifest);
    io::atomic_write(path, doc.dump(2) + "\n");
}

json load_json(const std::string& path) {
    return json::parse(io::read_file(path));
}

std::string canonical_env(const std::string& env) {
    if (env == "fl") return "frozen_lake";
    if (env == "c4") return "connect4";
    if (env == "dc") return "drone_coverage";
    if (env == "sg") return "sumgoal";
    return env;
}

io::EnvBundle bundle_for(const std::string& env, const json& config) {
    return io::make_env(canonical_env(env), config);
}

io::EnvBundle bundle_from_history_file(const json& history_doc) {
    return io::make_env(history_doc.at("env").get<std::string>(),
                        history_doc.value("env_config", json::object()));
}

// Predicate flag: a JSON file path, inline JSON, or a bare native name.
json predicate_spec(const std::string& flag) {
    if (std::filesystem::exists(flag)) return load_json(flag);
    if (!flag.empty() && flag.front() == '{') return json::parse(flag);
    return json{{"type", "native"}, {"name", flag}, {"params", json::object()}};
}

Predicate build_predicate(const io::EnvBundle& bundle, json spec,
                          const History& h) {
    // Comparative predicates take the history-initial board as reference.
    if (bundle.env == "connect4" && spec.value("type", "") == "native") {
        std::string name = spec.at("name").get<std::string>();
        if ((name == "mid_column" || name == "three_row" ||
             name == "counter_three_row") &&
            !spec["params"].contains("reference"))
            spec["params"]["reference"] = io::state_to_json(h.states.front());
    }
    return io::predicate_from_json(bundle, spec);
}

int cmd_train(const std::string& env, const std::string& map_file,
              const std::string& world_file, std::uint64_t episodes,
              double alpha, double gamma, std::uint64_t seed,
              const std::string& out) {
    if (env != "frozen_lake" && env != "connect4" && env != "drone_coverage" &&
        env != "sumgoal") {
        std::cerr << "error: no trainer for env " << env << "\n";
        return kExitUnsupported;
    }
    json config = json::object();
    if (!map_file.empty()) config["map"] = load_json(map_file);
    if (!world_file.empty()) config["world"] = load_json(world_file);

    io::EnvBundle bundle = bundle_for(env, config);
    std::shared_ptr<Policy> policy;
    if (env == "frozen_lake") {
        if (episodes == 0)
            std::cerr << "warning: 0 episodes, emitting the trivial policy\n";
        fl::TrainParams params;
        params.episodes = episodes;
        params.alpha = alpha;
        params.gamma = gamma;
        params.seed = seed;
        policy = std::make_shared<fl::QTablePolicy>(
            fl::train_q(*bundle.fl_model, params));
    } else if (bundle.default_policy) {
        policy = bundle.default_policy;
    } else {
        std::cerr << "error: env " << env << " has no trainer\n";
        return kExitUnsupported;
    }

    json config_echo{{"episodes", episodes}, {"alpha", alpha},
                     {"gamma", gamma},       {"seed", seed},
                     {"env_config", bundle.config}};
    std::vector<std::pair<std::string, std::string>> inputs;
    if (!map_file.empty()) inputs.emplace_back("map", map_file);
    if (!world_file.empty()) inputs.emplace_back("world", world_file);
    write_output(out, bundle.policy_to_json(*policy),
                 make_manifest("train", env, config_echo, inputs, {}));
    return 0;
}

int cmd_rollout(const std::string& env, const std::string& map_file,
                const std::string& world_file, const std::string& policy_file,
                int steps, std::uint64_t seed, const std::string& out) {
    json config = json::object();
    if (!map_file.empty()) config["map"] = load_json(map_file);
    if (!world_file.empty()) config["world"] = load_json(world_file);
    io::EnvBundle bundle = bundle_for(env, config);

    std::shared_ptr<Policy> policy;
    if (!policy_file.empty()) {
        json pj = load_json(policy_file);
        if (pj.value("env", env) != env) {
            std::cerr << "error: policy env mismatch\n";
            return kExitInvalidInput;
        }
        policy = bundle.policy_from_json(pj);
    } else if (bundle.default_policy) {
        policy = bundle.default_policy;
    } else {
        std::cerr << "error: --policy required for env " << env << "\n";
        return kExitBadArgs;
    }

    History h = io::rollout(*bundle.model, *policy, bundle.initial, steps, seed);
    h.check_against(*bundle.model);

    json config_echo{{"steps", steps}, {"seed", seed}};
    std::vector<std::pair<std::string, std::string>> inputs;
    if (!policy_file.empty()) inputs.emplace_back("policy", policy_file);
    write_output(out, io::history_to_json(h, bundle.config),
                 make_manifest("rollout", env, config_echo, inputs, {}));
    return 0;
}

int cmd_explain(const std::string& mode, const std::string& history_file,
                const std::string& policy_file, const std::string& predicate_flag,
                int l, const std::string& delta_text, std::uint64_t sample,
                const std::string& paxp_mode, const std::string& space,
                std::uint64_t budget, std::uint64_t seed,
                bool full_enumeration, const std::string& out) {
    json hj = load_json(history_file);
    io::EnvBundle bundle = bundle_from_history_file(hj);
    History h = io::history_from_json(bundle, hj);

    std::shared_ptr<Policy> policy;
    if (!policy_file.empty())
        policy = bundle.policy_from_json(load_json(policy_file));
    else if (bundle.default_policy)
        policy = bundle.default_policy;
    else {
        std::cerr << "error: --policy required\n";
        return kExitBadArgs;
    }

    json pspec = predicate_spec(predicate_flag);
    Predicate d = build_predicate(bundle, pspec, h);

    ScoringBudget sb = budget == 0 ? ScoringBudget::exhaustive()
                                   : ScoringBudget::max(budget, seed);
    json config_echo{{"mode", mode},         {"l", l},
                     {"delta", delta_text},  {"sample", sample},
                     {"paxp_mode", paxp_mode}, {"space", space},
                     {"budget", budget},     {"seed", seed},
                     {"predicate", pspec}};
    std::vector<std::pair<std::string, std::string>> inputs{
        {"history", history_file}};
    if (!policy_file.empty()) inputs.emplace_back("policy", policy_file);

    if (mode == "forward") {
        ForwardExplanation fe = explain_forward(*bundle.model, *policy, h, d, sb);
        std::vector<std::string> deviations{
            "remaining-horizon k_i = k - i - 1 per action"};
        write_output(out, io::forward_to_json(fe, *bundle.model, h),
                     make_manifest("explain", bundle.env, config_echo, inputs,
                                   deviations));
        return 0;
    }
    if (mode != "backward") {
        std::cerr << "error: --mode must be forward or backward\n";
        return kExitBadArgs;
    }

    if (!d.eval(h.states.back()))
        std::cerr << "warning: predicate not satisfied in the final state\n";

    BhxpConfig cfg;
    cfg.window = l;
    cfg.budget = sb;
    cfg.full_enumeration = full_enumeration;
    cfg.paxp.delta = parse_rational(delta_text);
    cfg.paxp.sample = sample;
    cfg.paxp.seed = seed;
    cfg.paxp.proportion_mode = paxp_mode == "exhaustive"
                                   ? PaxpConfig::Proportion::Exhaustive
                                   : PaxpConfig::Proportion::Sampled;
    cfg.paxp.sample_space = space == "valid" ? PaxpConfig::Space::ValidStates
                                             : PaxpConfig::Space::FeatureSpace;

    Explanation e = explain_backward(*bundle.model, *policy, h, d, cfg);
    std::vector<std::string> deviations{
        "window loop processes at least one window before testing the stop "
        "conditions"};
    for (const BhxpStep& st : e.steps)
        if (st.single_action) {
            deviations.push_back(
                "single-action state scored with empty average taken as 0");
            break;
        }
    write_output(out, io::explanation_to_json(e, h.schema, *bundle.model),
                 make_manifest("explain", bundle.env, config_echo, inputs,
                               deviations));
    return 0;
}

int cmd_render(const std::string& history_file,
               const std::string& explanation_file, const std::string& format,
               const std::string& out) {
    json hj = load_json(history_file);
    io::EnvBundle bundle = bundle_from_history_file(hj);
    History h = io::history_from_json(bundle, hj);

    std::optional<Explanation> e;
    if (!explanation_file.empty()) {
        json ej = load_json(explanation_file);
        if (ej.value("mode", "") != "backward") {
            std::cerr << "error: render expects a backward explanation\n";
            return kExitInvalidInput;
        }
        Explanation parsed;
        for (const json& st : ej.at("steps")) {
            BhxpStep step;
            step.window_lo = st.at("window").at(0).get<int>();
            step.window_hi = st.at("window").at(1).get<int>();
            step.index = st.at("index").get<int>();
            step.action = st.at("action").get<int>();
            step.score = io::score_from_json(st.at("score"));
            step.anchor_utility = io::score_from_json(st.at("anchor_utility"));
            step.predicate_studied =
                io::predicate_from_json(bundle, st.at("predicate_studied"));
            step.predicate_next =
                io::predicate_from_json(bundle, st.at("predicate_next"));
            if (step.index >= h.length()) {
                std::cerr << "error: explanation does not match history\n";
                return kExitInvalidInput;
            }
            parsed.steps.push_back(std::move(step));
        }
        parsed.termination = ej.value("termination_reason", "") == "zero_utility"
                                 ? Termination::ZeroUtility
                                 : Termination::ReachedStart;
        e = std::move(parsed);
    }

    std::string text = format == "svg"
                           ? render::svg(*bundle.model, h, e ? &*e : nullptr)
                           : render::ascii(*bundle.model, h, e ? &*e : nullptr);
    if (out.empty())
        std::cout << text;
    else
        io::atomic_write(out, text);
    return 0;
}

int cmd_paxp(int n, bool enumerate_all, bool lm, const std::string& delta_text,
             std::uint64_t sample, std::uint64_t seed,
             const std::string& paxp_mode) {
    io::EnvBundle bundle = bundle_for("sumgoal", json{{"n", n}});
    const auto& model = *bundle.sg_model;
    auto policy = bundle.default_policy;

    // The exponential-PAXp fixture point (1, ..., 1, 0).
    std::vector<std::int64_t> values(std::size_t(n), 1);
    values.back() = 0;
    State v = model.state_of(values);

    PaxpConfig cfg;
    cfg.delta = parse_rational(delta_text);
    cfg.sample = sample;
    cfg.seed = seed;
    cfg.proportion_mode = paxp_mode == "sampled"
                              ? PaxpConfig::Proportion::Sampled
                              : PaxpConfig::Proportion::Exhaustive;
    BhxpClassifier kappa(model, *policy, v, sg::goal_predicate(model), 1);

    auto subset_text = [&](const FeatureSubset& x) {
        std::string s = "{";
        for (std::size_t f : x) {
            if (s.size() > 1) s += ",";
            s += model.schema()->feature(f).name;
        }
        return s + "}";
    };

    if (enumerate_all) {
        auto sets = enumerate_paxp(kappa, v, cfg);
        std::cout << "PAXp count: " << sets.size() << "\n";
        for (const auto& x : sets) std::cout << "  " << subset_text(x) << "\n";
    }
    if (lm || !enumerate_all) {
        FeatureSubset x = find_lm_paxp(kappa, v, cfg);
        std::cout << "LmPAXp: " << subset_text(x) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forward and backward policy-history explanations"};
    app.require_subcommand(1);

    std::string env, map_file, world_file, policy_file, history_file;
    std::string explanation_file, predicate_flag, out, mode = "backward";
    std::string delta_text = "1", paxp_mode = "sampled", space = "feature";
    std::string format = "ascii";
    std::uint64_t episodes = 200000, seed = 1, sample = 10, budget = 0;
    double alpha = 0.1, gamma = 0.98;
    int steps = 12, l = 4, n = 5;
    bool enumerate_all = false, lm = false, full_enumeration = false;

    auto* train = app.add_subcommand("train", "Train or build a policy");
    train->add_option("--env", env)->required();
    train->add_option("--map", map_file);
    train->add_option("--world", world_file);
    train->add_option("--episodes", episodes);
    train->add_option("--alpha", alpha);
    train->add_option("--gamma", gamma);
    train->add_option("--seed", seed);
    train->add_option("--out", out)->required();

    auto* rollout = app.add_subcommand("rollout", "Record a history");
    rollout->add_option("--env", env)->required();
    rollout->add_option("--map", map_file);
    rollout->add_option("--world", world_file);
    rollout->add_option("--policy", policy_file);
    rollout->add_option("--steps", steps);
    rollout->add_option("--seed", seed);
    rollout->add_option("--out", out)->required();

    auto* explain = app.add_subcommand("explain", "Explain a history");
    explain->add_option("--mode", mode);
    explain->add_option("--history", history_file)->required();
    explain->add_option("--policy", policy_file);
    explain->add_option("--predicate", predicate_flag)->required();
    explain->add_option("--l", l);
    explain->add_option("--delta", delta_text);
    explain->add_option("--sample", sample);
    explain->add_option("--paxp-mode", paxp_mode);
    explain->add_option("--space", space);
    explain->add_option("--budget", budget);
    explain->add_option("--seed", seed);
    explain->add_flag("--full-enumeration", full_enumeration);
    explain->add_option("--out", out)->required();

    auto* render_cmd = app.add_subcommand("render", "Render a history");
    render_cmd->add_option("--history", history_file)->required();
    render_cmd->add_option("--explanation", explanation_file);
    render_cmd->add_option("--format", format);
    render_cmd->add_option("--out", out);

    auto* paxp_cmd = app.add_subcommand("paxp", "PAXp utilities (sumgoal)");
    paxp_cmd->add_option("--env", env);
    paxp_cmd->add_option("--n", n);
    paxp_cmd->add_flag("--enumerate", enumerate_all);
    paxp_cmd->add_flag("--lm", lm);
    paxp_cmd->add_option("--delta", delta_text);
    paxp_cmd->add_option("--sample", sample);
    paxp_cmd->add_option("--seed", seed);
    paxp_cmd->add_option("--paxp-mode", paxp_mode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadArgs;
    }

    env = canonical_env(env);
    try {
        if (train->parsed())
            return cmd_train(env, map_file, world_file, episodes, alpha, gamma,
                             seed, out);
        if (rollout->parsed())
            return cmd_rollout(env, map_file, world_file, policy_file, steps,
                               seed, out);
        if (explain->parsed())
            return cmd_explain(mode, history_file, policy_file, predicate_flag,
                               l, delta_text, sample, paxp_mode, space, budget,
                               seed, full_enumeration, out);
        if (render_cmd->parsed())
            return cmd_render(history_file, explanation_file, format, out);
        if (paxp_cmd->parsed()) {
            if (!env.empty() && env != "sumgoal") {
                std::cerr << "error: paxp utilities support --env sumgoal\n";
                return kExitUnsupported;
            }
            return cmd_paxp(n, enumerate_all, lm, delta_text, sample, seed,
                            paxp_mode);
        }
    } catch (const hxplain::SpaceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const hxplain::SamplingExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const hxplain::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const io::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitBadArgs;
}
