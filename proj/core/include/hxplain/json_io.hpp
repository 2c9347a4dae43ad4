#pragma once

#include "hxplain/bhxp.hpp"
#include "hxplain/env/connect4.hpp"
#include "hxplain/env/drone_coverage.hpp"
#include "hxplain/env/frozen_lake.hpp"
#include "hxplain/env/sum_goal.hpp"
#include "hxplain/fhxp.hpp"
#include "hxplain/history.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace hxplain::io {

using nlohmann::json;

inline const char* kToolVersion = "hxplain 0.1.0";

// -- values / states ---------------------------------------------------------

json value_to_json(const Value& v);
Value value_from_json(const json& j);
json state_to_json(const State& s);
State state_from_json(const SchemaPtr& schema, const json& j);

json score_to_json(const Rational& r); // {"exact":"57/500","decimal":0.114}
Rational score_from_json(const json& j);

// -- environments ------------------------------------------------------------

json map_to_json(const fl::FlMap& map);
fl::FlMap map_from_json(const json& j);

json world_to_json(const dc::DcWorld& world);
dc::DcWorld world_from_json(const json& j);

json board_to_json(const c4::Board& board); // flat row-major "."/"A"/"O"
c4::Board board_from_json(const json& j);

/// An environment instance reconstructed from its id + config: the model,
/// its schema, and factories for predicates and policies.
struct EnvBundle {
    std::string env;
    json config;
    std::shared_ptr<TransitionModel> model;
    std::shared_ptr<Policy> default_policy; // heuristic envs only
    State initial;

    // Kept so predicates capturing the typed model stay valid.
    std::shared_ptr<fl::FlModel> fl_model;
    std::shared_ptr<c4::C4Model> c4_model;
    std::shared_ptr<dc::DcModel> dc_model;
    std::shared_ptr<sg::SumGoalModel> sg_model;

    Predicate make_predicate(const json& spec) const;
    std::shared_ptr<Policy> policy_from_json(const json& j) const;
    json policy_to_json(const Policy& p) const;
};

/// env in {frozen_lake, connect4, drone_coverage, sumgoal}.
EnvBundle make_env(const std::string& env, const json& config);

// -- predicates --------------------------------------------------------------

json predicate_to_json(const Predicate& p, const SchemaPtr& schema);
Predicate predicate_from_json(const EnvBundle& bundle, const json& j);

// -- histories ---------------------------------------------------------------

json history_to_json(const History& h, const json& env_config);
History history_from_json(const EnvBundle& bundle, const json& j);

/// Seeded rollout of at most `steps` actions; truncates at terminal
/// states (single-action absorbing states).
History rollout(const TransitionModel& model, const Policy& policy,
                const State& initial, int steps, std::uint64_t seed);

// -- explanations ------------------------------------------------------------

json explanation_to_json(const Explanation& e, const SchemaPtr& schema,
                         const TransitionModel& model);
json forward_to_json(const ForwardExplanation& e,
                     const TransitionModel& model, const History& h);

// -- files -------------------------------------------------------------------

std::string digest_hex(const std::string& content); // "fnv1a64:<hex>"
std::string read_file(const std::filesystem::path& path);

/// Write-to-temp then atomic rename; no partial files on error.
void atomic_write(const std::filesystem::path& path,
                  const std::string& content);

} // namespace hxplain::io
