#pragma once

#include "hxplain/bhxp.hpp"
#include "hxplain/history.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hxplain::render {

/// Human-readable form of a predicate, e.g. "(PD=13) AND (P=(5,8))".
std::string predicate_text(const Predicate& p, const SchemaPtr& schema);

/// One grid (or token list) per history state, important actions framed,
/// one predicate panel per explanation step.
std::string ascii(const TransitionModel& model, const History& h,
                  const Explanation* explanation = nullptr);

/// Same content as the ascii render, wrapped in a minimal valid SVG.
std::string svg(const TransitionModel& model, const History& h,
                const Explanation* explanation = nullptr);

} // namespace hxplain::render
