#pragma once

#include "lwd/dynamics.hpp"
#include "lwd/semigroup.hpp"

namespace lwd {

// JSON experiment descriptions. Errors surface as Errc::config.

MapSpec map_from_json(const json& j, const MetricSpace& space);

// kinds: single_map, bi_sequence, codec_rotation, product, hyperspace_lift, semigroup
SystemPtr system_from_json(const json& j);

// kinds: orbit (needs sys), decoded, constant, table, index_reciprocal
Net net_from_json(const json& j, const SpacePtr& space, const SystemPtr& sys = nullptr);

SearchBudget budget_from_json(const json& j, SearchBudget defaults = {});
json to_json(const SearchBudget& b);

}  // namespace lwd
