#pragma once

#include <optional>

#include "copclean/cleaning.hpp"
#include "copclean/graph.hpp"

namespace copclean {

/// Cheap scripted attempts at fully cleaning g with k cleaners: a greedy
/// dominating placement, then frontier pushing (one-step lookahead on the
/// post-spread gas) from several starting placements. Any script returned
/// has been replayed through the cleaning engine and ends with no gas.
std::optional<StrategyScript> greedy_clean(const Graph& g, int k, int l);

}  // namespace copclean
