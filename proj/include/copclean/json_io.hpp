#pragma once

#include <string>

#include <json.hpp>

#include "copclean/cleaning.hpp"
#include "copclean/cleaning_solver.hpp"
#include "copclean/construction.hpp"
#include "copclean/knowledge.hpp"
#include "copclean/metrics.hpp"
#include "copclean/pursuit.hpp"
#include "copclean/stochastic.hpp"

namespace copclean {

using Json = nlohmann::ordered_json;

Json to_json(const GraphMetrics& m);
Json to_json(const StrategyScript& s);
StrategyScript script_from_json(const Json& j);
Json to_json(const CleaningState& s);
Json to_json(const SolveResult& r, bool witness);
Json to_json(const PursuitResult& r);
Json to_json(const LimitedResult& r);
Json to_json(const ExpectedTimeResult& r);
Json to_json(const MonteCarloResult& r);
Json to_json(const BlockingReport& r);

/// One JSON object per line: every snapshot, then a summary line.
std::string trace_to_jsonl(const Trace& t);

}  // namespace copclean
