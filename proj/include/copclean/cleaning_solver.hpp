#pragma once

#include <cstdint>
#include <optional>

#include "copclean/cleaning.hpp"
#include "copclean/config_space.hpp"
#include "copclean/graph.hpp"

namespace copclean {

inline constexpr int kCleaningMaxOrder = 26;

struct SolveOptions {
  /// Stop as soon as some strategy leaves at most this much gas.
  int target_gas = 0;
  std::uint64_t state_budget = default_state_budget();
  /// Try the scripted heuristics before the exhaustive search.
  bool greedy_prepass = false;
};

struct SolveResult {
  /// Largest number of simultaneously clean vertices reached (max-clean).
  int value = 0;
  int achieved_gas_min = 0;
  bool fully_cleanable = false;
  std::optional<StrategyScript> witness;
  std::uint64_t states_explored = 0;
  /// Budget hit: value is a certified lower bound on max-clean.
  bool capped = false;
  bool solved_by_greedy = false;
};

/// Exhaustive breadth-first search over (cop multiset, gas) states from every
/// initial placement. Gas is measured right after cleaning, before spreading.
SolveResult solve_cleaning(const Graph& g, int k, int l, const SolveOptions& options = {});

/// Least k whose cleaners can empty the graph of gas.
int seeing_number(const Graph& g, int l, std::uint64_t state_budget = default_state_budget());
/// Least k >= 1 whose cleaners can at some instant leave at most r gaseous vertices.
int inference_number(const Graph& g, int r, int l, std::uint64_t state_budget = default_state_budget());
int max_clean(const Graph& g, int k, int l, std::uint64_t state_budget = default_state_budget());

}  // namespace copclean
