#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "copclean/graph.hpp"
#include "copclean/json_io.hpp"

namespace copclean {

/// Runs fn(i) for i in [0, count) on `jobs` threads. Callers write results
/// into pre-sized slots, so output order never depends on scheduling.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) fn(i);
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs && static_cast<std::size_t>(j) < count; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

struct CheckContext {
  int l = 1;
  /// when set, "see" tests cleanability by exactly this many cops
  std::optional<int> k;
  int r = 1;
  bool greedy = true;
  bool witness = false;
  std::uint64_t state_budget = default_state_budget();
};

struct CheckOutcome {
  Json values = Json::object();
  bool failed = false;
  std::string failure;
};

const std::vector<std::string>& registered_checks();
/// Throws Error; TOO_LARGE is reported by the caller as SKIPPED.
CheckOutcome run_check(const std::string& name, const Graph& g, const CheckContext& ctx);

enum class RecordStatus { Ok, Skipped, Error };

struct SweepRecord {
  std::size_t line = 0;
  std::string graph6;
  int n = 0;
  std::size_t m = 0;
  Json checks = Json::object();
  RecordStatus status = RecordStatus::Ok;
  std::string detail;
  bool failed = false;
  double elapsed_ms = 0.0;

  Json to_json(bool timing) const;
};

struct SweepOptions {
  std::vector<std::string> checks;
  CheckContext context;
  int jobs = 1;
  /// allow graphs on 9 or more vertices
  bool big = false;
  bool timing = false;
};

/// Evaluates one graph6 line; never throws.
SweepRecord evaluate_line(std::size_t line_number, const std::string& line, const SweepOptions& options);

/// `first_line` numbers the first entry (1-based) so resumed runs keep line numbers.
std::vector<SweepRecord> sweep(const std::vector<std::string>& lines, const SweepOptions& options, std::size_t first_line = 1);

/// Footer object from the record JSON lines (fresh or resumed).
Json sweep_summary(const std::vector<Json>& records);

/// All lines of a stream; blank lines yield no record but keep numbering.
std::vector<std::string> read_lines(std::istream& in);

}  // namespace copclean
