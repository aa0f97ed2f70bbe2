#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "railsched/instance.hpp"
#include "railsched/semantics.hpp"

namespace railsched {

// Exhaustive ground-truth solver for desk-scale instances.
//
// Each train's candidate plans ("columns") are enumerated as per-day choices
// among {eligible chain heads, spare} plus at most one start of its next
// packet; a chosen head expands into its whole chain. Columns that violate a
// single-train constraint are dropped, then every combination of columns
// that covers each required route-day exactly once is checked in full.
// None of the dropped candidates can be feasible, so the optimum is exact.

struct OracleLimits {
  // Maximum number of candidate evaluations (columns enumerated plus
  // combinations tried). Exceeding it raises BudgetExceededError.
  std::uint64_t budget = 10'000'000;
  // Workers split the first train's columns; the result does not depend on
  // the worker count.
  int workers = 1;
  // Called once per feasible schedule, serialized across workers. Call
  // order is only deterministic with a single worker.
  std::function<void(const Schedule&, Km objective)> on_feasible;
};

enum class OracleStatus { kOptimal, kInfeasible };

struct OracleResult {
  OracleStatus status = OracleStatus::kInfeasible;
  std::optional<Schedule> best_schedule;
  std::optional<Km> best_objective;
  std::uint64_t num_feasible = 0;
  std::uint64_t evaluations = 0;

  bool operator==(const OracleResult&) const = default;
};

// Among optimal schedules the one with the lexicographically smallest
// encoding (see schedule_encoding) is returned.
OracleResult exhaustive_solve(const Instance& instance,
                              const OracleLimits& limits = {});

// Per-train integer encoding used for tie-breaking, trains in instance
// order: one code per window day (route id, 0 for spare, -1 for none),
// followed by the first maintenance start as (day, packet) or (0, 0).
std::vector<std::vector<int>> schedule_encoding(const Schedule& schedule,
                                                const Instance& instance);

}  // namespace railsched
