#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "railsched/instance.hpp"
#include "railsched/semantics.hpp"

namespace railsched {

// Relative probabilities of the local-search moves.
struct NeighborhoodWeights {
  double swap = 1.0;      // exchange two trains' assignments over a span
  double shift = 1.0;     // move a maintenance start by up to max_shift_days
  double reassign = 1.0;  // hand a route (whole chain) to a spare train
  double toggle = 1.0;    // add or remove a maintenance start

  bool operator==(const NeighborhoodWeights&) const = default;
};

struct SearchParams {
  std::uint64_t seed = 1;
  // Defaults to 0.1 x mean maintenance cycle over the trains.
  std::optional<double> initial_temperature;
  double cooling_rate = 0.95;
  int iterations_per_temperature = 200;
  // Defaults to 1e-3 x the initial temperature.
  std::optional<double> min_temperature;
  NeighborhoodWeights weights;
  int max_shift_days = 2;
  // Independent annealing runs with derived seeds; best result wins, ties go
  // to the lowest restart index.
  int restarts = 1;
  int workers = 1;
  // Node budget of the backtracking construction.
  std::uint64_t construction_budget = 200'000;
  // Random schedules drawn when construction fails.
  int sampling_attempts = 20'000;

  bool operator==(const SearchParams&) const = default;
};

// Throws std::invalid_argument unless 0 < cooling_rate < 1, temperatures are
// positive, iteration counts are positive and the weights are non-negative
// with a positive sum.
void validate(const SearchParams& params);

enum class SolveStatus { kFeasible, kNoSolutionFound };

struct TracePoint {
  std::uint64_t iteration = 0;
  Km objective = 0;

  bool operator==(const TracePoint&) const = default;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kNoSolutionFound;
  std::optional<Schedule> schedule;
  std::optional<Km> objective;
  // One entry per improvement of the best objective, starting with the
  // initial schedule; objectives are strictly decreasing.
  std::vector<TracePoint> trace;

  bool operator==(const SolveOutcome&) const = default;
};

// Day-by-day greedy with backtracking. Chain heads go to the eligible train
// with the most mileage headroom; a train that cannot afford its cheapest
// route is sent to maintenance first. Returns nullopt when no feasible
// schedule is found within `budget` search nodes.
std::optional<Schedule> construct_initial(const Instance& instance,
                                          std::uint64_t seed,
                                          std::uint64_t budget = 200'000);

// Construction followed by simulated annealing over feasible schedules.
// Reproducible for a given (instance, params).
SolveOutcome solve(const Instance& instance, const SearchParams& params = {});

}  // namespace railsched
