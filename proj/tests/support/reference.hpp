#pragma once

#include <set>
#include <string>
#include <vector>

#include "railsched/instance.hpp"
#include "railsched/semantics.hpp"

namespace railsched::testing {

// Decision tensors over the full horizon, indexed [train][slot][day] with
// day 1..T stored at index day. Slot 0 is spare, slot j + 1 is routes[j].
// Entries outside a train's window stay 0.
struct Tensor {
  std::vector<std::vector<std::vector<int>>> x;
  std::vector<std::vector<std::vector<int>>> y;  // [train][packet pos][day]
};

// Schedules with unknown routes or packets are not representable and throw.
Tensor to_tensor(const Instance& in, const Schedule& schedule);
Schedule from_tensor(const Instance& in, const Tensor& t);

// Straight transcription of the model over the tensors.
std::vector<std::vector<Km>> reference_mileage(const Instance& in,
                                               const Tensor& t);
int reference_load(const Instance& in, const Tensor& t, std::size_t m, Day day);
Km reference_objective(const Instance& in, const Tensor& t);
// Tags as printed by to_string(ConstraintTag).
std::set<std::string> reference_tags(const Instance& in, const Tensor& t);

struct BruteForceResult {
  std::size_t feasible = 0;
  std::optional<Km> best;
  std::set<std::string> feasible_keys;  // schedule_key of every feasible one
};

// Tries every combination of per-day choices (spare, any route, idle) and
// start day for every train. Only usable for a handful of train-days.
BruteForceResult brute_force(const Instance& in);

std::string schedule_key(const Schedule& schedule);

std::set<std::string> tags_of(const FeasibilityReport& report);

}  // namespace railsched::testing
