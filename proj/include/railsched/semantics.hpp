#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "railsched/errors.hpp"
#include "railsched/instance.hpp"

namespace railsched {

struct MaintenanceStart {
  Day day = 0;
  PacketId packet = 0;

  auto operator<=>(const MaintenanceStart&) const = default;
};

// One train's decisions. `days[k]` is the assignment on begin_day + k:
// a route id, kSpareRoute, or nullopt (no assignment, expected exactly on
// maintenance days). More than one maintenance start is representable so
// that the checker can report it.
struct TrainPlan {
  std::vector<std::optional<RouteId>> days;
  std::vector<MaintenanceStart> maintenance;

  bool operator==(const TrainPlan&) const = default;
};

// Decision variables x and y, keyed by train id.
struct Schedule {
  std::map<TrainId, TrainPlan> plans;

  // Assignment of `train` on `day`; nullopt when unassigned, when the train
  // has no plan, or when the day lies outside the stored range.
  std::optional<RouteId> assignment(const Instance& instance, TrainId train,
                                    Day day) const;

  bool operator==(const Schedule&) const = default;
};

enum class MaintenanceState { kOperation, kMaintenance };

enum class ConstraintTag { kC2, kC3, kC4, kC5, kC6, kC7, kC13, kDomain };

// "C2", ..., "C7/C12", "C13", "DOMAIN".
std::string_view to_string(ConstraintTag tag);

struct Violation {
  ConstraintTag tag = ConstraintTag::kDomain;
  std::optional<TrainId> train;
  std::optional<RouteId> route;
  std::optional<Day> day;
  std::string detail;

  std::string to_string() const;
};

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
  bool has(ConstraintTag tag) const;
  std::size_t count(ConstraintTag tag) const;
  std::string to_string() const;
};

class InfeasibleScheduleError : public Error {
 public:
  explicit InfeasibleScheduleError(FeasibilityReport report);
  const FeasibilityReport& report() const noexcept { return report_; }

 private:
  FeasibilityReport report_;
};

// MAINTENANCE iff the train has a start (tau, p) on its designated packet
// with tau <= day <= tau + duration(p) - 1. Throws DomainError for a day
// outside the train's window or an unknown train.
MaintenanceState maintenance_state(const Schedule& schedule,
                                   const Instance& instance, TrainId train,
                                   Day day);

// Cumulative mileage l(t) for every day of the train's window, starting from
// initial_mileage_km at begin_day - 1: add the day's route mileage (eligible
// routes only; spare and unassigned add 0), then reset to 0 on a day with a
// maintenance start.
std::vector<Km> mileage_trajectory(const Schedule& schedule,
                                   const Instance& instance, TrainId train);

// Total mileage loss: for each start on the designated packet at day t,
// maintenance_cycle_km - l(t - 1).
Km objective_value(const Schedule& schedule, const Instance& instance);

// Evaluates constraints C2-C7, C12 (chain links) and C13 for every train,
// route and day. Throws InvalidInstanceError when the instance has defects.
FeasibilityReport check_feasibility(const Schedule& schedule,
                                    const Instance& instance);

// Reusable checker for one validated instance. check_feasibility builds one
// per call; solvers keep one around.
class FeasibilityChecker {
 public:
  explicit FeasibilityChecker(const Instance& instance);

  const InstanceIndex& index() const { return index_; }

  FeasibilityReport check(const Schedule& schedule) const;

  // Constraints that involve a single train only: DOMAIN, C2, C5, C6, C7,
  // C13. Cross-train constraints C3 and C4 are left out.
  void check_train(TrainId train, const TrainPlan* plan,
                   FeasibilityReport& report) const;

  // Maintenance load f(t) of one plan: the number of designated-packet
  // windows covering `day`.
  int maintenance_load(std::size_t train_pos, const TrainPlan& plan,
                       Day day) const;

  std::vector<Km> trajectory(std::size_t train_pos,
                             const TrainPlan& plan) const;
  // Mileage loss contributed by one plan; the objective is the sum over
  // trains.
  Km train_objective(std::size_t train_pos, const TrainPlan& plan) const;
  Km objective(const Schedule& schedule) const;

 private:
  void check_coverage(const Schedule& schedule,
                      FeasibilityReport& report) const;
  void check_capacity(const Schedule& schedule,
                      FeasibilityReport& report) const;
  bool well_shaped(std::size_t train_pos, const TrainPlan& plan) const;

  const Instance& instance_;
  InstanceIndex index_;
};

}  // namespace railsched
