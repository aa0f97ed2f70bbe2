#include "railsched/semantics.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace railsched {

std::optional<RouteId> Schedule::assignment(const Instance& instance,
                                            TrainId train, Day day) const {
  const Train* t = instance.find_train(train);
  auto it = plans.find(train);
  if (!t || it == plans.end()) return std::nullopt;
  const int k = day - t->begin_day;
  if (k < 0 || k >= static_cast<int>(it->second.days.size()))
    return std::nullopt;
  return it->second.days[k];
}

std::string_view to_string(ConstraintTag tag) {
  switch (tag) {
    case ConstraintTag::kC2: return "C2";
    case ConstraintTag::kC3: return "C3";
    case ConstraintTag::kC4: return "C4";
    case ConstraintTag::kC5: return "C5";
    case ConstraintTag::kC6: return "C6";
    case ConstraintTag::kC7: return "C7/C12";
    case ConstraintTag::kC13: return "C13";
    case ConstraintTag::kDomain: return "DOMAIN";
  }
  return "?";
}

std::string Violation::to_string() const {
  std::ostringstream os;
  os << '[' << railsched::to_string(tag) << ']';
  if (train) os << " train " << *train;
  if (route) os << " route " << *route;
  if (day) os << " day " << *day;
  os << ": " << detail;
  return os.str();
}

bool FeasibilityReport::has(ConstraintTag tag) const { return count(tag) > 0; }

std::size_t FeasibilityReport::count(ConstraintTag tag) const {
  return std::count_if(violations.begin(), violations.end(),
                       [tag](const Violation& v) { return v.tag == tag; });
}

std::string FeasibilityReport::to_string() const {
  if (violations.empty()) return "feasible\n";
  std::string out;
  for (const Violation& v : violations) out += v.to_string() + "\n";
  return out;
}

InfeasibleScheduleError::InfeasibleScheduleError(FeasibilityReport report)
    : Error("schedule is infeasible:\n" + report.to_string()),
      report_(std::move(report)) {}

namespace {

Violation make(ConstraintTag tag, std::optional<TrainId> train,
               std::optional<RouteId> route, std::optional<Day> day,
               std::string detail) {
  return Violation{tag, train, route, day, std::move(detail)};
}

const Instance& validated(const Instance& instance) {
  require_valid(instance);
  return instance;
}

}  // namespace

FeasibilityChecker::FeasibilityChecker(const Instance& instance)
    : instance_(validated(instance)), index_(instance) {}

bool FeasibilityChecker::well_shaped(std::size_t train_pos,
                                     const TrainPlan& plan) const {
  return static_cast<int>(plan.days.size()) ==
         instance_.trains[train_pos].window_length();
}

int FeasibilityChecker::maintenance_load(std::size_t train_pos,
                                         const TrainPlan& plan,
                                         Day day) const {
  const Train& train = instance_.trains[train_pos];
  if (!train.next_packet) return 0;
  const MaintenancePacket* packet = index_.packet(*train.next_packet);
  int load = 0;
  for (const MaintenanceStart& s : plan.maintenance) {
    if (s.packet != packet->id) continue;
    if (s.day <= day && day <= s.day + packet->duration_days - 1) ++load;
  }
  return load;
}

std::vector<Km> FeasibilityChecker::trajectory(std::size_t train_pos,
                                               const TrainPlan& plan) const {
  const Train& train = instance_.trains[train_pos];
  std::vector<Km> out;
  out.reserve(plan.days.size());
  Km mileage = train.initial_mileage_km;
  for (std::size_t k = 0; k < plan.days.size(); ++k) {
    const Day day = train.begin_day + static_cast<Day>(k);
    if (const auto& r = plan.days[k]; r && index_.eligible(train_pos, *r))
      mileage += index_.route_mileage(*r);
    const bool reset =
        std::any_of(plan.maintenance.begin(), plan.maintenance.end(),
                    [day](const MaintenanceStart& s) { return s.day == day; });
    if (reset) mileage = 0;
    out.push_back(mileage);
  }
  return out;
}

Km FeasibilityChecker::train_objective(std::size_t train_pos,
                                       const TrainPlan& plan) const {
  const Train& train = instance_.trains[train_pos];
  if (!train.next_packet) return 0;
  Km total = 0;
  std::vector<Km> l;
  for (const MaintenanceStart& s : plan.maintenance) {
    if (s.packet != *train.next_packet || !train.in_window(s.day)) continue;
    if (l.empty()) l = trajectory(train_pos, plan);
    const Km before = s.day == train.begin_day
                          ? train.initial_mileage_km
                          : l[s.day - 1 - train.begin_day];
    total += train.maintenance_cycle_km - before;
  }
  return total;
}

Km FeasibilityChecker::objective(const Schedule& schedule) const {
  Km total = 0;
  for (std::size_t i = 0; i < instance_.trains.size(); ++i) {
    const Train& train = instance_.trains[i];
    auto it = schedule.plans.find(train.id);
    if (it == schedule.plans.end() || !well_shaped(i, it->second))
      throw DomainError("schedule has no well-formed plan for train " +
                        std::to_string(train.id));
    total += train_objective(i, it->second);
  }
  return total;
}

void FeasibilityChecker::check_train(TrainId train_id, const TrainPlan* plan,
                                     FeasibilityReport& report) const {
  const std::size_t pos = index_.train_pos(train_id).value();
  const Train& train = instance_.trains[pos];
  auto& out = report.violations;
  if (!plan) {
    out.push_back(make(ConstraintTag::kDomain, train_id, {}, {},
                       "train has no plan"));
    return;
  }
  if (!well_shaped(pos, *plan)) {
    out.push_back(make(ConstraintTag::kDomain, train_id, {}, {},
                       "plan covers " + std::to_string(plan->days.size()) +
                           " days but the window has " +
                           std::to_string(train.window_length())));
    return;
  }

  int designated_starts = 0;
  for (const MaintenanceStart& s : plan->maintenance) {
    const MaintenancePacket* packet = index_.packet(s.packet);
    if (!train.in_window(s.day)) {
      out.push_back(make(ConstraintTag::kDomain, train_id, {}, s.day,
                         "maintenance start outside the train window"));
    } else if (!packet) {
      out.push_back(make(ConstraintTag::kDomain, train_id, {}, s.day,
                         "unknown packet " + std::to_string(s.packet)));
    } else if (!train.next_packet || *train.next_packet != s.packet) {
      out.push_back(make(ConstraintTag::kDomain, train_id, {}, s.day,
                         "packet " + std::to_string(s.packet) +
                             " is not the train's next packet"));
    } else if (s.day + packet->duration_days - 1 > train.end_day) {
      out.push_back(make(ConstraintTag::kDomain, train_id, {}, s.day,
                         "maintenance window overruns the train window"));
    }
    if (train.next_packet && s.packet == *train.next_packet)
      ++designated_starts;
  }

  for (std::size_t k = 0; k < plan->days.size(); ++k) {
    const Day day = train.begin_day + static_cast<Day>(k);
    const auto& r = plan->days[k];
    if (!r || *r == kSpareRoute) continue;
    if (!index_.route_pos(*r))
      out.push_back(make(ConstraintTag::kDomain, train_id, *r, day,
                         "unknown route"));
    else if (!index_.eligible(pos, *r))
      out.push_back(make(ConstraintTag::kDomain, train_id, *r, day,
                         "train is not eligible for the route"));
  }

  for (std::size_t k = 0; k < plan->days.size(); ++k) {
    const Day day = train.begin_day + static_cast<Day>(k);
    const int occupied =
        (plan->days[k] ? 1 : 0) + maintenance_load(pos, *plan, day);
    if (occupied != 1) {
      std::string detail =
          occupied == 0
              ? "neither assigned nor in maintenance"
              : "assignment and maintenance overlap (" +
                    std::to_string(occupied) + " activities)";
      out.push_back(make(ConstraintTag::kC2, train_id, {}, day, detail));
    }
  }

  const std::vector<Km> l = trajectory(pos, *plan);
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (l[k] > train.maintenance_cycle_km)
      out.push_back(make(ConstraintTag::kC5, train_id, {},
                         train.begin_day + static_cast<Day>(k),
                         "cumulative mileage " + std::to_string(l[k]) +
                             " km exceeds cycle " +
                             std::to_string(train.maintenance_cycle_km) +
                             " km"));
  }

  if (designated_starts > 1)
    out.push_back(make(ConstraintTag::kC6, train_id, {}, {},
                       std::to_string(designated_starts) +
                           " maintenance starts in the horizon"));

  auto at = [&](Day day) -> std::optional<RouteId> {
    if (!train.in_window(day)) return std::nullopt;
    return plan->days[day - train.begin_day];
  };
  for (std::size_t k = 0; k < plan->days.size(); ++k) {
    const Day day = train.begin_day + static_cast<Day>(k);
    const auto& r = plan->days[k];
    if (!r || *r == kSpareRoute || !index_.route_pos(*r)) continue;
    const Route& route = *instance_.find_route(*r);
    if (route.successor && at(day + 1) != route.successor)
      out.push_back(make(ConstraintTag::kC7, train_id, *r, day,
                         "successor " + std::to_string(*route.successor) +
                             " not run on the next day"));
    if (auto pred = index_.predecessor(*r); pred && at(day - 1) != pred)
      out.push_back(make(ConstraintTag::kC7, train_id, *r, day,
                         "predecessor " + std::to_string(*pred) +
                             " not run on the previous day"));
  }

  if (instance_.mileage_range_enabled &&
      (train.min_mileage_km || train.max_mileage_km)) {
    Km total = 0;
    for (const auto& r : plan->days)
      if (r && index_.eligible(pos, *r)) total += index_.route_mileage(*r);
    if (train.min_mileage_km && total < *train.min_mileage_km)
      out.push_back(make(ConstraintTag::kC13, train_id, {}, {},
                         "running mileage " + std::to_string(total) +
                             " km below minimum " +
                             std::to_string(*train.min_mileage_km) + " km"));
    if (train.max_mileage_km && total > *train.max_mileage_km)
      out.push_back(make(ConstraintTag::kC13, train_id, {}, {},
                         "running mileage " + std::to_string(total) +
                             " km above maximum " +
                             std::to_string(*train.max_mileage_km) + " km"));
  }
}

void FeasibilityChecker::check_coverage(const Schedule& schedule,
                                        FeasibilityReport& report) const {
  for (RouteId head : index_.heads()) {
    for (Day day = 1; day <= instance_.horizon_days; ++day) {
      if (!index_.head_required(head, day)) continue;
      int covered = 0;
      for (std::size_t i = 0; i < instance_.trains.size(); ++i) {
        const Train& train = instance_.trains[i];
        auto it = schedule.plans.find(train.id);
        if (it == schedule.plans.end() || !well_shaped(i, it->second) ||
            !train.in_window(day) || !index_.eligible(i, head))
          continue;
        if (it->second.days[day - train.begin_day] == head) ++covered;
      }
      if (covered != 1)
        report.violations.push_back(
            make(ConstraintTag::kC3, {}, head, day,
                 "covered by " + std::to_string(covered) + " trains"));
    }
  }
}

void FeasibilityChecker::check_capacity(const Schedule& schedule,
                                        FeasibilityReport& report) const {
  for (Day day = 1; day <= instance_.horizon_days; ++day) {
    int load = 0;
    for (std::size_t i = 0; i < instance_.trains.size(); ++i) {
      const Train& train = instance_.trains[i];
      auto it = schedule.plans.find(train.id);
      if (it == schedule.plans.end() || !well_shaped(i, it->second) ||
          !train.in_window(day))
        continue;
      load += maintenance_load(i, it->second, day);
    }
    if (load > instance_.depot_capacity)
      report.violations.push_back(
          make(ConstraintTag::kC4, {}, {}, day,
               std::to_string(load) + " trains in maintenance, capacity " +
                   std::to_string(instance_.depot_capacity)));
  }
}

FeasibilityReport FeasibilityChecker::check(const Schedule& schedule) const {
  FeasibilityReport report;
  for (const Train& train : instance_.trains) {
    auto it = schedule.plans.find(train.id);
    check_train(train.id, it == schedule.plans.end() ? nullptr : &it->second,
                report);
  }
  check_coverage(schedule, report);
  check_capacity(schedule, report);
  for (const auto& [id, plan] : schedule.plans)
    if (!index_.train_pos(id))
      report.violations.push_back(make(ConstraintTag::kDomain, id, {}, {},
                                       "plan for unknown train"));
  return report;
}

MaintenanceState maintenance_state(const Schedule& schedule,
                                   const Instance& instance, TrainId train,
                                   Day day) {
  FeasibilityChecker checker(instance);
  auto pos = checker.index().train_pos(train);
  if (!pos) throw DomainError("unknown train " + std::to_string(train));
  if (!instance.trains[*pos].in_window(day))
    throw DomainError("day " + std::to_string(day) +
                      " is outside the window of train " +
                      std::to_string(train));
  auto it = schedule.plans.find(train);
  if (it == schedule.plans.end()) return MaintenanceState::kOperation;
  return checker.maintenance_load(*pos, it->second, day) > 0
             ? MaintenanceState::kMaintenance
             : MaintenanceState::kOperation;
}

std::vector<Km> mileage_trajectory(const Schedule& schedule,
                                   const Instance& instance, TrainId train) {
  FeasibilityChecker checker(instance);
  auto pos = checker.index().train_pos(train);
  if (!pos) throw DomainError("unknown train " + std::to_string(train));
  auto it = schedule.plans.find(train);
  if (it == schedule.plans.end() ||
      static_cast<int>(it->second.days.size()) !=
          instance.trains[*pos].window_length())
    throw DomainError("schedule does not cover the window of train " +
                      std::to_string(train));
  return checker.trajectory(*pos, it->second);
}

Km objective_value(const Schedule& schedule, const Instance& instance) {
  return FeasibilityChecker(instance).objective(schedule);
}

FeasibilityReport check_feasibility(const Schedule& schedule,
                                    const Instance& instance) {
  return FeasibilityChecker(instance).check(schedule);
}

}  // namespace railsched
