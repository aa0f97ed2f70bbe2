#include "railsched/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

namespace railsched {

namespace {

constexpr int kUnset = -2;
constexpr int kNone = -1;

std::vector<int> encode_plan(const TrainPlan& plan) {
  std::vector<int> code;
  code.reserve(plan.days.size() + 2);
  for (const auto& d : plan.days) code.push_back(d ? *d : kNone);
  if (plan.maintenance.empty()) {
    code.insert(code.end(), {0, 0});
  } else {
    code.push_back(plan.maintenance.front().day);
    code.push_back(plan.maintenance.front().packet);
  }
  return code;
}

struct Column {
  TrainPlan plan;
  std::vector<int> code;
  std::uint64_t mask = 0;  // required (head, day) pairs this plan covers
  std::vector<int> load;   // maintenance load per horizon day
};

struct Incumbent {
  std::optional<Km> objective;
  std::vector<std::size_t> choice;
  std::uint64_t num_feasible = 0;

  void offer(Km obj, const std::vector<std::size_t>& c) {
    if (!objective || obj < *objective ||
        (obj == *objective && c < choice)) {
      objective = obj;
      choice = c;
    }
  }
};

class Search {
 public:
  Search(const Instance& instance, const OracleLimits& limits)
      : instance_(instance),
        limits_(limits),
        checker_(instance),
        index_(checker_.index()) {
    for (RouteId head : index_.heads())
      for (Day day = 1; day <= instance.horizon_days; ++day)
        if (index_.head_required(head, day)) {
          if (bit_of_.size() >= 64)
            throw BudgetExceededError(
                "too many route-days for exhaustive search (limit 64)");
          bit_of_.emplace(std::pair{head, day}, bit_of_.size());
        }
    all_bits_ = bit_of_.size() == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << bit_of_.size()) - 1;
  }

  OracleResult run() {
    const std::size_t n = instance_.trains.size();
    columns_.resize(n);
    for (std::size_t i = 0; i < n && !exceeded_; ++i) enumerate_columns(i);
    if (!exceeded_ && n > 0) {
      by_mask_.clear();
      for (std::size_t c = 0; c < columns_[n - 1].size(); ++c)
        by_mask_[columns_[n - 1][c].mask].push_back(c);
    }

    const int workers = std::max(1, limits_.workers);
    std::vector<Incumbent> partial(workers);
    if (!exceeded_) {
      if (workers == 1) {
        explore(0, 1, partial[0]);
      } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
          pool.emplace_back([this, w, workers, &partial] {
            explore(w, workers, partial[w]);
          });
      }
    }
    if (exceeded_)
      throw BudgetExceededError(
          "exhaustive search exceeds the budget of " +
          std::to_string(limits_.budget) + " candidate evaluations");

    Incumbent best;
    for (const Incumbent& p : partial) {
      best.num_feasible += p.num_feasible;
      if (p.objective) best.offer(*p.objective, p.choice);
    }

    OracleResult result;
    result.num_feasible = best.num_feasible;
    result.evaluations = evaluations_.load();
    if (best.objective) {
      result.status = OracleStatus::kOptimal;
      result.best_objective = best.objective;
      result.best_schedule = assemble(best.choice);
    }
    return result;
  }

 private:
  bool tick() {
    if (evaluations_.fetch_add(1) + 1 > limits_.budget) exceeded_ = true;
    return !exceeded_;
  }

  void enumerate_columns(std::size_t i) {
    const Train& train = instance_.trains[i];
    const int width = train.window_length();
    std::vector<std::optional<MaintenanceStart>> starts{std::nullopt};
    if (auto duration = index_.next_duration(i))
      for (Day d = train.begin_day; d + *duration - 1 <= train.end_day; ++d)
        starts.push_back(MaintenanceStart{d, *train.next_packet});

    for (const auto& start : starts) {
      std::vector<int> raw(width, kUnset);
      if (start) {
        const int duration = *index_.next_duration(i);
        for (int k = 0; k < duration; ++k)
          raw[start->day - train.begin_day + k] = kNone;
      }
      fill(i, start, raw, 0);
      if (exceeded_) return;
    }
    std::sort(columns_[i].begin(), columns_[i].end(),
              [](const Column& a, const Column& b) { return a.code < b.code; });
  }

  void fill(std::size_t i, const std::optional<MaintenanceStart>& start,
            std::vector<int>& raw, std::size_t k) {
    if (exceeded_) return;
    if (k == raw.size()) {
      emit(i, start, raw);
      return;
    }
    if (raw[k] != kUnset) {
      fill(i, start, raw, k + 1);
      return;
    }
    raw[k] = kSpareRoute;
    fill(i, start, raw, k + 1);
    for (RouteId head : index_.heads()) {
      if (!index_.eligible(i, head)) continue;
      const auto& chain = index_.chain(head);
      if (k + chain.size() > raw.size()) continue;
      bool free = true;
      for (std::size_t s = 1; s < chain.size(); ++s)
        free = free && raw[k + s] == kUnset;
      if (!free) continue;
      for (std::size_t s = 0; s < chain.size(); ++s) raw[k + s] = chain[s];
      fill(i, start, raw, k + 1);
      for (std::size_t s = 1; s < chain.size(); ++s) raw[k + s] = kUnset;
    }
    raw[k] = kUnset;
  }

  void emit(std::size_t i, const std::optional<MaintenanceStart>& start,
            const std::vector<int>& raw) {
    if (!tick()) return;
    const Train& train = instance_.trains[i];
    Column col;
    for (int v : raw)
      col.plan.days.push_back(v == kNone ? std::nullopt
                                         : std::optional<RouteId>(v));
    if (start) col.plan.maintenance.push_back(*start);

    FeasibilityReport local;
    checker_.check_train(train.id, &col.plan, local);
    if (!local.feasible()) return;

    col.code = encode_plan(col.plan);
    col.load.assign(instance_.horizon_days, 0);
    for (Day day = train.begin_day; day <= train.end_day; ++day) {
      col.load[day - 1] = checker_.maintenance_load(i, col.plan, day);
      const auto& r = col.plan.days[day - train.begin_day];
      if (auto it = bit_of_.find({r.value_or(kNone), day}); it != bit_of_.end())
        col.mask |= std::uint64_t{1} << it->second;
    }
    columns_[i].push_back(std::move(col));
  }

  void explore(int worker, int workers, Incumbent& out) {
    const std::size_t n = instance_.trains.size();
    std::vector<std::size_t> choice;
    std::vector<int> load(instance_.horizon_days, 0);
    if (n == 0) {
      if (worker == 0) leaf(choice, out);
      return;
    }
    descend(0, 0, load, choice, worker, workers, out);
  }

  bool fits(const std::vector<int>& load, const Column& col) const {
    for (std::size_t d = 0; d < load.size(); ++d)
      if (load[d] + col.load[d] > instance_.depot_capacity) return false;
    return true;
  }

  void descend(std::size_t level, std::uint64_t covered, std::vector<int>& load,
               std::vector<std::size_t>& choice, int worker, int workers,
               Incumbent& out) {
    const std::size_t n = instance_.trains.size();
    auto owned = [&](std::size_t c) {
      return level != 0 || static_cast<int>(c % workers) == worker;
    };
    if (level + 1 == n) {
      auto it = by_mask_.find(all_bits_ & ~covered);
      if (it == by_mask_.end()) return;
      for (std::size_t c : it->second) {
        if (!owned(c)) continue;
        if (!tick()) return;
        if (!fits(load, columns_[level][c])) continue;
        choice.push_back(c);
        leaf(choice, out);
        choice.pop_back();
      }
      return;
    }
    for (std::size_t c = 0; c < columns_[level].size(); ++c) {
      if (!owned(c)) continue;
      if (!tick()) return;
      const Column& col = columns_[level][c];
      if ((col.mask & covered) != 0 || !fits(load, col)) continue;
      for (std::size_t d = 0; d < load.size(); ++d) load[d] += col.load[d];
      choice.push_back(c);
      descend(level + 1, covered | col.mask, load, choice, worker, workers,
              out);
      choice.pop_back();
      for (std::size_t d = 0; d < load.size(); ++d) load[d] -= col.load[d];
      if (exceeded_) return;
    }
  }

  Schedule assemble(const std::vector<std::size_t>& choice) const {
    Schedule schedule;
    for (std::size_t i = 0; i < choice.size(); ++i)
      schedule.plans.emplace(instance_.trains[i].id,
                             columns_[i][choice[i]].plan);
    return schedule;
  }

  void leaf(const std::vector<std::size_t>& choice, Incumbent& out) {
    Schedule schedule = assemble(choice);
    if (!checker_.check(schedule).feasible()) return;
    const Km objective = checker_.objective(schedule);
    ++out.num_feasible;
    out.offer(objective, choice);
    if (limits_.on_feasible) {
      std::lock_guard lock(callback_mutex_);
      limits_.on_feasible(schedule, objective);
    }
  }

  const Instance& instance_;
  const OracleLimits& limits_;
  FeasibilityChecker checker_;
  const InstanceIndex& index_;
  std::map<std::pair<RouteId, Day>, std::size_t> bit_of_;
  std::uint64_t all_bits_ = 0;
  std::vector<std::vector<Column>> columns_;
  std::map<std::uint64_t, std::vector<std::size_t>> by_mask_;
  std::atomic<std::uint64_t> evaluations_{0};
  std::atomic<bool> exceeded_{false};
  std::mutex callback_mutex_;
};

}  // namespace

OracleResult exhaustive_solve(const Instance& instance,
                              const OracleLimits& limits) {
  return Search(instance, limits).run();
}

std::vector<std::vector<int>> schedule_encoding(const Schedule& schedule,
                                                const Instance& instance) {
  std::vector<std::vector<int>> out;
  for (const Train& train : instance.trains) {
    auto it = schedule.plans.find(train.id);
    out.push_back(it == schedule.plans.end() ? std::vector<int>{}
                                             : encode_plan(it->second));
  }
  return out;
}

}  // namespace railsched
