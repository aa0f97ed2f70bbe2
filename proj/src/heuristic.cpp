#include "railsched/heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

namespace railsched {

namespace {

constexpr int kUnset = -2;
constexpr int kNone = -1;
constexpr std::uint64_t kRebuildBudget = 5'000;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

bool chain_eligible(const InstanceIndex& index, std::size_t train,
                    RouteId head) {
  for (RouteId r : index.chain(head))
    if (!index.eligible(train, r)) return false;
  return true;
}

Schedule to_schedule(const Instance& instance,
                     const std::vector<std::vector<int>>& cells,
                     const std::vector<std::optional<MaintenanceStart>>& start) {
  Schedule schedule;
  for (std::size_t i = 0; i < instance.trains.size(); ++i) {
    TrainPlan plan;
    for (int v : cells[i])
      plan.days.push_back(v == kNone ? std::nullopt
                                     : std::optional<RouteId>(v));
    if (start[i]) plan.maintenance.push_back(*start[i]);
    schedule.plans.emplace(instance.trains[i].id, std::move(plan));
  }
  return schedule;
}

// Maintenance start day per train position; nullopt for none.
using StartDays = std::vector<std::optional<Day>>;

// Backtracking day-by-day construction. Decisions per day, in order:
// maintenance starts train by train, then one train per required chain head,
// then spare for everyone left. With fixed start days only the routes are
// decided; trains heading for maintenance are then filled up first.
class Builder {
 public:
  Builder(const Instance& instance, const FeasibilityChecker& checker,
          std::uint64_t seed, std::uint64_t budget,
          const StartDays* fixed = nullptr)
      : in_(instance), checker_(checker), index_(checker.index()),
        budget_(budget), fixed_(fixed), rng_(seed) {
    const std::size_t n = in_.trains.size();
    cells_.resize(n);
    start_.assign(n, std::nullopt);
    mileage_.resize(n);
    total_.assign(n, 0);
    load_.assign(in_.horizon_days + 1, 0);
    tiebreak_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Train& t = in_.trains[i];
      cells_[i].assign(t.window_length(), kUnset);
      mileage_[i] = t.initial_mileage_km;
      tiebreak_[i] = rng_();
    }
  }

  std::optional<Schedule> run() {
    if (fixed_ && !place_fixed()) return std::nullopt;
    if (run_day(1)) return result_;
    return std::nullopt;
  }

 private:
  bool tick() {
    if (++nodes_ > budget_) aborted_ = true;
    return !aborted_;
  }

  bool place_fixed() {
    for (std::size_t i = 0; i < in_.trains.size(); ++i) {
      const auto& day = (*fixed_)[i];
      if (!day) continue;
      const Train& t = in_.trains[i];
      auto duration = index_.next_duration(i);
      if (!duration || *day < t.begin_day || *day + *duration - 1 > t.end_day)
        return false;
      for (Day d = *day; d < *day + *duration; ++d) {
        cell(i, d) = kNone;
        if (++load_[d] > in_.depot_capacity) return false;
      }
      start_[i] = MaintenanceStart{*day, *t.next_packet};
    }
    return true;
  }

  // Start day of train i still ahead of `day` under fixed start days.
  std::optional<Day> upcoming(std::size_t i, Day day) const {
    if (!fixed_ || !(*fixed_)[i] || *(*fixed_)[i] <= day) return std::nullopt;
    return (*fixed_)[i];
  }

  int& cell(std::size_t i, Day day) {
    return cells_[i][day - in_.trains[i].begin_day];
  }

  bool run_day(Day day) {
    if (day > in_.horizon_days) return finish();
    std::vector<RouteId> heads;
    for (RouteId h : index_.heads())
      if (index_.head_required(h, day)) heads.push_back(h);
    std::stable_sort(heads.begin(), heads.end(), [&](RouteId a, RouteId b) {
      return index_.chain_mileage(a) > index_.chain_mileage(b);
    });
    return maintain(day, 0, heads);
  }

  bool can_start(std::size_t i, Day day) {
    const Train& t = in_.trains[i];
    auto duration = index_.next_duration(i);
    if (!t.in_window(day) || start_[i] || !duration) return false;
    if (day + *duration - 1 > t.end_day) return false;
    for (Day d = day; d < day + *duration; ++d)
      if (cell(i, d) != kUnset || load_[d] + 1 > in_.depot_capacity)
        return false;
    return true;
  }

  bool needs_maintenance(std::size_t i) const {
    std::optional<Km> cheapest;
    for (RouteId h : index_.heads())
      if (chain_eligible(index_, i, h)) {
        Km m = index_.chain_mileage(h);
        cheapest = cheapest ? std::min(*cheapest, m) : m;
      }
    if (!cheapest) return false;
    return in_.trains[i].maintenance_cycle_km - mileage_[i] < *cheapest;
  }

  bool maintain(Day day, std::size_t i, const std::vector<RouteId>& heads) {
    if (!tick()) return false;
    if (i == in_.trains.size()) return cover(day, 0, heads);
    if (fixed_) {
      if ((*fixed_)[i] != day) return maintain(day, i + 1, heads);
      const Km saved = mileage_[i];
      mileage_[i] = 0;
      if (maintain(day, i + 1, heads)) return true;
      mileage_[i] = saved;
      return false;
    }
    if (!can_start(i, day)) return maintain(day, i + 1, heads);
    const bool prefer_start = needs_maintenance(i);
    for (bool start : {prefer_start, !prefer_start}) {
      if (!start) {
        if (maintain(day, i + 1, heads)) return true;
        continue;
      }
      const int duration = *index_.next_duration(i);
      const Km saved = mileage_[i];
      for (Day d = day; d < day + duration; ++d) {
        cell(i, d) = kNone;
        ++load_[d];
      }
      start_[i] = MaintenanceStart{day, *in_.trains[i].next_packet};
      mileage_[i] = 0;
      if (maintain(day, i + 1, heads)) return true;
      mileage_[i] = saved;
      start_[i].reset();
      for (Day d = day; d < day + duration; ++d) {
        cell(i, d) = kUnset;
        --load_[d];
      }
      if (aborted_) return false;
    }
    return false;
  }

  bool cover(Day day, std::size_t j, const std::vector<RouteId>& heads) {
    if (j == heads.size()) return close_day(day);
    const RouteId head = heads[j];
    const auto& chain = index_.chain(head);
    const Km chain_km = index_.chain_mileage(head);
    const Day last = day + static_cast<Day>(chain.size()) - 1;

    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < in_.trains.size(); ++i) {
      const Train& t = in_.trains[i];
      if (!t.in_window(day) || last > t.end_day) continue;
      if (!chain_eligible(index_, i, head)) continue;
      bool free = true;
      for (Day d = day; d <= last; ++d) free = free && cell(i, d) == kUnset;
      if (!free || mileage_[i] + chain_km > t.maintenance_cycle_km) continue;
      if (in_.mileage_range_enabled && t.max_mileage_km &&
          total_[i] + chain_km > *t.max_mileage_km)
        continue;
      candidates.push_back(i);
    }
    std::sort(candidates.begin(), candidates.end(),
              [&](std::size_t a, std::size_t b) {
                const bool ua = upcoming(a, day).has_value();
                const bool ub = upcoming(b, day).has_value();
                if (ua != ub) return ua;
                const Km ha = in_.trains[a].maintenance_cycle_km - mileage_[a];
                const Km hb = in_.trains[b].maintenance_cycle_km - mileage_[b];
                if (ha != hb) return ha > hb;
                return tiebreak_[a] < tiebreak_[b];
              });
    if (fixed_ && candidates.size() > 1 && rng_() % 4 == 0)
      std::shuffle(candidates.begin(), candidates.end(), rng_);
    for (std::size_t i : candidates) {
      if (!tick()) return false;
      for (std::size_t s = 0; s < chain.size(); ++s)
        cell(i, day + static_cast<Day>(s)) = chain[s];
      mileage_[i] += chain_km;
      total_[i] += chain_km;
      if (cover(day, j + 1, heads)) return true;
      mileage_[i] -= chain_km;
      total_[i] -= chain_km;
      for (Day d = day; d <= last; ++d) cell(i, d) = kUnset;
      if (aborted_) return false;
    }
    return false;
  }

  bool close_day(Day day) {
    std::vector<std::size_t> spared;
    for (std::size_t i = 0; i < in_.trains.size(); ++i)
      if (in_.trains[i].in_window(day) && cell(i, day) == kUnset) {
        cell(i, day) = kSpareRoute;
        spared.push_back(i);
      }
    if (run_day(day + 1)) return true;
    for (std::size_t i : spared) cell(i, day) = kUnset;
    return false;
  }

  bool finish() {
    Schedule schedule = to_schedule(in_, cells_, start_);
    if (!checker_.check(schedule).feasible()) return false;
    result_ = std::move(schedule);
    return true;
  }

  const Instance& in_;
  const FeasibilityChecker& checker_;
  const InstanceIndex& index_;
  std::uint64_t budget_;
  const StartDays* fixed_;
  std::mt19937_64 rng_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::vector<std::vector<int>> cells_;
  std::vector<std::optional<MaintenanceStart>> start_;
  std::vector<Km> mileage_;
  std::vector<Km> total_;
  std::vector<int> load_;  // indexed by day, slot 0 unused
  std::vector<std::uint64_t> tiebreak_;
  Schedule result_;
};

std::optional<Schedule> sample_schedule(const Instance& in,
                                        const FeasibilityChecker& checker,
                                        std::mt19937_64& rng, int attempts) {
  const InstanceIndex& index = checker.index();
  const std::size_t n = in.trains.size();
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<std::vector<int>> cells(n);
    std::vector<std::optional<MaintenanceStart>> start(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Train& t = in.trains[i];
      const int width = t.window_length();
      cells[i].assign(width, kUnset);
      auto duration = index.next_duration(i);
      if (duration && *duration <= width && rng() % 2 == 0) {
        const int k0 = static_cast<int>(rng() % (width - *duration + 1));
        start[i] = MaintenanceStart{t.begin_day + k0, *t.next_packet};
        for (int k = k0; k < k0 + *duration; ++k) cells[i][k] = kNone;
      }
      for (int k = 0; k < width; ++k) {
        if (cells[i][k] != kUnset) continue;
        std::vector<RouteId> options{kSpareRoute};
        for (RouteId h : index.heads()) {
          const auto& chain = index.chain(h);
          if (k + static_cast<int>(chain.size()) > width ||
              !chain_eligible(index, i, h))
            continue;
          bool free = true;
          for (std::size_t s = 1; s < chain.size(); ++s)
            free = free && cells[i][k + s] == kUnset;
          if (free) options.push_back(h);
        }
        const RouteId pick = options[rng() % options.size()];
        if (pick == kSpareRoute) {
          cells[i][k] = kSpareRoute;
          continue;
        }
        const auto& chain = index.chain(pick);
        for (std::size_t s = 0; s < chain.size(); ++s)
          cells[i][k + s] = chain[s];
      }
    }
    Schedule schedule = to_schedule(in, cells, start);
    if (checker.check(schedule).feasible()) return schedule;
  }
  return std::nullopt;
}

// Simulated annealing over feasible schedules. Every proposal is checked in
// full and discarded when infeasible.
class Annealer {
 public:
  Annealer(const Instance& instance, const FeasibilityChecker& checker,
           const SearchParams& params, std::uint64_t seed)
      : in_(instance), checker_(checker), index_(checker.index()),
        params_(params), rng_(seed),
        moves_({params.weights.swap, params.weights.shift,
                params.weights.reassign, params.weights.toggle}) {}

  SolveOutcome run(Schedule initial) {
    SolveOutcome out;
    Km current_obj = checker_.objective(initial);
    Schedule current = std::move(initial);
    Schedule best = current;
    Km best_obj = current_obj;
    out.trace.push_back({0, best_obj});

    double temperature = params_.initial_temperature.value_or(0.0);
    if (!params_.initial_temperature && !in_.trains.empty()) {
      double sum = 0;
      for (const Train& t : in_.trains) sum += t.maintenance_cycle_km;
      temperature = 0.1 * sum / in_.trains.size();
    }
    const double floor =
        params_.min_temperature.value_or(1e-3 * temperature);

    std::uint64_t iteration = 0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (temperature > floor && temperature > 0) {
      for (int k = 0; k < params_.iterations_per_temperature; ++k) {
        ++iteration;
        std::optional<Schedule> candidate = propose(current);
        if (!candidate || !checker_.check(*candidate).feasible()) continue;
        const Km obj = checker_.objective(*candidate);
        const double delta = static_cast<double>(obj - current_obj);
        if (delta <= 0 || unit(rng_) < std::exp(-delta / temperature)) {
          current = std::move(*candidate);
          current_obj = obj;
          if (current_obj < best_obj) {
            best = current;
            best_obj = current_obj;
            out.trace.push_back({iteration, best_obj});
          }
        }
      }
      temperature *= params_.cooling_rate;
    }
    out.status = SolveStatus::kFeasible;
    out.schedule = std::move(best);
    out.objective = best_obj;
    return out;
  }

 private:
  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  std::vector<std::optional<RouteId>>& days(Schedule& s, std::size_t i) {
    return s.plans.at(in_.trains[i].id).days;
  }

  std::optional<RouteId>& cell(Schedule& s, std::size_t i, Day day) {
    return days(s, i)[day - in_.trains[i].begin_day];
  }

  // Day span of the chain occupying (train, day); the day itself otherwise.
  std::pair<Day, Day> block(Schedule& s, std::size_t i, Day day) {
    const auto& r = cell(s, i, day);
    if (!r || *r == kSpareRoute || !index_.route_pos(*r)) return {day, day};
    const Day head_day = day - index_.chain_position(*r);
    return {head_day,
            head_day + index_.chain_length(index_.chain_head(*r)) - 1};
  }

  bool covers(std::size_t i, Day lo, Day hi) const {
    return in_.trains[i].in_window(lo) && in_.trains[i].in_window(hi);
  }

  bool all_spare(Schedule& s, std::size_t i, Day lo, Day hi) {
    if (!covers(i, lo, hi)) return false;
    for (Day d = lo; d <= hi; ++d)
      if (cell(s, i, d) != kSpareRoute) return false;
    return true;
  }

  std::optional<Schedule> propose(const Schedule& current) {
    switch (moves_(rng_)) {
      case 0: return swap(current);
      case 1: return shift(current);
      case 2: return reassign(current);
      default: return toggle(current);
    }
  }

  std::optional<Schedule> swap(const Schedule& current) {
    if (in_.trains.size() < 2) return std::nullopt;
    Schedule s = current;
    const Day day = 1 + static_cast<Day>(pick(in_.horizon_days));
    std::vector<std::size_t> present;
    for (std::size_t i = 0; i < in_.trains.size(); ++i)
      if (in_.trains[i].in_window(day)) present.push_back(i);
    if (present.size() < 2) return std::nullopt;
    const std::size_t x = pick(present.size());
    std::size_t y = pick(present.size() - 1);
    if (y >= x) ++y;
    const std::size_t a = present[x], b = present[y];

    Day lo = day, hi = day;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i : {a, b}) {
        if (!covers(i, lo, hi)) return std::nullopt;
        for (Day d = lo; d <= hi; ++d) {
          auto [blo, bhi] = block(s, i, d);
          if (blo < lo || bhi > hi) {
            lo = std::min(lo, blo);
            hi = std::max(hi, bhi);
            grew = true;
          }
        }
      }
    }
    if (!covers(a, lo, hi) || !covers(b, lo, hi)) return std::nullopt;
    bool differs = false;
    for (Day d = lo; d <= hi; ++d) {
      if (!cell(s, a, d) || !cell(s, b, d)) return std::nullopt;
      differs = differs || cell(s, a, d) != cell(s, b, d);
    }
    if (!differs) return std::nullopt;
    for (Day d = lo; d <= hi; ++d) std::swap(cell(s, a, d), cell(s, b, d));
    return s;
  }

  std::optional<Schedule> reassign(const Schedule& current) {
    Schedule s = current;
    std::vector<std::pair<std::size_t, Day>> runs;
    for (std::size_t i = 0; i < in_.trains.size(); ++i)
      for (Day d = in_.trains[i].begin_day; d <= in_.trains[i].end_day; ++d)
        if (auto r = cell(s, i, d); r && *r != kSpareRoute) runs.push_back({i, d});
    if (runs.empty()) return std::nullopt;
    auto [a, day] = runs[pick(runs.size())];
    auto [lo, hi] = block(s, a, day);
    if (!covers(a, lo, hi)) return std::nullopt;
    const RouteId head = index_.chain_head(*cell(s, a, day));
    std::vector<std::size_t> takers;
    for (std::size_t b = 0; b < in_.trains.size(); ++b)
      if (b != a && chain_eligible(index_, b, head) && all_spare(s, b, lo, hi))
        takers.push_back(b);
    if (takers.empty()) return std::nullopt;
    const std::size_t b = takers[pick(takers.size())];
    for (Day d = lo; d <= hi; ++d) {
      cell(s, b, d) = cell(s, a, d);
      cell(s, a, d) = kSpareRoute;
    }
    return s;
  }

  // Moves train i's maintenance window to start on `day` (or removes it).
  // Chains displaced by the new window go to randomly chosen spare trains.
  std::optional<Schedule> relocate(const Schedule& current, std::size_t i,
                                   std::optional<Day> day) {
    Schedule s = current;
    TrainPlan& plan = s.plans.at(in_.trains[i].id);
    for (auto& d : plan.days)
      if (!d) d = kSpareRoute;
    plan.maintenance.clear();
    if (!day) return s;

    const int duration = *index_.next_duration(i);
    std::vector<std::pair<RouteId, Day>> displaced;  // (head, head day)
    for (Day d = *day; d < *day + duration; ++d) {
      const auto r = cell(s, i, d);
      if (!r || *r == kSpareRoute) continue;
      auto [lo, hi] = block(s, i, d);
      if (!covers(i, lo, hi)) return std::nullopt;
      displaced.push_back({index_.chain_head(*r), lo});
      for (Day e = lo; e <= hi; ++e) cell(s, i, e) = kSpareRoute;
    }
    for (Day d = *day; d < *day + duration; ++d) cell(s, i, d) = std::nullopt;
    plan.maintenance.push_back({*day, *in_.trains[i].next_packet});

    for (auto [head, lo] : displaced) {
      const Day hi = lo + index_.chain_length(head) - 1;
      std::vector<std::size_t> takers;
      for (std::size_t b = 0; b < in_.trains.size(); ++b)
        if (b != i && chain_eligible(index_, b, head) &&
            all_spare(s, b, lo, hi))
          takers.push_back(b);
      if (takers.empty()) return std::nullopt;
      const std::size_t b = takers[pick(takers.size())];
      const auto& chain = index_.chain(head);
      for (std::size_t k = 0; k < chain.size(); ++k)
        cell(s, b, lo + static_cast<Day>(k)) = chain[k];
    }
    return s;
  }

  std::optional<Schedule> shift(const Schedule& current) {
    std::vector<std::size_t> with_start;
    for (std::size_t i = 0; i < in_.trains.size(); ++i)
      if (!current.plans.at(in_.trains[i].id).maintenance.empty())
        with_start.push_back(i);
    if (with_start.empty() || params_.max_shift_days < 1) return std::nullopt;
    const std::size_t i = with_start[pick(with_start.size())];
    const Train& t = in_.trains[i];
    if (pick(3) == 0) return exchange_starts(current, i);
    int delta = 1 + static_cast<int>(pick(params_.max_shift_days));
    if (pick(2) == 0) delta = -delta;
    const Day day =
        current.plans.at(t.id).maintenance.front().day + delta;
    if (day < t.begin_day || day + *index_.next_duration(i) - 1 > t.end_day)
      return std::nullopt;
    return move_start(current, i, day);
  }

  std::optional<Schedule> toggle(const Schedule& current) {
    const std::size_t i = pick(in_.trains.size());
    const Train& t = in_.trains[i];
    if (!current.plans.at(t.id).maintenance.empty())
      return move_start(current, i, std::nullopt);
    auto duration = index_.next_duration(i);
    if (!duration || *duration > t.window_length()) return std::nullopt;
    const Day day =
        t.begin_day + static_cast<Day>(pick(t.window_length() - *duration + 1));
    return move_start(current, i, day);
  }

  // Gives train i's start day to another train with a designated packet and
  // moves i to that train's day, or off maintenance when it had none.
  std::optional<Schedule> exchange_starts(const Schedule& current,
                                          std::size_t i) {
    StartDays starts = start_days(current);
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < in_.trains.size(); ++j)
      if (j != i && index_.next_duration(j) && starts[j] != starts[i])
        others.push_back(j);
    if (others.empty()) return std::nullopt;
    const std::size_t j = others[pick(others.size())];
    std::swap(starts[i], starts[j]);
    return Builder(in_, checker_, rng_(), kRebuildBudget, &starts).run();
  }

  StartDays start_days(const Schedule& current) const {
    StartDays starts(in_.trains.size());
    for (std::size_t j = 0; j < in_.trains.size(); ++j) {
      const auto& m = current.plans.at(in_.trains[j].id).maintenance;
      if (!m.empty()) starts[j] = m.front().day;
    }
    return starts;
  }

  // Either hands displaced chains to spare trains or rebuilds every route
  // assignment around the new start days.
  std::optional<Schedule> move_start(const Schedule& current, std::size_t i,
                                     std::optional<Day> day) {
    if (pick(2) == 0) return relocate(current, i, day);
    StartDays starts = start_days(current);
    starts[i] = day;
    return Builder(in_, checker_, rng_(), kRebuildBudget, &starts).run();
  }

  const Instance& in_;
  const FeasibilityChecker& checker_;
  const InstanceIndex& index_;
  const SearchParams& params_;
  std::mt19937_64 rng_;
  std::discrete_distribution<int> moves_;
};

SolveOutcome run_restart(const Instance& instance,
                         const FeasibilityChecker& checker,
                         const SearchParams& params, int restart) {
  const std::uint64_t seed =
      splitmix64(params.seed ^ splitmix64(static_cast<std::uint64_t>(restart)));
  std::optional<Schedule> initial =
      Builder(instance, checker, seed, params.construction_budget).run();
  if (!initial) {
    std::mt19937_64 rng(seed);
    initial = sample_schedule(instance, checker, rng, params.sampling_attempts);
  }
  if (!initial) return SolveOutcome{};
  if (instance.trains.empty()) {
    SolveOutcome out;
    out.status = SolveStatus::kFeasible;
    out.objective = checker.objective(*initial);
    out.trace.push_back({0, *out.objective});
    out.schedule = std::move(initial);
    return out;
  }
  return Annealer(instance, checker, params, splitmix64(seed)).run(*initial);
}

}  // namespace

void validate(const SearchParams& p) {
  if (!(p.cooling_rate > 0.0 && p.cooling_rate < 1.0))
    throw std::invalid_argument("cooling_rate must lie in (0, 1)");
  if (p.initial_temperature && !(*p.initial_temperature > 0.0))
    throw std::invalid_argument("initial_temperature must be positive");
  if (p.min_temperature && !(*p.min_temperature > 0.0))
    throw std::invalid_argument("min_temperature must be positive");
  if (p.iterations_per_temperature < 1)
    throw std::invalid_argument("iterations_per_temperature must be positive");
  if (p.restarts < 1 || p.workers < 1)
    throw std::invalid_argument("restarts and workers must be positive");
  if (p.max_shift_days < 0 || p.sampling_attempts < 0)
    throw std::invalid_argument("max_shift_days and sampling_attempts must "
                                "be non-negative");
  const auto& w = p.weights;
  for (double v : {w.swap, w.shift, w.reassign, w.toggle})
    if (!(v >= 0.0)) throw std::invalid_argument("weights must be >= 0");
  if (!(w.swap + w.shift + w.reassign + w.toggle > 0.0))
    throw std::invalid_argument("at least one weight must be positive");
}

std::optional<Schedule> construct_initial(const Instance& instance,
                                          std::uint64_t seed,
                                          std::uint64_t budget) {
  FeasibilityChecker checker(instance);
  return Builder(instance, checker, seed, budget).run();
}

SolveOutcome solve(const Instance& instance, const SearchParams& params) {
  validate(params);
  FeasibilityChecker checker(instance);
  std::vector<SolveOutcome> outcomes(params.restarts);
  if (params.workers == 1 || params.restarts == 1) {
    for (int r = 0; r < params.restarts; ++r)
      outcomes[r] = run_restart(instance, checker, params, r);
  } else {
    std::vector<std::jthread> pool;
    const int workers = std::min(params.workers, params.restarts);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int r = w; r < params.restarts; r += workers)
          outcomes[r] = run_restart(instance, checker, params, r);
      });
  }
  std::optional<std::size_t> best;
  for (std::size_t r = 0; r < outcomes.size(); ++r) {
    if (outcomes[r].status != SolveStatus::kFeasible) continue;
    if (!best || *outcomes[r].objective < *outcomes[*best].objective) best = r;
  }
  return best ? std::move(outcomes[*best]) : SolveOutcome{};
}

}  // namespace railsched
