// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "inject.hpp"
#include "lp_tools.hpp"
#include "railsched/heuristic.hpp"
#include "railsched/io.hpp"
#include "railsched/milp.hpp"
#include "railsched/oracle.hpp"
#include "railsched/render.hpp"
#include "railsched/semantics.hpp"
#include "reference.hpp"

using namespace railsched;
using namespace railsched::testing;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_s,
               const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  const bool pass = v.pass && in_time;
  failures += !pass;
  std::ostringstream limit;
  if (limit_s > 0)
    limit << " < " << limit_s << " s";
  std::printf("criterion %d: %s  %s (%s; %.2f s%s%s)\n", number,
              pass ? "PASS" : "FAIL", title.c_str(), v.detail.c_str(), secs,
              limit.str().c_str(), in_time ? "" : ", over time limit");
  std::fflush(stdout);
}

// Mileage checked day by day against the assignments alone.
Verdict recurrence() {
  std::mt19937_64 rng(2024);
  int pairs = 0, bad = 0, resets = 0;
  for (int k = 0; pairs < 1000; ++k) {
    GeneratorSpec spec = corpus_spec(k);
    spec.seed += 7919;
    const Instance in = generate_instance(spec);
    for (int draw = 0; draw < 10; ++draw, ++pairs) {
      const Schedule s = random_schedule(in, rng);
      for (std::size_t i = 0; i < in.trains.size(); ++i) {
        const Train& t = in.trains[i];
        const TrainPlan& plan = s.plans.at(t.id);
        const std::vector<Km> l = mileage_trajectory(s, in, t.id);
        Km prev = t.initial_mileage_km;
        for (int k2 = 0; k2 < t.window_length(); ++k2) {
          const Day day = t.begin_day + k2;
          bool start = false;
          for (const MaintenanceStart& m : plan.maintenance)
            start = start || m.day == day;
          Km expected = prev;
          if (start) {
            expected = 0;
            ++resets;
          } else if (const auto r = plan.days[k2]; r && *r != kSpareRoute) {
            for (std::size_t j = 0; j < in.routes.size(); ++j)
              if (in.routes[j].id == *r && in.eligibility[i][j])
                expected += in.routes[j].mileage_km;
          }
          bad += l[k2] != expected;
          prev = l[k2];
        }
      }
    }
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(resets) +
                        " resets, " + std::to_string(bad) + " mismatching days"};
}

Verdict state_function() {
  std::mt19937_64 rng(99);
  int windows = 0, bad = 0;
  for (int k = 0; k < 500; ++k) {
    const int days = 3 + static_cast<int>(rng() % 6);
    const int duration = 1 + static_cast<int>(rng() % 3);
    Instance in = single_train(days, 100, 100000, 0, duration);
    Schedule s;
    TrainPlan plan{std::vector<std::optional<RouteId>>(days, 0), {}};
    std::optional<Day> tau;
    if (rng() % 4 != 0) {
      tau = 1 + static_cast<Day>(rng() % (days - duration + 1));
      plan.maintenance.push_back({*tau, 1});
      ++windows;
    }
    s.plans[1] = plan;
    for (Day d = 1; d <= days; ++d) {
      const bool inside = tau && *tau <= d && d <= *tau + duration - 1;
      bad += (maintenance_state(s, in, 1, d) == MaintenanceState::kMaintenance) !=
             inside;
    }
  }
  int schedules = 0;
  for (const Instance& in : oracle_corpus(20)) {
    OracleLimits limits;
    limits.on_feasible = [&](const Schedule& s, Km) {
      ++schedules;
      if (!check_feasibility(s, in).feasible()) ++bad;
      for (const Train& t : in.trains)
        for (Day d = t.begin_day; d <= t.end_day; ++d) {
          const auto a = s.plans.at(t.id).days[d - t.begin_day];
          const bool task = a && *a != kSpareRoute;
          const bool spare = a && *a == kSpareRoute;
          const bool maint =
              maintenance_state(s, in, t.id, d) == MaintenanceState::kMaintenance;
          bad += task + spare + maint != 1;
        }
    };
    exhaustive_solve(in, limits);
  }
  return {bad == 0 && schedules > 0,
          std::to_string(windows) + " windows, " + std::to_string(schedules) +
              " feasible schedules, " + std::to_string(bad) + " violations"};
}

Verdict completeness() {
  const std::vector<Fixture> fixtures = planted_fixtures(20);
  const ConstraintTag tags[] = {ConstraintTag::kC2, ConstraintTag::kC3,
                                ConstraintTag::kC4, ConstraintTag::kC5,
                                ConstraintTag::kC6, ConstraintTag::kC7,
                                ConstraintTag::kC13};
  int ok = 0, total = 0, clean = 0;
  std::string missed;
  for (std::size_t f = 0; f < fixtures.size(); ++f)
    for (ConstraintTag tag : tags) {
      ++total;
      const auto injection = inject(fixtures[f], tag);
      const auto report =
          injection ? check_feasibility(injection->schedule, injection->instance)
                    : FeasibilityReport{};
      if (injection && located(report, *injection)) {
        ++ok;
        clean += report.count(tag) == report.violations.size();
      } else if (missed.size() < 60) {
        missed += " " + std::string(to_string(tag)) + "@" + std::to_string(f);
      }
    }
  std::string detail = std::to_string(fixtures.size()) + " fixtures, " +
                       std::to_string(ok) + "/" + std::to_string(total) +
                       " injections located, " + std::to_string(clean) +
                       " with no other tag";
  if (!missed.empty()) detail += ", missed:" + missed;
  return {fixtures.size() == 20 && ok == total, detail};
}

Verdict agreement() {
  int matched = 0, infeasible = 0, feasibility_miss = 0, beats = 0;
  const std::vector<Instance> corpus = oracle_corpus(50);
  for (const Instance& in : corpus) {
    const OracleResult exact = exhaustive_solve(in);
    const SolveOutcome h = solve(in);
    if (exact.status == OracleStatus::kInfeasible) {
      ++infeasible;
      matched += h.status == SolveStatus::kNoSolutionFound;
      continue;
    }
    if (h.status != SolveStatus::kFeasible) {
      ++feasibility_miss;
      continue;
    }
    if (!check_feasibility(*h.schedule, in).feasible() ||
        *h.objective < *exact.best_objective)
      ++beats;
    matched += *h.objective == *exact.best_objective;
  }
  return {feasibility_miss == 0 && beats == 0 && matched >= 45,
          std::to_string(matched) + "/" + std::to_string(corpus.size()) +
              " match (" + std::to_string(infeasible) + " infeasible), " +
              std::to_string(feasibility_miss) + " missed feasible, " +
              std::to_string(beats) + " below optimum"};
}

Verdict milp_equivalence() {
  int same_sets = 0, same_optimum = 0, count = 0;
  std::uint64_t nodes = 0, points = 0;
  for (const Instance& in : oracle_corpus(20)) {
    ++count;
    std::set<std::string> exact;
    OracleLimits limits;
    limits.on_feasible = [&](const Schedule& s, Km) {
      exact.insert(schedule_key(s));
    };
    const OracleResult r = exhaustive_solve(in, limits);
    std::set<std::string> from_lp;
    std::optional<std::int64_t> best;
    bool reports_clean = true;
    nodes += enumerate_binaries(
        read_lp(write_lp(linearize(in))), [&](const LpPoint& p) {
          ++points;
          std::map<std::string, double> values(p.binaries.begin(),
                                               p.binaries.end());
          const Schedule s = decode_assignment(in, values);
          reports_clean = reports_clean && check_feasibility(s, in).feasible();
          from_lp.insert(schedule_key(s));
          if (!best || p.objective < *best) best = p.objective;
        });
    same_sets += reports_clean && from_lp == exact &&
                 from_lp.size() == r.num_feasible;
    same_optimum += best == r.best_objective;
  }
  return {same_sets == count && same_optimum == count,
          std::to_string(count) + " instances, " + std::to_string(points) +
              " LP-feasible points, " + std::to_string(nodes) +
              " nodes; feasible sets equal on " + std::to_string(same_sets) +
              ", optimum equal on " + std::to_string(same_optimum)};
}

Verdict example() {
  const Instance in = load_instance(read_data("example_instance.json"));
  const Schedule s = parse_schedule(read_data("example_schedule.json"));
  const FeasibilityReport report = check_feasibility(s, in);
  const bool golden =
      report.feasible() &&
      render_schedule(in, s, RenderStyle::kText) == read_data("example_golden.txt");
  return {report.feasible() && golden,
          std::to_string(report.violations.size()) + " violations, golden " +
              (golden ? "matches" : "differs")};
}

Verdict determinism() {
  int stable = 0, total = 0;
  auto same = [&](const std::string& a, const std::string& b) {
    ++total;
    stable += a == b;
  };
  for (const Instance& in : oracle_corpus(10)) {
    auto run = [&](int workers) {
      OracleLimits limits;
      limits.workers = workers;
      const OracleResult r = exhaustive_solve(in, limits);
      return r.best_schedule ? serialize_schedule(*r.best_schedule)
                             : std::string("infeasible");
    };
    const std::string one = run(1);
    same(one, run(1));
    same(one, run(4));
    same(write_lp(linearize(in)), write_lp(linearize(in)));
    SearchParams p;
    p.seed = 5;
    auto heuristic = [&](int workers) {
      p.restarts = 3;
      p.workers = workers;
      const SolveOutcome h = solve(in, p);
      return h.schedule ? serialize_schedule(*h.schedule) : std::string("none");
    };
    const std::string h1 = heuristic(1);
    same(h1, heuristic(1));
    same(h1, heuristic(3));
  }
  const Instance in = example_instance();
  const Schedule s = example_schedule();
  same(render_schedule(in, s, RenderStyle::kText),
       render_schedule(in, s, RenderStyle::kText));
  same(render_schedule(in, s, RenderStyle::kSvg),
       render_schedule(in, s, RenderStyle::kSvg));
  return {stable == total,
          std::to_string(stable) + "/" + std::to_string(total) +
              " output pairs identical"};
}

}  // namespace

int main() {
  criterion(1, "mileage recurrence on random pairs", 5, recurrence);
  criterion(2, "maintenance state and daily exclusivity", 5, state_function);
  criterion(3, "checker completeness on injected violations", 10, completeness);
  criterion(4, "heuristic agrees with the oracle", 120, agreement);
  criterion(5, "linear model matches the oracle", 300, milp_equivalence);
  criterion(6, "four-train example fixture and golden rendering", 1, example);
  criterion(7, "byte-identical reruns", 0, determinism);
  std::printf("%s\n", failures == 0 ? "all criteria passed"
                                    : (std::to_string(failures) +
                                       " criteria failed").c_str());
  return failures == 0 ? 0 : 1;
}
