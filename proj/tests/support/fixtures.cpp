#include "fixtures.hpp"

#include <stdexcept>

#include "railsched/heuristic.hpp"
#include "railsched/io.hpp"

namespace railsched::testing {

std::string data_path(const std::string& name) {
  return std::string(RAILSCHED_TEST_DATA) + "/" + name;
}

std::string read_data(const std::string& name) {
  return read_file(data_path(name));
}

Instance example_instance() {
  Instance in;
  in.horizon_days = 3;
  in.depot_capacity = 1;
  in.packets = {{1, "PA", 1}, {2, "PB", 1}};
  in.routes = {{1, 1200, std::nullopt, 0}, {2, 900, std::nullopt, 0}};
  in.trains = {
      {1, "EMU1", 1, 3, 5000, 3500, 1, std::nullopt, std::nullopt},
      {2, "EMU2", 1, 3, 5000, 3000, 2, std::nullopt, std::nullopt},
      {3, "EMU3", 1, 3, 5000, 2000, std::nullopt, std::nullopt, std::nullopt},
      {4, "EMU4", 1, 3, 5000, 1000, std::nullopt, std::nullopt, std::nullopt},
  };
  in.eligibility.assign(4, {true, true});
  return in;
}

Schedule example_schedule() {
  Schedule s;
  s.plans[1] = {{1, std::nullopt, 1}, {{2, 1}}};
  s.plans[2] = {{2, 2, std::nullopt}, {{3, 2}}};
  s.plans[3] = {{0, 0, 0}, {}};
  s.plans[4] = {{0, 1, 2}, {}};
  return s;
}

Instance single_train(int days, Km route_km, Km cycle_km, Km initial_km,
                      int duration) {
  Instance in;
  in.horizon_days = days;
  in.depot_capacity = 1;
  in.packets = {{1, "P1", duration}};
  in.routes = {{1, route_km, std::nullopt, 0}};
  Train t;
  t.id = 1;
  t.begin_day = 1;
  t.end_day = days;
  t.maintenance_cycle_km = cycle_km;
  t.initial_mileage_km = initial_km;
  t.next_packet = 1;
  in.trains = {t};
  in.eligibility = {{true}};
  return in;
}

Schedule random_schedule(const Instance& in, std::mt19937_64& rng) {
  Schedule s;
  for (const Train& t : in.trains) {
    TrainPlan plan;
    for (int k = 0; k < t.window_length(); ++k) {
      const std::size_t pick = rng() % (in.routes.size() + 2);
      if (pick == 0)
        plan.days.push_back(std::nullopt);
      else if (pick == 1)
        plan.days.push_back(kSpareRoute);
      else
        plan.days.push_back(in.routes[pick - 2].id);
    }
    const int starts = static_cast<int>(rng() % 3);
    for (int k = 0; k < starts && !in.packets.empty(); ++k)
      plan.maintenance.push_back(
          {1 + static_cast<Day>(rng() % in.horizon_days),
           in.packets[rng() % in.packets.size()].id});
    s.plans[t.id] = std::move(plan);
  }
  return s;
}

GeneratorSpec corpus_spec(int k) {
  GeneratorSpec s;
  s.seed = 1000 + static_cast<std::uint64_t>(k);
  s.trains = 3;
  s.routes = 2;
  s.packets = 1;
  s.horizon_days = 5;
  switch (k % 5) {
    case 0:
      break;
    case 1:
      s.two_day_fraction = 1.0;
      s.packets = 2;
      s.max_packet_days = 2;
      break;
    case 2:
      s.routes = 1;
      s.min_packet_days = s.max_packet_days = 2;
      s.min_initial_fraction = 0.6;
      break;
    case 3:
      s.trains = 2;
      s.routes = 1;
      s.horizon_days = 4;
      break;
    case 4:
      s.routes = 3;
      s.horizon_days = 3;
      s.two_day_fraction = 1.0;
      s.min_initial_fraction = 0.0;
      s.max_initial_fraction = 0.5;
      s.designated_fraction = 0.7;
      break;
  }
  return s;
}

std::vector<Instance> oracle_corpus(int count) {
  std::vector<Instance> out;
  for (int k = 0; k < count; ++k) out.push_back(generate_instance(corpus_spec(k)));
  return out;
}

std::vector<Instance> milp_corpus(int count) {
  std::vector<Instance> out;
  for (int k = 0; k < count; ++k) {
    GeneratorSpec s;
    s.seed = 5000 + static_cast<std::uint64_t>(k);
    s.trains = 2 + k % 2;
    s.routes = 1 + (k / 2) % 2;
    s.horizon_days = 3 + k % 2;
    s.packets = 1 + k % 3 / 2;
    s.two_day_fraction = k % 4 == 3 ? 1.0 : 0.0;
    s.max_packet_days = 1 + k % 5 / 4;
    s.mileage_range = k % 6 == 5;
    s.designated_fraction = k % 7 == 6 ? 0.5 : 1.0;
    out.push_back(generate_instance(s));
  }
  return out;
}

std::vector<Fixture> planted_fixtures(int count) {
  std::vector<Fixture> out;
  for (std::uint64_t seed = 1; static_cast<int>(out.size()) < count; ++seed) {
    if (seed > 10'000) throw std::runtime_error("not enough planted fixtures");
    GeneratorSpec s;
    s.seed = seed;
    s.trains = 4;
    s.routes = 3;
    s.horizon_days = 5;
    s.two_day_fraction = 1.0;
    s.eligibility_density = 0.9;
    s.min_initial_fraction = 0.5;
    s.designated_fraction = 1.0;
    const Instance in = generate_instance(s);
    SearchParams params;
    params.seed = seed;
    params.iterations_per_temperature = 20;
    const SolveOutcome outcome = solve(in, params);
    if (outcome.status != SolveStatus::kFeasible) continue;
    const Schedule& schedule = *outcome.schedule;
    bool maintained = false, chained = false;
    for (const auto& [id, plan] : schedule.plans) {
      maintained = maintained || !plan.maintenance.empty();
      for (const auto& d : plan.days)
        if (d && *d != kSpareRoute && in.find_route(*d)->successor)
          chained = true;
    }
    if (maintained && chained) out.push_back({in, schedule});
  }
  return out;
}

}  // namespace railsched::testing
