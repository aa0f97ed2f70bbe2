#pragma once

#include <random>
#include <string>
#include <vector>

#include "railsched/generator.hpp"
#include "railsched/instance.hpp"
#include "railsched/semantics.hpp"

namespace railsched::testing {

std::string data_path(const std::string& name);
std::string read_data(const std::string& name);

// Four trains, two one-day routes, three days, one-day packets "PA" and
// "PB": EMU1 runs R1, goes to maintenance, runs R1 again; EMU2 runs R2 twice
// and then takes PB; EMU3 stands by; EMU4 is spare, then runs R1 and R2.
Instance example_instance();
Schedule example_schedule();

// One train, one route of `route_km`, horizon `days`, packet of `duration`.
Instance single_train(int days, Km route_km, Km cycle_km, Km initial_km,
                      int duration = 1);

// Random plan per train: days drawn from spare, every route and "none"; zero
// to two starts of random packets inside the horizon.
Schedule random_schedule(const Instance& in, std::mt19937_64& rng);

// Generated instances at oracle scale (at most 3 trains, 5 days, 3 routes).
GeneratorSpec corpus_spec(int k);
std::vector<Instance> oracle_corpus(int count);

// Small instances whose model enumeration stays fast.
std::vector<Instance> milp_corpus(int count);

struct Fixture {
  Instance instance;
  Schedule schedule;  // feasible
};

// Feasible schedules with at least one maintenance start and one two-day
// route in use, found by the heuristic on generated instances.
std::vector<Fixture> planted_fixtures(int count);

}  // namespace railsched::testing
