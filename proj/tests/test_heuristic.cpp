#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"
#include "railsched/heuristic.hpp"
#include "railsched/oracle.hpp"

using namespace railsched;
using namespace railsched::testing;

TEST_CASE("parameter validation") {
  auto rejects = [](auto edit) {
    SearchParams p;
    edit(p);
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
  };
  CHECK_NOTHROW(validate(SearchParams{}));
  rejects([](SearchParams& p) { p.cooling_rate = 1.0; });
  rejects([](SearchParams& p) { p.cooling_rate = 0.0; });
  rejects([](SearchParams& p) { p.initial_temperature = 0.0; });
  rejects([](SearchParams& p) { p.min_temperature = -1.0; });
  rejects([](SearchParams& p) { p.iterations_per_temperature = 0; });
  rejects([](SearchParams& p) { p.restarts = 0; });
  rejects([](SearchParams& p) { p.weights.swap = -1.0; });
  rejects([](SearchParams& p) { p.weights = {0, 0, 0, 0}; });
  SearchParams hot;
  hot.cooling_rate = 2.0;
  CHECK_THROWS_AS(solve(example_instance(), hot), std::invalid_argument);
}

TEST_CASE("construction yields feasible schedules") {
  const auto s = construct_initial(example_instance(), 1);
  REQUIRE(s);
  CHECK(check_feasibility(*s, example_instance()).feasible());
  int built = 0;
  for (const Instance& in : oracle_corpus(20)) {
    if (auto c = construct_initial(in, 3)) {
      CHECK(check_feasibility(*c, in).feasible());
      ++built;
    }
  }
  MESSAGE("constructed " << built << " of 20");
}

TEST_CASE("solve is feasible, reproducible and traces strict improvements") {
  const Instance in = example_instance();
  SearchParams p;
  p.seed = 11;
  const SolveOutcome a = solve(in, p);
  REQUIRE(a.status == SolveStatus::kFeasible);
  CHECK(check_feasibility(*a.schedule, in).feasible());
  CHECK(objective_value(*a.schedule, in) == *a.objective);
  REQUIRE(!a.trace.empty());
  for (std::size_t k = 1; k < a.trace.size(); ++k) {
    CHECK(a.trace[k].objective < a.trace[k - 1].objective);
    CHECK(a.trace[k].iteration > a.trace[k - 1].iteration);
  }
  CHECK(a.trace.back().objective == *a.objective);
  CHECK(solve(in, p) == a);
}

TEST_CASE("restarts and workers") {
  const Instance in = oracle_corpus(1)[0];
  SearchParams p;
  p.restarts = 4;
  const SolveOutcome serial = solve(in, p);
  p.workers = 4;
  CHECK(solve(in, p) == serial);
  SearchParams single;
  const SolveOutcome one = solve(in, single);
  if (one.objective && serial.objective) CHECK(*serial.objective <= *one.objective);
}

TEST_CASE("no solution on an infeasible instance") {
  const Instance in = single_train(2, 500, 19000, 18500);
  SearchParams p;
  p.sampling_attempts = 200;
  const SolveOutcome out = solve(in, p);
  CHECK(out.status == SolveStatus::kNoSolutionFound);
  CHECK(!out.schedule);
  CHECK(!out.objective);
}

TEST_CASE("heuristic never beats the oracle and usually matches it") {
  int matched = 0;
  int feasible = 0;
  for (const Instance& in : oracle_corpus(20)) {
    const OracleResult exact = exhaustive_solve(in);
    const SolveOutcome h = solve(in);
    if (exact.status == OracleStatus::kInfeasible) {
      CHECK(h.status == SolveStatus::kNoSolutionFound);
      continue;
    }
    ++feasible;
    REQUIRE(h.status == SolveStatus::kFeasible);
    CHECK(*h.objective >= *exact.best_objective);
    matched += *h.objective == *exact.best_objective;
  }
  MESSAGE(matched << " of " << feasible << " optimal");
  CHECK(matched >= feasible * 9 / 10);
}
