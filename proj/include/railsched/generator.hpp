#pragma once

#include <cstdint>
#include <string>

#include "railsched/errors.hpp"
#include "railsched/instance.hpp"

namespace railsched {

// Random instance shape. Ranges are inclusive.
struct GeneratorSpec {
  int trains = 3;
  int routes = 2;   // route records; a two-day task uses two
  int packets = 1;
  int horizon_days = 5;
  Km min_route_km = 400;
  Km max_route_km = 1200;
  double two_day_fraction = 0.0;  // share of tasks split over two days
  Km min_cycle_km = 3000;
  Km max_cycle_km = 6000;
  // Initial mileage as a fraction of the train's cycle.
  double min_initial_fraction = 0.3;
  double max_initial_fraction = 0.9;
  int depot_capacity = 1;
  int min_packet_days = 1;
  int max_packet_days = 1;
  double eligibility_density = 0.8;
  // Trains without a designated packet never enter maintenance.
  double designated_fraction = 1.0;
  // Draws C13 bounds around the expected mileage and enables the range.
  bool mileage_range = false;
  std::uint64_t seed = 1;

  bool operator==(const GeneratorSpec&) const = default;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

// Deterministic for a given spec. Trains cover the whole horizon, two-day
// tasks become head/successor pairs with day_offset set, and every task has
// at least one eligible train. Throws GenerationError for inconsistent specs
// (empty ranges, probabilities outside [0, 1]) and when fewer trains exist
// than route records must run on one day.
Instance generate_instance(const GeneratorSpec& spec);

// Strict JSON object with the GeneratorSpec field names; missing fields
// keep their defaults. Throws ParseError.
GeneratorSpec parse_generator_spec(const std::string& text);
std::string serialize_generator_spec(const GeneratorSpec& spec);

}  // namespace railsched
