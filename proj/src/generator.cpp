#include "railsched/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "json_reader.hpp"

namespace railsched {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

void check_spec(const GeneratorSpec& s) {
  auto fail = [](const std::string& what) {
    throw GenerationError("inconsistent generator spec: " + what);
  };
  auto probability = [&](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) fail(std::string(name) + " outside [0, 1]");
  };
  if (s.trains < 0 || s.routes < 0 || s.packets < 0)
    fail("counts must be non-negative");
  if (s.horizon_days < 1) fail("horizon_days must be positive");
  if (s.min_route_km < 0 || s.min_route_km > s.max_route_km)
    fail("empty route mileage range");
  if (s.min_cycle_km < 1 || s.min_cycle_km > s.max_cycle_km)
    fail("empty cycle range");
  probability(s.two_day_fraction, "two_day_fraction");
  probability(s.min_initial_fraction, "min_initial_fraction");
  probability(s.max_initial_fraction, "max_initial_fraction");
  probability(s.eligibility_density, "eligibility_density");
  probability(s.designated_fraction, "designated_fraction");
  if (s.min_initial_fraction > s.max_initial_fraction)
    fail("empty initial mileage range");
  if (s.depot_capacity < 0) fail("depot_capacity must be non-negative");
  if (s.min_packet_days < 1 || s.min_packet_days > s.max_packet_days)
    fail("empty packet duration range");
}

// Largest number of route records that must run on a single day.
int peak_demand(const Instance& in) {
  InstanceIndex index(in);
  int peak = 0;
  for (Day day = 1; day <= in.horizon_days; ++day) {
    int demand = 0;
    for (RouteId head : index.heads()) {
      const int len = index.chain_length(head);
      for (int k = 0; k < len; ++k)
        if (day - k >= 1 && index.head_required(head, day - k)) ++demand;
    }
    peak = std::max(peak, demand);
  }
  return peak;
}

}  // namespace

Instance generate_instance(const GeneratorSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  Instance in;
  in.horizon_days = spec.horizon_days;
  in.depot_capacity = spec.depot_capacity;
  in.mileage_range_enabled = spec.mileage_range;

  for (int p = 1; p <= spec.packets; ++p)
    in.packets.push_back(MaintenancePacket{
        p, "P" + std::to_string(p),
        static_cast<int>(rng.between(spec.min_packet_days, spec.max_packet_days))});

  // Tasks as [first, last] ranges over route records.
  std::vector<std::pair<int, int>> tasks;
  for (int r = 1; r <= spec.routes;) {
    const bool two_day = r < spec.routes && rng.chance(spec.two_day_fraction);
    Route head{r, rng.between(spec.min_route_km, spec.max_route_km),
               std::nullopt, 0};
    if (two_day) {
      head.successor = r + 1;
      in.routes.push_back(head);
      in.routes.push_back(Route{r + 1,
                                rng.between(spec.min_route_km, spec.max_route_km),
                                std::nullopt, 1});
      tasks.push_back({r - 1, r});
      r += 2;
    } else {
      in.routes.push_back(head);
      tasks.push_back({r - 1, r - 1});
      r += 1;
    }
  }

  Km route_total = 0;
  for (const Route& r : in.routes) route_total += r.mileage_km;
  for (int m = 1; m <= spec.trains; ++m) {
    Train t;
    t.id = m;
    t.name = "EMU" + std::to_string(m);
    t.begin_day = 1;
    t.end_day = spec.horizon_days;
    t.maintenance_cycle_km = rng.between(spec.min_cycle_km, spec.max_cycle_km);
    const double fraction =
        spec.min_initial_fraction +
        rng.unit() * (spec.max_initial_fraction - spec.min_initial_fraction);
    t.initial_mileage_km = std::clamp<Km>(
        static_cast<Km>(std::floor(fraction * t.maintenance_cycle_km)), 0,
        t.maintenance_cycle_km);
    if (spec.packets > 0 && rng.chance(spec.designated_fraction))
      t.next_packet = static_cast<int>(rng.between(1, spec.packets));
    if (spec.mileage_range) {
      const double expected = spec.trains == 0
                                  ? 0.0
                                  : static_cast<double>(route_total) *
                                        spec.horizon_days / spec.trains;
      t.min_mileage_km = static_cast<Km>(std::floor(0.25 * expected));
      t.max_mileage_km =
          static_cast<Km>(std::ceil(2.0 * expected)) + spec.max_route_km;
    }
    in.trains.push_back(std::move(t));
  }

  in.eligibility.assign(spec.trains, std::vector<bool>(in.routes.size(), false));
  for (const auto& [first, last] : tasks) {
    std::vector<int> eligible;
    for (int m = 0; m < spec.trains; ++m)
      if (rng.chance(spec.eligibility_density)) eligible.push_back(m);
    if (eligible.empty() && spec.trains > 0)
      eligible.push_back(static_cast<int>(rng.between(0, spec.trains - 1)));
    for (int m : eligible)
      for (int j = first; j <= last; ++j) in.eligibility[m][j] = true;
  }

  const int demand = peak_demand(in);
  if (spec.trains < demand)
    throw GenerationError("cannot cover routes: " + std::to_string(demand) +
                          " route records run on one day but only " +
                          std::to_string(spec.trains) + " trains exist");
  if (auto defects = validate_instance(in); !defects.empty())
    throw GenerationError("generated instance is invalid: " +
                          defects.front().to_string());
  return in;
}

GeneratorSpec parse_generator_spec(const std::string& text) {
  using namespace detail;
  const Json doc = parse_json(text);
  ObjectReader r(doc, "");
  GeneratorSpec s;
  auto int_field = [&](const char* key, int& out) {
    if (r.has(key)) out = static_cast<int>(r.integer(key, kIntMin, kIntMax));
  };
  auto km_field = [&](const char* key, Km& out) {
    if (r.has(key)) out = r.integer(key, kKmMin, kKmMax);
  };
  auto real_field = [&](const char* key, double& out) {
    if (r.has(key)) out = r.number(key);
  };
  int_field("trains", s.trains);
  int_field("routes", s.routes);
  int_field("packets", s.packets);
  int_field("horizon_days", s.horizon_days);
  km_field("min_route_km", s.min_route_km);
  km_field("max_route_km", s.max_route_km);
  real_field("two_day_fraction", s.two_day_fraction);
  km_field("min_cycle_km", s.min_cycle_km);
  km_field("max_cycle_km", s.max_cycle_km);
  real_field("min_initial_fraction", s.min_initial_fraction);
  real_field("max_initial_fraction", s.max_initial_fraction);
  int_field("depot_capacity", s.depot_capacity);
  int_field("min_packet_days", s.min_packet_days);
  int_field("max_packet_days", s.max_packet_days);
  real_field("eligibility_density", s.eligibility_density);
  real_field("designated_fraction", s.designated_fraction);
  if (r.has("mileage_range")) s.mileage_range = r.boolean("mileage_range");
  if (r.has("seed"))
    s.seed = static_cast<std::uint64_t>(r.integer("seed", 0, kKmMax));
  r.finish();
  return s;
}

std::string serialize_generator_spec(const GeneratorSpec& s) {
  nlohmann::ordered_json doc;
  doc["trains"] = s.trains;
  doc["routes"] = s.routes;
  doc["packets"] = s.packets;
  doc["horizon_days"] = s.horizon_days;
  doc["min_route_km"] = s.min_route_km;
  doc["max_route_km"] = s.max_route_km;
  doc["two_day_fraction"] = s.two_day_fraction;
  doc["min_cycle_km"] = s.min_cycle_km;
  doc["max_cycle_km"] = s.max_cycle_km;
  doc["min_initial_fraction"] = s.min_initial_fraction;
  doc["max_initial_fraction"] = s.max_initial_fraction;
  doc["depot_capacity"] = s.depot_capacity;
  doc["min_packet_days"] = s.min_packet_days;
  doc["max_packet_days"] = s.max_packet_days;
  doc["eligibility_density"] = s.eligibility_density;
  doc["designated_fraction"] = s.designated_fraction;
  doc["mileage_range"] = s.mileage_range;
  doc["seed"] = s.seed;
  return doc.dump(2) + "\n";
}

}  // namespace railsched
