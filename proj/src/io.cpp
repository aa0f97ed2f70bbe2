#include "railsched/io.hpp"

#include <fstream>
#include <sstream>

#include "json_reader.hpp"

namespace railsched {

using detail::Json;
using detail::ObjectReader;
using detail::kIntMax;
using detail::kIntMin;
using detail::kKmMax;
using detail::kKmMin;

namespace {

using Ordered = nlohmann::ordered_json;

std::string indexed(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& array_field(ObjectReader& reader, const std::string& key) {
  const Json& v = reader.child(key);
  if (!v.is_array()) throw ParseError(reader.field_path(key), "expected an array");
  return v;
}

int to_int(std::int64_t v) { return static_cast<int>(v); }

Train read_train(const Json& value, const std::string& path) {
  ObjectReader r(value, path);
  Train t;
  t.id = to_int(r.integer("id", kIntMin, kIntMax));
  if (r.has("name")) t.name = r.string("name");
  t.begin_day = to_int(r.integer("begin_day", kIntMin, kIntMax));
  t.end_day = to_int(r.integer("end_day", kIntMin, kIntMax));
  t.maintenance_cycle_km = r.integer("maintenance_cycle_km", kKmMin, kKmMax);
  t.initial_mileage_km = r.integer("initial_mileage_km", kKmMin, kKmMax);
  if (auto v = r.optional_integer("next_packet", kIntMin, kIntMax))
    t.next_packet = to_int(*v);
  t.min_mileage_km = r.optional_integer("min_mileage_km", kKmMin, kKmMax);
  t.max_mileage_km = r.optional_integer("max_mileage_km", kKmMin, kKmMax);
  r.finish();
  return t;
}

Route read_route(const Json& value, const std::string& path) {
  ObjectReader r(value, path);
  Route route;
  route.id = to_int(r.integer("id", kIntMin, kIntMax));
  route.mileage_km = r.integer("mileage_km", kKmMin, kKmMax);
  if (auto v = r.optional_integer("successor", kIntMin, kIntMax))
    route.successor = to_int(*v);
  if (r.has("day_offset"))
    route.day_offset = to_int(r.integer("day_offset", kIntMin, kIntMax));
  r.finish();
  return route;
}

MaintenancePacket read_packet(const Json& value, const std::string& path) {
  ObjectReader r(value, path);
  MaintenancePacket p;
  p.id = to_int(r.integer("id", kIntMin, kIntMax));
  if (r.has("name")) p.name = r.string("name");
  p.duration_days = to_int(r.integer("duration_days", kIntMin, kIntMax));
  r.finish();
  return p;
}

Instance read_instance(const Json& doc) {
  ObjectReader r(doc, "");
  detail::expect_header(r, "instance");
  Instance in;
  in.horizon_days = to_int(r.integer("horizon_days", kIntMin, kIntMax));
  in.depot_capacity = to_int(r.integer("depot_capacity", kIntMin, kIntMax));
  if (r.has("mileage_range_enabled"))
    in.mileage_range_enabled = r.boolean("mileage_range_enabled");
  if (r.has("multi_day_routes"))
    in.multi_day_routes = r.boolean("multi_day_routes");

  const Json& trains = array_field(r, "trains");
  for (std::size_t i = 0; i < trains.size(); ++i)
    in.trains.push_back(read_train(trains[i], indexed("trains", i)));
  const Json& routes = array_field(r, "routes");
  for (std::size_t i = 0; i < routes.size(); ++i)
    in.routes.push_back(read_route(routes[i], indexed("routes", i)));
  const Json& packets = array_field(r, "packets");
  for (std::size_t i = 0; i < packets.size(); ++i)
    in.packets.push_back(read_packet(packets[i], indexed("packets", i)));

  const Json& rows = array_field(r, "eligibility");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string row_path = indexed("eligibility", i);
    if (!rows[i].is_array()) throw ParseError(row_path, "expected an array");
    std::vector<bool> row;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const Json& cell = rows[i][j];
      if (!cell.is_boolean())
        throw ParseError(indexed(row_path, j), "expected a boolean");
      row.push_back(cell.get<bool>());
    }
    in.eligibility.push_back(std::move(row));
  }
  r.finish();
  return in;
}

Ordered header(const char* kind) {
  Ordered doc;
  doc["version"] = kFormatVersion;
  doc["kind"] = kind;
  return doc;
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  Instance instance = read_instance(detail::parse_json(text));
  ParsedInstance out;
  out.defects = validate_instance(instance);
  if (out.defects.empty()) out.instance = std::move(instance);
  return out;
}

Instance load_instance(const std::string& text) {
  ParsedInstance parsed = parse_instance(text);
  if (!parsed.ok())
    throw InvalidInstanceError("invalid instance", describe(parsed.defects));
  return std::move(*parsed.instance);
}

std::string serialize_instance(const Instance& instance) {
  Ordered doc = header("instance");
  doc["horizon_days"] = instance.horizon_days;
  doc["depot_capacity"] = instance.depot_capacity;
  doc["mileage_range_enabled"] = instance.mileage_range_enabled;
  doc["multi_day_routes"] = instance.multi_day_routes;

  Ordered trains = Ordered::array();
  for (const Train& t : instance.trains) {
    Ordered o;
    o["id"] = t.id;
    if (!t.name.empty()) o["name"] = t.name;
    o["begin_day"] = t.begin_day;
    o["end_day"] = t.end_day;
    o["maintenance_cycle_km"] = t.maintenance_cycle_km;
    o["initial_mileage_km"] = t.initial_mileage_km;
    if (t.next_packet) o["next_packet"] = *t.next_packet;
    if (t.min_mileage_km) o["min_mileage_km"] = *t.min_mileage_km;
    if (t.max_mileage_km) o["max_mileage_km"] = *t.max_mileage_km;
    trains.push_back(std::move(o));
  }
  doc["trains"] = std::move(trains);

  Ordered routes = Ordered::array();
  for (const Route& route : instance.routes) {
    Ordered o;
    o["id"] = route.id;
    o["mileage_km"] = route.mileage_km;
    if (route.successor) o["successor"] = *route.successor;
    o["day_offset"] = route.day_offset;
    routes.push_back(std::move(o));
  }
  doc["routes"] = std::move(routes);

  Ordered packets = Ordered::array();
  for (const MaintenancePacket& p : instance.packets) {
    Ordered o;
    o["id"] = p.id;
    if (!p.name.empty()) o["name"] = p.name;
    o["duration_days"] = p.duration_days;
    packets.push_back(std::move(o));
  }
  doc["packets"] = std::move(packets);

  Ordered rows = Ordered::array();
  for (const auto& row : instance.eligibility) {
    Ordered cells = Ordered::array();
    for (bool cell : row) cells.push_back(cell);
    rows.push_back(std::move(cells));
  }
  doc["eligibility"] = std::move(rows);
  return doc.dump(2) + "\n";
}

Schedule parse_schedule(const std::string& text) {
  const Json doc = detail::parse_json(text);
  ObjectReader r(doc, "");
  detail::expect_header(r, "schedule");
  Schedule schedule;
  const Json& plans = array_field(r, "plans");
  for (std::size_t i = 0; i < plans.size(); ++i) {
    const std::string path = indexed("plans", i);
    ObjectReader pr(plans[i], path);
    const TrainId train = to_int(pr.integer("train", kIntMin, kIntMax));
    TrainPlan plan;
    const Json& days = array_field(pr, "days");
    for (std::size_t k = 0; k < days.size(); ++k) {
      if (days[k].is_null()) {
        plan.days.push_back(std::nullopt);
      } else {
        plan.days.push_back(to_int(detail::as_integer(
            days[k], indexed(path + ".days", k), kIntMin, kIntMax)));
      }
    }
    if (pr.has("maintenance")) {
      const Json& starts = array_field(pr, "maintenance");
      for (std::size_t k = 0; k < starts.size(); ++k) {
        ObjectReader sr(starts[k], indexed(path + ".maintenance", k));
        MaintenanceStart s;
        s.day = to_int(sr.integer("day", kIntMin, kIntMax));
        s.packet = to_int(sr.integer("packet", kIntMin, kIntMax));
        sr.finish();
        plan.maintenance.push_back(s);
      }
    }
    pr.finish();
    if (!schedule.plans.emplace(train, std::move(plan)).second)
      throw ParseError(path + ".train",
                       "duplicate plan for train " + std::to_string(train));
  }
  r.finish();
  return schedule;
}

std::string serialize_schedule(const Schedule& schedule) {
  Ordered doc = header("schedule");
  Ordered plans = Ordered::array();
  for (const auto& [train, plan] : schedule.plans) {
    Ordered o;
    o["train"] = train;
    Ordered days = Ordered::array();
    for (const auto& d : plan.days) days.push_back(d ? Ordered(*d) : Ordered());
    o["days"] = std::move(days);
    Ordered starts = Ordered::array();
    for (const MaintenanceStart& s : plan.maintenance)
      starts.push_back(Ordered{{"day", s.day}, {"packet", s.packet}});
    o["maintenance"] = std::move(starts);
    plans.push_back(std::move(o));
  }
  doc["plans"] = std::move(plans);
  return doc.dump(2) + "\n";
}

SearchParams parse_search_params(const std::string& text) {
  const Json doc = detail::parse_json(text);
  ObjectReader r(doc, "");
  SearchParams p;
  if (r.has("seed"))
    p.seed = static_cast<std::uint64_t>(r.integer("seed", 0, kKmMax));
  if (r.has("initial_temperature"))
    p.initial_temperature = r.number("initial_temperature");
  if (r.has("cooling_rate")) p.cooling_rate = r.number("cooling_rate");
  if (r.has("iterations_per_temperature"))
    p.iterations_per_temperature =
        to_int(r.integer("iterations_per_temperature", kIntMin, kIntMax));
  if (r.has("min_temperature")) p.min_temperature = r.number("min_temperature");
  if (r.has("weights")) {
    ObjectReader w(r.child("weights"), "weights");
    if (w.has("swap")) p.weights.swap = w.number("swap");
    if (w.has("shift")) p.weights.shift = w.number("shift");
    if (w.has("reassign")) p.weights.reassign = w.number("reassign");
    if (w.has("toggle")) p.weights.toggle = w.number("toggle");
    w.finish();
  }
  if (r.has("max_shift_days"))
    p.max_shift_days = to_int(r.integer("max_shift_days", kIntMin, kIntMax));
  if (r.has("restarts"))
    p.restarts = to_int(r.integer("restarts", kIntMin, kIntMax));
  if (r.has("workers"))
    p.workers = to_int(r.integer("workers", kIntMin, kIntMax));
  if (r.has("construction_budget"))
    p.construction_budget = static_cast<std::uint64_t>(
        r.integer("construction_budget", 0, kKmMax));
  if (r.has("sampling_attempts"))
    p.sampling_attempts =
        to_int(r.integer("sampling_attempts", kIntMin, kIntMax));
  r.finish();
  return p;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << file.rdbuf();
  if (file.bad()) throw IoError("failed reading " + path.string());
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing " + path.string());
}

}  // namespace railsched
