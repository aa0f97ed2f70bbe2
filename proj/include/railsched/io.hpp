#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "railsched/heuristic.hpp"
#include "railsched/instance.hpp"
#include "railsched/semantics.hpp"

namespace railsched {

// Document format version written and accepted by this library.
inline constexpr int kFormatVersion = 1;

struct ParsedInstance {
  std::optional<Instance> instance;  // set when there are no defects
  std::vector<Defect> defects;

  bool ok() const { return instance.has_value(); }
};

// Strict JSON parse ({"version": 1, "kind": "instance", ...}) followed by
// validate_instance. Throws ParseError for malformed documents: syntax
// errors carry "line L, column C", field errors the field path.
ParsedInstance parse_instance(const std::string& text);

// Like parse_instance but throws InvalidInstanceError on defects.
Instance load_instance(const std::string& text);

// Deterministic, human-diffable JSON; optional fields are omitted when unset.
std::string serialize_instance(const Instance& instance);

// {"version": 1, "kind": "schedule", "plans": [{"train": 1, "days": [1, 0,
// null], "maintenance": [{"day": 3, "packet": 1}]}]}; null marks a day with
// no assignment and 0 the spare route.
Schedule parse_schedule(const std::string& text);
std::string serialize_schedule(const Schedule& schedule);

// Annealing parameters as a JSON object with the SearchParams field names;
// missing fields keep their defaults. Throws ParseError.
SearchParams parse_search_params(const std::string& text);

// Throw IoError naming the path.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace railsched
