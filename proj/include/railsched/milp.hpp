#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "railsched/instance.hpp"
#include "railsched/semantics.hpp"

namespace railsched {

enum class VarKind { kBinary, kContinuous };

struct Variable {
  std::string name;
  VarKind kind = VarKind::kBinary;
  Km lower = 0;
  Km upper = 1;
};

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

// Row families. C-tags mirror the feasibility checker; kMileage holds the
// big-M rows pinning l to the cumulative-mileage recurrence and kLoss the
// rows pinning w to l(t-1) on the maintenance-start day.
enum class RowGroup { kC2, kC3, kC4, kC5, kC6, kC7, kC13, kDomain, kMileage, kLoss };

struct Term {
  std::size_t var = 0;
  Km coef = 0;
};

struct Row {
  std::string name;
  RowGroup group = RowGroup::kC2;
  std::vector<Term> terms;
  Sense sense = Sense::kEqual;
  Km rhs = 0;
};

// Mixed-integer linear model of one instance. All coefficients, bounds and
// right-hand sides are integers.
struct LinearModel {
  std::vector<Variable> variables;  // ordered by train, route/packet, day
  std::vector<Row> rows;
  std::vector<Term> objective;      // minimized

  std::optional<std::size_t> find(const std::string& name) const;
  void index_names();

 private:
  std::unordered_map<std::string, std::size_t> by_name_;
};

// Variable names: x_m<train>_r<route>_t<day>, y_m<train>_p<packet>_t<day>,
// l_m<train>_t<day>, w_m<train>_t<day>. Negative ids are written as n<abs>.
std::string x_name(TrainId train, RouteId route, Day day);
std::string y_name(TrainId train, PacketId packet, Day day);
std::string l_name(TrainId train, Day day);
std::string w_name(TrainId train, Day day);

// Big-M used for train rows: maintenance cycle plus the longest route.
Km big_m(const Instance& instance, const Train& train);

// Throws InvalidInstanceError for an invalid instance.
LinearModel linearize(const Instance& instance);

// CPLEX LP text. Byte-deterministic for a given model.
std::string write_lp(const LinearModel& model);
// Throws IoError naming the path when it cannot be written.
void write_lp(const LinearModel& model, const std::filesystem::path& path);

// Rounds binaries within 1e-6 of 0 or 1 and rebuilds the schedule. Throws
// DecodeError listing missing, unknown or non-binary variables, or trains
// with more than one assignment on a day.
Schedule decode_assignment(const Instance& instance,
                           const std::map<std::string, double>& assignment);

// The 0/1 values of x and y for a schedule, plus the values of l and w the
// model rows imply for them.
std::map<std::string, double> encode_schedule(const Schedule& schedule,
                                              const Instance& instance);

struct ExternalSolutionCheck {
  Schedule schedule;
  FeasibilityReport report;
  Km objective = 0;     // mileage loss of the decoded schedule
  Km lp_objective = 0;  // model objective, using w values when all present
  bool objectives_match = false;
};

ExternalSolutionCheck verify_external_solution(
    const Instance& instance, const std::map<std::string, double>& assignment);

// Reads a variable assignment: either a JSON object {"name": value, ...} or
// "name value" lines as written by common solvers ('#' starts a comment).
// Throws ParseError.
std::map<std::string, double> parse_assignment(const std::string& text);

}  // namespace railsched
