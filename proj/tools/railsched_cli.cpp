#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "railsched/generator.hpp"
#include "railsched/heuristic.hpp"
#include "railsched/io.hpp"
#include "railsched/milp.hpp"
#include "railsched/oracle.hpp"
#include "railsched/render.hpp"
#include "railsched/semantics.hpp"

namespace {

using namespace railsched;

enum Exit { kOk = 0, kNoSolution = 1, kInvalidInput = 2, kBudget = 3 };

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("railsched");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("RAILSCHED_LOG")) {
    const auto level = spdlog::level::from_str(env);
    if (level == spdlog::level::off && std::string(env) != "off")
      spdlog::warn("unknown RAILSCHED_LOG level '{}'", env);
    else
      spdlog::set_level(level);
  }
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
  } else {
    write_file(output, text);
    spdlog::info("wrote {}", output);
  }
}

Instance read_instance(const std::string& path) {
  spdlog::debug("reading instance {}", path);
  return load_instance(read_file(path));
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

int cmd_validate(const std::string& path) {
  ParsedInstance parsed = parse_instance(read_file(path));
  if (!parsed.ok()) {
    for (const std::string& line : describe(parsed.defects))
      std::cout << line << "\n";
    return kInvalidInput;
  }
  const Instance& in = *parsed.instance;
  std::cout << "valid: " << in.trains.size() << " trains, " << in.routes.size()
            << " routes, " << in.packets.size() << " packets, "
            << in.horizon_days << " days\n";
  return kOk;
}

int cmd_gen(const std::string& spec_path, std::optional<std::uint64_t> seed,
            const std::string& output) {
  GeneratorSpec spec = parse_generator_spec(read_file(spec_path));
  if (seed) spec.seed = *seed;
  emit(serialize_instance(generate_instance(spec)), output);
  return kOk;
}

int cmd_solve(const std::string& path, const std::string& params_path,
              std::optional<std::uint64_t> seed, std::optional<int> restarts,
              std::optional<int> workers, const std::string& output) {
  const Instance in = read_instance(path);
  SearchParams params;
  if (!params_path.empty()) params = parse_search_params(read_file(params_path));
  if (seed) params.seed = *seed;
  if (restarts) params.restarts = *restarts;
  if (workers) params.workers = *workers;
  validate(params);
  const auto start = std::chrono::steady_clock::now();
  SolveOutcome outcome = solve(in, params);
  spdlog::info("heuristic finished in {:.3f} s, {} improvements",
               seconds_since(start), outcome.trace.size());
  if (outcome.status != SolveStatus::kFeasible) {
    std::cerr << "no feasible schedule found\n";
    return kNoSolution;
  }
  std::cerr << "objective " << *outcome.objective << "\n";
  emit(serialize_schedule(*outcome.schedule), output);
  return kOk;
}

int cmd_oracle(const std::string& path, std::uint64_t budget, int workers,
               const std::string& output) {
  const Instance in = read_instance(path);
  OracleLimits limits;
  limits.budget = budget;
  limits.workers = workers;
  const auto start = std::chrono::steady_clock::now();
  OracleResult result = exhaustive_solve(in, limits);
  spdlog::info("oracle finished in {:.3f} s, {} evaluations, {} feasible",
               seconds_since(start), result.evaluations, result.num_feasible);
  if (result.status == OracleStatus::kInfeasible) {
    std::cerr << "infeasible\n";
    return kNoSolution;
  }
  std::cerr << "optimal objective " << *result.best_objective << " ("
            << result.num_feasible << " feasible schedules)\n";
  emit(serialize_schedule(*result.best_schedule), output);
  return kOk;
}

int cmd_export(const std::string& path, const std::string& output) {
  const Instance in = read_instance(path);
  const LinearModel model = linearize(in);
  spdlog::info("{} variables, {} rows", model.variables.size(),
               model.rows.size());
  emit(write_lp(model), output);
  return kOk;
}

int cmd_verify(const std::string& path, const std::string& solution) {
  const Instance in = read_instance(path);
  ExternalSolutionCheck check =
      verify_external_solution(in, parse_assignment(read_file(solution)));
  std::cout << check.report.to_string();
  std::cout << "objective " << check.objective << ", model objective "
            << check.lp_objective << "\n";
  if (!check.report.feasible()) return kNoSolution;
  if (!check.objectives_match) {
    std::cout << "objective mismatch\n";
    return kNoSolution;
  }
  return kOk;
}

int cmd_check(const std::string& path, const std::string& schedule_path) {
  const Instance in = read_instance(path);
  const Schedule schedule = parse_schedule(read_file(schedule_path));
  FeasibilityReport report = check_feasibility(schedule, in);
  std::cout << report.to_string();
  if (!report.feasible()) return kNoSolution;
  std::cout << "objective " << objective_value(schedule, in) << "\n";
  return kOk;
}

int cmd_render(const std::string& path, const std::string& schedule_path,
               const std::string& style, const std::string& output) {
  const Instance in = read_instance(path);
  const RenderStyle parsed = parse_render_style(style);
  const Schedule schedule = parse_schedule(read_file(schedule_path));
  emit(render_schedule(in, schedule, parsed), output);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Train assignment and second-level maintenance scheduling"};
  app.require_subcommand(1);

  std::string instance, output, spec, params, solution, schedule;
  std::string style = "text";
  std::optional<std::uint64_t> seed;
  std::optional<int> restarts, workers;
  std::uint64_t budget = OracleLimits{}.budget;
  int oracle_workers = 1;

  auto* validate_cmd = app.add_subcommand("validate", "Check an instance file");
  validate_cmd->add_option("instance", instance)->required();

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("spec", spec, "Generator spec (JSON)")->required();
  gen->add_option("--seed", seed, "Override the spec seed");
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  auto* solve_cmd = app.add_subcommand("solve", "Run the annealing heuristic");
  solve_cmd->add_option("instance", instance)->required();
  solve_cmd->add_option("--seed", seed);
  solve_cmd->add_option("--params", params, "Search parameters (JSON)");
  solve_cmd->add_option("--restarts", restarts);
  solve_cmd->add_option("--workers", workers);
  solve_cmd->add_option("-o,--output", output);

  auto* oracle = app.add_subcommand("oracle", "Solve exactly by enumeration");
  oracle->add_option("instance", instance)->required();
  oracle->add_option("--budget", budget, "Candidate evaluation limit");
  oracle->add_option("--workers", oracle_workers)->check(CLI::PositiveNumber);
  oracle->add_option("-o,--output", output);

  auto* export_lp = app.add_subcommand("export-lp", "Write the MILP in LP format");
  export_lp->add_option("instance", instance)->required();
  export_lp->add_option("-o,--output", output)->required();

  auto* verify = app.add_subcommand("verify", "Check an external MILP solution");
  verify->add_option("instance", instance)->required();
  verify->add_option("--solution", solution)->required();

  auto* check = app.add_subcommand("check", "Check a schedule file");
  check->add_option("instance", instance)->required();
  check->add_option("--schedule", schedule)->required();

  auto* render = app.add_subcommand("render", "Draw a schedule as a table");
  render->add_option("instance", instance)->required();
  render->add_option("--schedule", schedule)->required();
  render->add_option("--style", style)->check(CLI::IsMember({"text", "svg"}));
  render->add_option("-o,--output", output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*validate_cmd) return cmd_validate(instance);
    if (*gen) return cmd_gen(spec, seed, output);
    if (*solve_cmd)
      return cmd_solve(instance, params, seed, restarts, workers, output);
    if (*oracle) return cmd_oracle(instance, budget, oracle_workers, output);
    if (*export_lp) return cmd_export(instance, output);
    if (*verify) return cmd_verify(instance, solution);
    if (*check) return cmd_check(instance, schedule);
    if (*render) return cmd_render(instance, schedule, style, output);
  } catch (const InvalidInstanceError& e) {
    std::cerr << e.what() << "\n";
    for (const std::string& d : e.defects()) std::cerr << "  " << d << "\n";
    return kInvalidInput;
  } catch (const InfeasibleScheduleError& e) {
    std::cerr << "schedule is infeasible\n" << e.report().to_string();
    return kNoSolution;
  } catch (const BudgetExceededError& e) {
    std::cerr << e.what() << "\n";
    return kBudget;
  } catch (const DecodeError& e) {
    std::cerr << e.what() << "\n";
    for (const std::string& v : e.offenders()) std::cerr << "  " << v << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}
