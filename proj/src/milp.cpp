#include "railsched/milp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace railsched {

std::optional<std::size_t> LinearModel::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

void LinearModel::index_names() {
  by_name_.clear();
  for (std::size_t v = 0; v < variables.size(); ++v)
    by_name_.emplace(variables[v].name, v);
}

namespace {

std::string id_text(int id) {
  return id < 0 ? "n" + std::to_string(-static_cast<long long>(id))
                : std::to_string(id);
}

}  // namespace

std::string x_name(TrainId train, RouteId route, Day day) {
  return "x_m" + id_text(train) + "_r" + id_text(route) + "_t" + id_text(day);
}

std::string y_name(TrainId train, PacketId packet, Day day) {
  return "y_m" + id_text(train) + "_p" + id_text(packet) + "_t" + id_text(day);
}

std::string l_name(TrainId train, Day day) {
  return "l_m" + id_text(train) + "_t" + id_text(day);
}

std::string w_name(TrainId train, Day day) {
  return "w_m" + id_text(train) + "_t" + id_text(day);
}

Km big_m(const Instance& instance, const Train& train) {
  Km longest = 0;
  for (const Route& r : instance.routes) longest = std::max(longest, r.mileage_km);
  return train.maintenance_cycle_km + longest;
}

namespace {

// Variable positions of one instance's model, shared by linearize and the
// assignment codecs.
struct Layout {
  // x[i][slot][k]: slot 0 is spare, slot j+1 is routes[j]; k = day - begin.
  std::vector<std::vector<std::vector<std::size_t>>> x;
  std::vector<std::vector<std::vector<std::size_t>>> y;  // y[i][packet pos][k]
  std::vector<std::vector<std::size_t>> l;
  std::vector<std::vector<std::size_t>> w;
};

class Builder {
 public:
  explicit Builder(const Instance& instance)
      : in_(instance), index_(instance) {}

  LinearModel build() {
    declare_variables();
    coverage_rows();
    capacity_rows();
    mileage_limit_rows();
    single_maintenance_rows();
    chain_rows();
    mileage_range_rows();
    domain_rows();
    recurrence_rows();
    loss_rows();
    objective();
    model_.index_names();
    return std::move(model_);
  }

  const Layout& layout() const { return layout_; }

  LinearModel& model() { return model_; }

 private:
  std::size_t add_var(std::string name, VarKind kind, Km lo, Km hi) {
    model_.variables.push_back(Variable{std::move(name), kind, lo, hi});
    return model_.variables.size() - 1;
  }

  void add_row(std::string name, RowGroup group, std::vector<Term> terms,
               Sense sense, Km rhs) {
    model_.rows.push_back(
        Row{std::move(name), group, std::move(terms), sense, rhs});
  }

  std::optional<std::size_t> next_pos(std::size_t i) const {
    const Train& t = in_.trains[i];
    if (!t.next_packet) return std::nullopt;
    for (std::size_t p = 0; p < in_.packets.size(); ++p)
      if (in_.packets[p].id == *t.next_packet) return p;
    return std::nullopt;
  }

  void declare_variables() {
    const std::size_t n = in_.trains.size();
    layout_.x.resize(n);
    layout_.y.resize(n);
    layout_.l.resize(n);
    layout_.w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Train& t = in_.trains[i];
      const int width = t.window_length();
      layout_.x[i].resize(in_.routes.size() + 1);
      for (std::size_t slot = 0; slot <= in_.routes.size(); ++slot) {
        const RouteId r = slot == 0 ? kSpareRoute : in_.routes[slot - 1].id;
        for (int k = 0; k < width; ++k)
          layout_.x[i][slot].push_back(
              add_var(x_name(t.id, r, t.begin_day + k), VarKind::kBinary, 0, 1));
      }
      layout_.y[i].resize(in_.packets.size());
      for (std::size_t p = 0; p < in_.packets.size(); ++p)
        for (int k = 0; k < width; ++k)
          layout_.y[i][p].push_back(add_var(
              y_name(t.id, in_.packets[p].id, t.begin_day + k),
              VarKind::kBinary, 0, 1));
      for (int k = 0; k < width; ++k)
        layout_.l[i].push_back(add_var(l_name(t.id, t.begin_day + k),
                                       VarKind::kContinuous, 0,
                                       t.maintenance_cycle_km));
      for (int k = 0; k < width; ++k)
        layout_.w[i].push_back(add_var(w_name(t.id, t.begin_day + k),
                                       VarKind::kContinuous, 0,
                                       t.maintenance_cycle_km));
    }
  }

  // Designated-packet starts whose window covers `day`.
  std::vector<Term> load_terms(std::size_t i, Day day) const {
    std::vector<Term> terms;
    const Train& t = in_.trains[i];
    auto p = next_pos(i);
    if (!p || !t.in_window(day)) return terms;
    const int duration = in_.packets[*p].duration_days;
    for (Day tau = std::max(t.begin_day, day - duration + 1); tau <= day; ++tau)
      terms.push_back({layout_.y[i][*p][tau - t.begin_day], 1});
    return terms;
  }

  void coverage_rows() {
    for (std::size_t i = 0; i < in_.trains.size(); ++i) {
      const Train& t = in_.trains[i];
      for (Day day = t.begin_day; day <= t.end_day; ++day) {
        const int k = day - t.begin_day;
        std::vector<Term> terms{{layout_.x[i][0][k], 1}};
        for (std::size_t j = 0; j < in_.routes.size(); ++j)
          if (in_.eligibility[i][j]) terms.push_back({layout_.x[i][j + 1][k], 1});
        for (Term term : load_terms(i, day)) terms.push_back(term);
        add_row("C2_m" + id_text(t.id) + "_t" + id_text(day), RowGroup::kC2,
                std::move(terms), Sense::kEqual, 1);
      }
    }
    for (RouteId head : index_.heads()) {
      const std::size_t j = *index_.route_pos(head);
      for (Day day = 1; day <= in_.horizon_days; ++day) {
        if (!index_.head_required(head, day)) continue;
        std::vector<Term> terms;
        for (std::size_t i = 0; i < in_.trains.size(); ++i) {
          const Train& t = in_.trains[i];
          if (t.in_window(day) && in_.eligibility[i][j])
            terms.push_back({layout_.x[i][j + 1][day - t.begin_day], 1});
        }
        add_row("C3_r" + id_text(head) + "_t" + id_text(day), RowGroup::kC3,
                std::move(terms), Sense::kEqual, 1);
      }
    }
  }

  void capacity_rows() {
    for (Day day = 1; day <= in_.horizon_days; ++day) {
      std::vector<Term> terms;
      for (std::size_t i = 0; i < in_.trains.size(); ++i)
        for (Term term : load_terms(i, day)) terms.push_back(term);
      if (terms.empty()) continue;
      add_row("C4_t" + id_text(day), RowGroup::kC4, std::move(terms),
              Sense::kLessEqual, in_.depot_capacity);
    }
  }

  void mileage_limit_rows() {
    for (std::size_t i = 0; i < in_.trains.size(); ++i) {
      const Train& t = in_.trains[i];
      for (Day day = t.begin_day; day <= t.end_day; ++day)
        add_row("C5_m" + id_text(t.id) + "_t" + id_text(day), RowGroup::kC5,
                {{layout_.l[i][day - t.begin_day], 1}}, Sense::kLessEqual,
                t.maintenance_cycle_km);
    }
  }

  void single_maintenance_rows() {
    for (std::size_t i = 0; i < in_.trains.size(); ++i) {
      auto p = next_pos(i);
      if (!p) continue;
      std::vector<Term> terms;
      for (std::size_t v : layout_.y[i][*p]) terms.push_back({v, 1});
      add_row("C6_m" + id_text(in_.trains[i].id), RowGroup::kC6,
              std::move(terms), Sense::kLessEqual, 1);
    }
  }

  void chain_rows() {
    for (std::size_t i = 0; i < in_.trains.size(); ++i) {
      const Train& t = in_.trains[i];
      const std::string m = id_text(t.id);
      for (std::size_t j = 0; j < in_.routes.size(); ++j) {
        const Route& r = in_.routes[j];
        if (!r.successor) continue;
        const std::size_t s = *index_.route_pos(*r.successor);
        for (Day day = t.begin_day; day <= t.end_day; ++day) {
          const int k = day - t.begin_day;
          std::vector<Term> terms{{layout_.x[i][j + 1][k], 1}};
          if (day < t.end_day) terms.push_back({layout_.x[i][s + 1][k + 1], -1});
          add_row("C7_m" + m + "_r" + id_text(r.id) + "_t" + id_text(day),
                  RowGroup::kC7, std::move(terms), Sense::kEqual, 0);
        }
      }
      for (std::size_t j = 0; j < in_.routes.size(); ++j) {
        if (!index_.predecessor(in_.routes[j].id)) continue;
        add_row("C7b_m" + m + "_r" + id_text(in_.routes[j].id) + "_t" +
                    id_text(t.begin_day),
                RowGroup::kC7, {{layout_.x[i][j + 1][0], 1}}, Sense::kEqual, 0);
      }
    }
  }

  std::vector<Term> running_terms(std::size_t i, int k) const {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < in_.routes.size(); ++j)
      if (in_.eligibility[i][j] && in_.routes[j].mileage_km != 0)
        terms.push_back({layout_.x[i][j + 1][k], in_.routes[j].mileage_km});
    return terms;
  }

  void mileage_range_rows() {
    if (!in_.mileage_range_enabled) return;
    for (std::size_t i = 0; i < in_.trains.size(); ++i) {
      const Train& t = in_.trains[i];
      if (!t.min_mileage_km && !t.max_mileage_km) continue;
      std::vector<Term> terms;
      for (int k = 0; k < t.window_length(); ++k)
        for (Term term : running_terms(i, k)) terms.push_back(term);
      if (t.min_mileage_km)
        add_row("C13min_m" + id_text(t.id), RowGroup::kC13, terms,
                Sense::kGreaterEqual, *t.min_mileage_km);
      if (t.max_mileage_km)
        add_row("C13max_m" + id_text(t.id), RowGroup::kC13, terms,
                Sense::kLessEqual, *t.max_mileage_km);
    }
  }

  void domain_rows() {
    auto fix_zero = [&](std::size_t v) {
      add_row("DOM_" + model_.variables[v].name, RowGroup::kDomain, {{v, 1}},
              Sense::kEqual, 0);
    };
    for (std::size_t i = 0; i < in_.trains.size(); ++i) {
      const Train& t = in_.trains[i];
      for (std::size_t j = 0; j < in_.routes.size(); ++j)
        if (!in_.eligibility[i][j])
          for (std::size_t v : layout_.x[i][j + 1]) fix_zero(v);
      auto next = next_pos(i);
      for (std::size_t p = 0; p < in_.packets.size(); ++p)
        for (int k = 0; k < t.window_length(); ++k) {
          const bool overruns =
              t.begin_day + k + in_.packets[p].duration_days - 1 > t.end_day;
          if (!next || p != *next || overruns) fix_zero(layout_.y[i][p][k]);
        }
    }
  }

  void recurrence_rows() {
    for (std::size_t i = 0; i < in_.trains.size(); ++i) {
      const Train& t = in_.trains[i];
      const Km M = big_m(in_, t);
      for (int k = 0; k < t.window_length(); ++k) {
        const std::string suffix =
            "_m" + id_text(t.id) + "_t" + id_text(t.begin_day + k);
        std::vector<Term> base{{layout_.l[i][k], 1}};
        Km rhs = 0;
        if (k == 0)
          rhs = t.initial_mileage_km;
        else
          base.push_back({layout_.l[i][k - 1], -1});
        for (Term term : running_terms(i, k))
          base.push_back({term.var, -term.coef});
        std::vector<Term> resets;
        for (std::size_t p = 0; p < in_.packets.size(); ++p)
          resets.push_back({layout_.y[i][p][k], M});

        // l >= prev + run - M * sum(y)
        std::vector<Term> lo = base;
        lo.insert(lo.end(), resets.begin(), resets.end());
        add_row("MIlo" + suffix, RowGroup::kMileage, std::move(lo),
                Sense::kGreaterEqual, rhs);
        // l <= prev + run + M * sum(y)
        std::vector<Term> hi = base;
        for (Term term : resets) hi.push_back({term.var, -term.coef});
        add_row("MIhi" + suffix, RowGroup::kMileage, std::move(hi),
                Sense::kLessEqual, rhs);
        // l <= M * (1 - sum(y))
        std::vector<Term> reset{{layout_.l[i][k], 1}};
        reset.insert(reset.end(), resets.begin(), resets.end());
        add_row("MIrs" + suffix, RowGroup::kMileage, std::move(reset),
                Sense::kLessEqual, M);
      }
    }
  }

  void loss_rows() {
    for (std::size_t i = 0; i < in_.trains.size(); ++i) {
      const Train& t = in_.trains[i];
      const Km M = big_m(in_, t);
      auto p = next_pos(i);
      for (int k = 0; k < t.window_length(); ++k) {
        const std::string suffix =
            "_m" + id_text(t.id) + "_t" + id_text(t.begin_day + k);
        const std::size_t w = layout_.w[i][k];
        std::vector<Term> start;
        if (p) start.push_back({layout_.y[i][*p][k], M});

        // w <= M * y
        std::vector<Term> ub{{w, 1}};
        for (Term term : start) ub.push_back({term.var, -term.coef});
        add_row("LSub" + suffix, RowGroup::kLoss, std::move(ub),
                Sense::kLessEqual, 0);
        // w <= l(t-1)
        std::vector<Term> prev{{w, 1}};
        Km rhs = 0;
        if (k == 0)
          rhs = t.initial_mileage_km;
        else
          prev.push_back({layout_.l[i][k - 1], -1});
        add_row("LSprev" + suffix, RowGroup::kLoss, prev, Sense::kLessEqual,
                rhs);
        // w >= l(t-1) - M * (1 - y)
        std::vector<Term> lo = prev;
        for (Term term : start) lo.push_back({term.var, -term.coef});
        add_row("LSlo" + suffix, RowGroup::kLoss, std::move(lo),
                Sense::kGreaterEqual, rhs - M);
      }
    }
  }

  void objective() {
    for (std::size_t i = 0; i < in_.trains.size(); ++i) {
      const Train& t = in_.trains[i];
      if (auto p = next_pos(i))
        for (std::size_t v : layout_.y[i][*p])
          model_.objective.push_back({v, t.maintenance_cycle_km});
      for (std::size_t v : layout_.w[i]) model_.objective.push_back({v, -1});
    }
  }

  const Instance& in_;
  InstanceIndex index_;
  LinearModel model_;
  Layout layout_;
};

class LpWriter {
 public:
  explicit LpWriter(const LinearModel& model) : model_(model) {}

  std::string write() {
    out_ << "\\ railsched linearized train assignment and maintenance model\n";
    out_ << "Minimize\n";
    expression(" obj:", model_.objective);
    out_ << "\n";
    out_ << "Subject To\n";
    for (const Row& row : model_.rows) {
      if (row.terms.empty() && model_.variables.empty()) {
        out_ << "\\ " << row.name << ": empty row\n";
        continue;
      }
      expression(" " + row.name + ":", row.terms);
      const char* sense = row.sense == Sense::kEqual       ? " ="
                          : row.sense == Sense::kLessEqual ? " <="
                                                           : " >=";
      token(std::string(sense) + " " + std::to_string(row.rhs));
      out_ << "\n";
    }
    out_ << "Bounds\n";
    for (const Variable& v : model_.variables)
      if (v.kind == VarKind::kContinuous)
        out_ << " " << v.lower << " <= " << v.name << " <= " << v.upper
             << "\n";
    out_ << "Binaries\n";
    for (const Variable& v : model_.variables)
      if (v.kind == VarKind::kBinary) out_ << " " << v.name << "\n";
    out_ << "End\n";
    return out_.str();
  }

 private:
  static constexpr std::size_t kWrap = 78;

  void token(const std::string& text) {
    if (column_ + text.size() > kWrap && column_ > 1) {
      out_ << "\n ";
      column_ = 1;
    }
    out_ << text;
    column_ += text.size();
  }

  void expression(const std::string& label, const std::vector<Term>& terms) {
    out_ << label;
    column_ = label.size();
    if (terms.empty()) {
      if (!model_.variables.empty())
        token(" 0 " + model_.variables.front().name);
      return;
    }
    bool first = true;
    for (const Term& term : terms) {
      std::string text = " ";
      const Km magnitude = term.coef < 0 ? -term.coef : term.coef;
      if (term.coef < 0)
        text += "- ";
      else if (!first)
        text += "+ ";
      if (magnitude != 1) text += std::to_string(magnitude) + " ";
      text += model_.variables[term.var].name;
      token(text);
      first = false;
    }
  }

  const LinearModel& model_;
  std::ostringstream out_;
  std::size_t column_ = 0;
};

Km rounded(double v) { return static_cast<Km>(std::llround(v)); }

}  // namespace

LinearModel linearize(const Instance& instance) {
  require_valid(instance);
  return Builder(instance).build();
}

std::string write_lp(const LinearModel& model) {
  return LpWriter(model).write();
}

void write_lp(const LinearModel& model, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << write_lp(model);
  file.flush();
  if (!file) throw IoError("failed writing " + path.string());
}

namespace {

struct Decoded {
  Schedule schedule;
  std::vector<Km> values;  // rounded value per variable; -1 when absent
};

Decoded decode(const Instance& instance, const LinearModel& model,
               const Layout& layout,
               const std::map<std::string, double>& assignment) {
  constexpr double kTolerance = 1e-6;
  std::vector<std::string> offenders;
  std::vector<Km> values(model.variables.size(), -1);
  std::set<std::string> known;
  for (std::size_t v = 0; v < model.variables.size(); ++v) {
    const Variable& var = model.variables[v];
    known.insert(var.name);
    auto it = assignment.find(var.name);
    if (it == assignment.end()) {
      if (var.kind == VarKind::kBinary) offenders.push_back(var.name + " (missing)");
      continue;
    }
    if (var.kind == VarKind::kBinary) {
      if (std::abs(it->second) <= kTolerance)
        values[v] = 0;
      else if (std::abs(it->second - 1.0) <= kTolerance)
        values[v] = 1;
      else
        offenders.push_back(var.name + " (non-binary value " +
                            std::to_string(it->second) + ")");
    } else {
      values[v] = rounded(it->second);
    }
  }
  for (const auto& [name, value] : assignment)
    if (!known.count(name)) offenders.push_back(name + " (unknown variable)");
  if (!offenders.empty())
    throw DecodeError("assignment cannot be decoded", std::move(offenders));

  Decoded out;
  for (std::size_t i = 0; i < instance.trains.size(); ++i) {
    const Train& t = instance.trains[i];
    TrainPlan plan;
    for (int k = 0; k < t.window_length(); ++k) {
      std::vector<RouteId> chosen;
      for (std::size_t slot = 0; slot < layout.x[i].size(); ++slot)
        if (values[layout.x[i][slot][k]] == 1)
          chosen.push_back(slot == 0 ? kSpareRoute
                                     : instance.routes[slot - 1].id);
      if (chosen.size() > 1) {
        for (RouteId r : chosen)
          offenders.push_back(x_name(t.id, r, t.begin_day + k) +
                              " (more than one assignment on the day)");
        continue;
      }
      plan.days.push_back(chosen.empty() ? std::nullopt
                                         : std::optional<RouteId>(chosen[0]));
    }
    for (int k = 0; k < t.window_length(); ++k)
      for (std::size_t p = 0; p < instance.packets.size(); ++p)
        if (values[layout.y[i][p][k]] == 1)
          plan.maintenance.push_back(
              {t.begin_day + k, instance.packets[p].id});
    out.schedule.plans.emplace(t.id, std::move(plan));
  }
  if (!offenders.empty())
    throw DecodeError("assignment cannot be decoded", std::move(offenders));
  out.values = std::move(values);
  return out;
}

}  // namespace

Schedule decode_assignment(const Instance& instance,
                           const std::map<std::string, double>& assignment) {
  require_valid(instance);
  Builder builder(instance);
  LinearModel model = builder.build();
  return decode(instance, model, builder.layout(), assignment).schedule;
}

std::map<std::string, double> encode_schedule(const Schedule& schedule,
                                              const Instance& instance) {
  FeasibilityChecker checker(instance);
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < instance.trains.size(); ++i) {
    const Train& t = instance.trains[i];
    auto it = schedule.plans.find(t.id);
    if (it == schedule.plans.end() ||
        static_cast<int>(it->second.days.size()) != t.window_length())
      throw DomainError("schedule does not cover train " +
                        std::to_string(t.id));
    const TrainPlan& plan = it->second;
    for (int k = 0; k < t.window_length(); ++k) {
      const Day day = t.begin_day + k;
      out[x_name(t.id, kSpareRoute, day)] = plan.days[k] == kSpareRoute;
      for (const Route& r : instance.routes)
        out[x_name(t.id, r.id, day)] = plan.days[k] == r.id;
      for (const MaintenancePacket& p : instance.packets) {
        const bool started = std::any_of(
            plan.maintenance.begin(), plan.maintenance.end(),
            [&](const MaintenanceStart& s) {
              return s.day == day && s.packet == p.id;
            });
        out[y_name(t.id, p.id, day)] = started;
      }
    }
    const std::vector<Km> l = checker.trajectory(i, plan);
    for (int k = 0; k < t.window_length(); ++k) {
      const Day day = t.begin_day + k;
      out[l_name(t.id, day)] = static_cast<double>(l[k]);
      const Km prev = k == 0 ? t.initial_mileage_km : l[k - 1];
      const bool started =
          t.next_packet &&
          std::any_of(plan.maintenance.begin(), plan.maintenance.end(),
                      [&](const MaintenanceStart& s) {
                        return s.day == day && s.packet == *t.next_packet;
                      });
      out[w_name(t.id, day)] = started ? static_cast<double>(prev) : 0.0;
    }
  }
  return out;
}

ExternalSolutionCheck verify_external_solution(
    const Instance& instance,
    const std::map<std::string, double>& assignment) {
  FeasibilityChecker checker(instance);
  Builder builder(instance);
  LinearModel model = builder.build();
  Decoded decoded = decode(instance, model, builder.layout(), assignment);

  ExternalSolutionCheck out;
  out.report = checker.check(decoded.schedule);
  out.objective = checker.objective(decoded.schedule);

  const Layout& layout = builder.layout();
  bool all_w = true;
  for (const auto& row : layout.w)
    for (std::size_t v : row) all_w = all_w && decoded.values[v] >= 0;
  std::vector<Km> values = decoded.values;
  if (!all_w) {
    // Fill w from the recurrence the loss rows pin it to.
    auto implied = encode_schedule(decoded.schedule, instance);
    for (const auto& row : layout.w)
      for (std::size_t v : row)
        values[v] = rounded(implied.at(model.variables[v].name));
  }
  Km lp = 0;
  for (const Term& term : model.objective) lp += term.coef * values[term.var];
  out.lp_objective = lp;
  out.objectives_match = lp == out.objective;
  out.schedule = std::move(decoded.schedule);
  return out;
}

std::map<std::string, double> parse_assignment(const std::string& text) {
  std::map<std::string, double> out;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    for (const auto& [name, value] : doc.items()) {
      if (!value.is_number())
        throw ParseError(name, "value must be a number");
      out[name] = value.get<double>();
    }
    return out;
  }
  std::istringstream in(text);
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string name, value, extra;
    if (!(fields >> name)) continue;
    if (!(fields >> value) || (fields >> extra))
      throw ParseError("line " + std::to_string(number),
                       "expected '<name> <value>'");
    try {
      std::size_t used = 0;
      out[name] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(number),
                       "invalid number '" + value + "'");
    }
  }
  return out;
}

}  // namespace railsched
