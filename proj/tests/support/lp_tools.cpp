#include "lp_tools.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace railsched::testing {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (auto c = line.find('\\'); c != std::string::npos) line.erase(c);
    std::istringstream words(line);
    std::string w;
    while (words >> w) tokens.push_back(w);
  }
  return tokens;
}

bool is_section(const std::string& w) {
  static const std::set<std::string> names{"Minimize", "Maximize", "Subject",
                                           "Bounds", "Binaries", "End"};
  return names.count(w) > 0;
}

bool is_sense(const std::string& w) {
  return w == "<=" || w == ">=" || w == "=";
}

bool is_number(const std::string& w) {
  if (w.empty()) return false;
  std::size_t i = (w[0] == '-' || w[0] == '+') ? 1 : 0;
  if (i == w.size()) return false;
  for (; i < w.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(w[i]))) return false;
  return true;
}

// Parses "[label:] [+|-] [coef] var ..." up to a sense token or section.
std::vector<std::pair<std::string, std::int64_t>> read_expression(
    const std::vector<std::string>& t, std::size_t& i) {
  std::vector<std::pair<std::string, std::int64_t>> terms;
  std::int64_t sign = 1;
  std::optional<std::int64_t> coef;
  for (; i < t.size() && !is_sense(t[i]) && !is_section(t[i]); ++i) {
    const std::string& w = t[i];
    if (w == "+") {
      sign = 1;
    } else if (w == "-") {
      sign = -1;
    } else if (is_number(w)) {
      coef = std::stoll(w);
    } else {
      terms.push_back({w, sign * coef.value_or(1)});
      sign = 1;
      coef.reset();
    }
  }
  return terms;
}

}  // namespace

LpProgram read_lp(const std::string& text) {
  const std::vector<std::string> t = tokenize(text);
  LpProgram lp;
  std::size_t i = 0;
  auto expect = [&](const std::string& w) {
    if (i >= t.size() || t[i] != w)
      throw std::runtime_error("LP: expected '" + w + "'");
    ++i;
  };
  if (i < t.size() && t[i] == "Maximize") {
    lp.minimize = false;
    ++i;
  } else {
    expect("Minimize");
  }
  if (i < t.size() && t[i].back() == ':') ++i;
  lp.objective = read_expression(t, i);
  expect("Subject");
  expect("To");
  while (i < t.size() && !is_section(t[i])) {
    LpRow row;
    if (t[i].back() != ':') throw std::runtime_error("LP: unnamed row");
    row.name = t[i].substr(0, t[i].size() - 1);
    ++i;
    row.terms = read_expression(t, i);
    if (i >= t.size() || !is_sense(t[i]))
      throw std::runtime_error("LP: row " + row.name + " has no sense");
    row.sense = t[i++];
    if (i >= t.size() || !is_number(t[i]))
      throw std::runtime_error("LP: row " + row.name + " has no rhs");
    row.rhs = std::stoll(t[i++]);
    lp.rows.push_back(std::move(row));
  }
  if (i < t.size() && t[i] == "Bounds") {
    ++i;
    while (i + 4 < t.size() && !is_section(t[i])) {
      if (t[i + 1] != "<=" || t[i + 3] != "<=")
        throw std::runtime_error("LP: unsupported bound near " + t[i]);
      lp.bounds[t[i + 2]] = {std::stoll(t[i]), std::stoll(t[i + 4])};
      i += 5;
    }
  }
  if (i < t.size() && t[i] == "Binaries") {
    ++i;
    while (i < t.size() && !is_section(t[i])) lp.binaries.push_back(t[i++]);
  }
  expect("End");
  return lp;
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct Coef {
  int var;  // binary index when >= 0, continuous index -1 - var otherwise
  std::int64_t coef;
};

struct CompiledRow {
  std::vector<Coef> binaries;
  std::vector<Coef> continuous;
  int sense;  // -1 for <=, +1 for >=, 0 for =
  std::int64_t rhs;
};

class Enumerator {
 public:
  Enumerator(const LpProgram& lp,
             const std::function<void(const LpPoint&)>& visit)
      : lp_(lp), visit_(visit) {
    for (std::size_t b = 0; b < lp.binaries.size(); ++b)
      binary_[lp.binaries[b]] = static_cast<int>(b);
    for (const auto& [name, range] : lp.bounds) {
      continuous_[name] = static_cast<int>(cont_names_.size());
      cont_names_.push_back(name);
      cont_bounds_.push_back(range);
    }
    for (const LpRow& row : lp.rows) rows_.push_back(compile(row.terms, row));
    objective_ = compile(lp.objective, LpRow{});
    touching_.resize(lp.binaries.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      CompiledRow& row = rows_[r];
      for (const Coef& c : row.continuous)
        if (c.coef != 1 && c.coef != -1)
          throw std::runtime_error("LP: row " + lp.rows[r].name +
                                   " is not a difference constraint");
      if (row.continuous.size() > 2 ||
          (row.continuous.size() == 2 &&
           row.continuous[0].coef == row.continuous[1].coef))
        throw std::runtime_error("LP: row " + lp.rows[r].name +
                                 " is not a difference constraint");
      for (const Coef& c : row.binaries) touching_[c.var].push_back(r);
    }
    value_.assign(lp.binaries.size(), -1);
  }

  std::uint64_t run() {
    // Day-major order lets coverage rows and partial difference systems
    // prune as soon as a day is fully assigned.
    order_.resize(value_.size());
    for (std::size_t b = 0; b < order_.size(); ++b) order_[b] = b;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return day_of(lp_.binaries[x]) < day_of(lp_.binaries[y]);
    });
    unassigned_.assign(rows_.size(), 0);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      unassigned_[r] = rows_[r].binaries.size();
    descend(0);
    return nodes_;
  }

 private:
  static int day_of(const std::string& name) {
    const auto pos = name.rfind("_t");
    if (pos == std::string::npos) return 0;
    try {
      return std::stoi(name.substr(pos + 2));
    } catch (const std::exception&) {
      return 0;
    }
  }

  CompiledRow compile(const std::vector<std::pair<std::string, std::int64_t>>& terms,
                      const LpRow& row) {
    CompiledRow out;
    out.sense = row.sense == "<=" ? -1 : row.sense == ">=" ? 1 : 0;
    out.rhs = row.rhs;
    for (const auto& [name, coef] : terms) {
      if (auto b = binary_.find(name); b != binary_.end()) {
        out.binaries.push_back({b->second, coef});
      } else if (auto c = continuous_.find(name); c != continuous_.end()) {
        out.continuous.push_back({c->second, coef});
      } else {
        throw std::runtime_error("LP: undeclared variable " + name);
      }
    }
    return out;
  }

  // False when the row can no longer be satisfied, taking unassigned
  // binaries and continuous variables anywhere in their bounds.
  bool possible(const CompiledRow& row) const {
    std::int64_t lo = 0, hi = 0;
    for (const Coef& c : row.continuous) {
      const auto [lb, ub] = cont_bounds_[c.var];
      lo += c.coef > 0 ? c.coef * lb : c.coef * ub;
      hi += c.coef > 0 ? c.coef * ub : c.coef * lb;
    }
    for (const Coef& c : row.binaries) {
      const int v = value_[c.var];
      if (v >= 0) {
        lo += c.coef * v;
        hi += c.coef * v;
      } else if (c.coef > 0) {
        hi += c.coef;
      } else {
        lo += c.coef;
      }
    }
    if (row.sense <= 0 && lo > row.rhs) return false;
    if (row.sense >= 0 && hi < row.rhs) return false;
    return true;
  }

  void assign(std::size_t b, int v) {
    if (value_[b] < 0 && v >= 0)
      for (std::size_t r : touching_[b]) --unassigned_[r];
    if (value_[b] >= 0 && v < 0)
      for (std::size_t r : touching_[b]) ++unassigned_[r];
    value_[b] = v;
  }

  void descend(std::size_t pos) {
    ++nodes_;
    if (pos == order_.size()) {
      leaf();
      return;
    }
    const std::size_t b = order_[pos];
    const bool day_ends =
        pos + 1 == order_.size() ||
        day_of(lp_.binaries[order_[pos + 1]]) != day_of(lp_.binaries[b]);
    for (int v : {0, 1}) {
      assign(b, v);
      bool ok = true;
      for (std::size_t r : touching_[b])
        if (!possible(rows_[r])) {
          ok = false;
          break;
        }
      if (ok && day_ends && pos + 1 < order_.size()) ok = solve(true).has_value();
      if (ok) descend(pos + 1);
    }
    assign(b, -1);
  }

  std::int64_t binary_part(const CompiledRow& row) const {
    std::int64_t s = 0;
    for (const Coef& c : row.binaries)
      if (value_[c.var] > 0) s += c.coef * value_[c.var];
    return s;
  }

  // Difference system over continuous variables plus a zero node n, using
  // every row whose binaries are all fixed (all rows when `partial` is
  // false): edge u -> v with weight w encodes x_v - x_u <= w. Returns the
  // shortest-path distances, which form the componentwise largest solution,
  // or nullopt when the system is infeasible.
  std::optional<std::vector<std::int64_t>> solve(bool partial) const {
    const int n = static_cast<int>(cont_names_.size());
    struct Edge { int from, to; std::int64_t w; };
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
      edges.push_back({n, v, cont_bounds_[v].second});
      edges.push_back({v, n, -cont_bounds_[v].first});
    }
    auto add_le = [&](const CompiledRow& row, std::int64_t rhs) {
      // sum(coef * x) <= rhs with at most one +1 and one -1 term.
      int plus = n, minus = n;
      for (const Coef& c : row.continuous)
        (c.coef > 0 ? plus : minus) = c.var;
      edges.push_back({minus, plus, rhs});
    };
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const CompiledRow& row = rows_[r];
      if (partial && unassigned_[r] > 0) continue;
      const std::int64_t rhs = row.rhs - binary_part(row);
      if (row.continuous.empty()) {
        if ((row.sense <= 0 && rhs < 0) || (row.sense >= 0 && rhs > 0))
          return std::nullopt;
        continue;
      }
      CompiledRow negated = row;
      for (Coef& c : negated.continuous) c.coef = -c.coef;
      if (row.sense <= 0) add_le(row, rhs);
      if (row.sense >= 0) add_le(negated, -rhs);
    }
    std::vector<std::int64_t> dist(n + 1, kInf);
    dist[n] = 0;
    for (int round = 0; round <= n + 1; ++round) {
      bool changed = false;
      for (const Edge& e : edges) {
        if (dist[e.from] == kInf) continue;
        if (dist[e.from] + e.w < dist[e.to]) {
          dist[e.to] = dist[e.from] + e.w;
          changed = true;
        }
      }
      if (!changed) break;
      if (round == n + 1) return std::nullopt;  // negative cycle
    }
    if (dist[n] < 0) return std::nullopt;
    return dist;
  }

  void leaf() {
    const auto dist = solve(false);
    if (!dist) return;
    std::int64_t obj = binary_part(objective_);
    for (const Coef& c : objective_.continuous) {
      if (c.coef > 0)
        throw std::runtime_error(
            "LP: objective must not reward smaller continuous values");
      obj += c.coef * (*dist)[c.var];
    }
    LpPoint point;
    for (std::size_t b = 0; b < value_.size(); ++b)
      point.binaries[lp_.binaries[b]] = value_[b];
    point.objective = lp_.minimize ? obj : -obj;
    visit_(point);
  }

  const LpProgram& lp_;
  const std::function<void(const LpPoint&)>& visit_;
  std::map<std::string, int> binary_;
  std::map<std::string, int> continuous_;
  std::vector<std::string> cont_names_;
  std::vector<std::pair<std::int64_t, std::int64_t>> cont_bounds_;
  std::vector<CompiledRow> rows_;
  CompiledRow objective_;
  std::vector<std::vector<std::size_t>> touching_;
  std::vector<int> value_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> unassigned_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t enumerate_binaries(
    const LpProgram& lp, const std::function<void(const LpPoint&)>& visit) {
  return Enumerator(lp, visit).run();
}

}  // namespace railsched::testing
