#include "railsched/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace railsched {

namespace {

enum class CellKind { kBlank, kRoute, kSpare, kMaintenance };

struct Cell {
  CellKind kind = CellKind::kBlank;
  std::string text;
};

using Grid = std::vector<std::vector<Cell>>;

Grid build_grid(const Instance& instance, const Schedule& schedule) {
  Grid grid;
  for (const Train& train : instance.trains) {
    std::vector<Cell> row(instance.horizon_days);
    const TrainPlan& plan = schedule.plans.at(train.id);
    for (Day day = train.begin_day; day <= train.end_day; ++day) {
      const auto& a = plan.days[day - train.begin_day];
      if (!a) continue;
      Cell& cell = row[day - 1];
      if (*a == kSpareRoute) {
        cell = {CellKind::kSpare, "SPARE"};
      } else {
        cell = {CellKind::kRoute, "R" + std::to_string(*a)};
      }
    }
    for (const MaintenanceStart& s : plan.maintenance) {
      const MaintenancePacket* packet = instance.find_packet(s.packet);
      for (int k = 0; k < packet->duration_days; ++k)
        row[s.day + k - 1] = {CellKind::kMaintenance, packet->label()};
    }
    grid.push_back(std::move(row));
  }
  return grid;
}

std::string rtrim(std::string s) {
  s.erase(s.find_last_not_of(' ') + 1);
  return s;
}

std::string render_text(const Instance& instance, const Grid& grid) {
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> head{"Train"};
  for (Day day = 1; day <= instance.horizon_days; ++day)
    head.push_back("Day " + std::to_string(day));
  table.push_back(head);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> line{instance.trains[i].label()};
    for (const Cell& cell : grid[i]) line.push_back(cell.text);
    table.push_back(std::move(line));
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& line : table)
    for (std::size_t c = 0; c < line.size(); ++c)
      width[c] = std::max(width[c], line[c].size());

  std::string out;
  for (const auto& line : table) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0) text += " | ";
      text += line[c];
      text.append(width[c] - line[c].size(), ' ');
    }
    out += rtrim(text) + "\n";
  }
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* fill_of(CellKind kind) {
  switch (kind) {
    case CellKind::kRoute: return "#cfe2f3";
    case CellKind::kSpare: return "#eeeeee";
    case CellKind::kMaintenance: return "#f4cccc";
    case CellKind::kBlank: break;
  }
  return "none";
}

std::string render_svg(const Instance& instance, const Grid& grid) {
  constexpr int kLabel = 96, kCellW = 72, kCellH = 28;
  const int width = kLabel + kCellW * instance.horizon_days;
  const int height = kCellH * (static_cast<int>(grid.size()) + 1);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"monospace\" "
      << "font-size=\"12\">\n";
  auto text = [&](int x, int y, const std::string& s) {
    out << "  <text x=\"" << x << "\" y=\"" << y
        << "\" text-anchor=\"middle\" dominant-baseline=\"central\">"
        << xml_escape(s) << "</text>\n";
  };
  text(kLabel / 2, kCellH / 2, "Train");
  for (Day day = 1; day <= instance.horizon_days; ++day)
    text(kLabel + kCellW * (day - 1) + kCellW / 2, kCellH / 2,
         "Day " + std::to_string(day));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const int y = kCellH * static_cast<int>(i + 1);
    text(kLabel / 2, y + kCellH / 2, instance.trains[i].label());
    for (Day day = 1; day <= instance.horizon_days; ++day) {
      const Cell& cell = grid[i][day - 1];
      const int x = kLabel + kCellW * (day - 1);
      out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kCellW
          << "\" height=\"" << kCellH << "\" fill=\"" << fill_of(cell.kind)
          << "\" stroke=\"#666666\"/>\n";
      if (!cell.text.empty()) text(x + kCellW / 2, y + kCellH / 2, cell.text);
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

RenderStyle parse_render_style(std::string_view name) {
  if (name == "text") return RenderStyle::kText;
  if (name == "svg") return RenderStyle::kSvg;
  throw std::invalid_argument("unknown render style '" + std::string(name) +
                              "' (expected text or svg)");
}

std::string render_schedule(const Instance& instance, const Schedule& schedule,
                            RenderStyle style) {
  FeasibilityReport report = check_feasibility(schedule, instance);
  if (!report.feasible()) throw InfeasibleScheduleError(std::move(report));
  const Grid grid = build_grid(instance, schedule);
  return style == RenderStyle::kText ? render_text(instance, grid)
                                     : render_svg(instance, grid);
}

}  // namespace railsched
