#pragma once

#include <string>
#include <string_view>

#include "railsched/instance.hpp"
#include "railsched/semantics.hpp"

namespace railsched {

enum class RenderStyle { kText, kSvg };

// "text" or "svg"; throws std::invalid_argument otherwise.
RenderStyle parse_render_style(std::string_view name);

// Gantt-style table: one row per train, one column per horizon day. A cell
// holds "R<id>" for a route, "SPARE", or the packet label on every day of a
// maintenance window; days outside the train's window stay blank. Throws
// InfeasibleScheduleError carrying the report when the schedule is not
// feasible.
std::string render_schedule(const Instance& instance, const Schedule& schedule,
                            RenderStyle style);

}  // namespace railsched
