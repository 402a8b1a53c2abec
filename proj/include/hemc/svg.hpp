#pragma once

#include <string>

#include "hemc/packing.hpp"

namespace hemc {

// Gantt chart: one lane per core, big lanes first, time axis in input units,
// process-colored segments, and a line at the makespan.
std::string schedule_to_svg(const Schedule& s, double width_px = 1000.0);

void write_svg(const std::string& path, const Schedule& s, double width_px = 1000.0);

} // namespace hemc
