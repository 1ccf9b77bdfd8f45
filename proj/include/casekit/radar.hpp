#pragma once

#include <string>

#include "casekit/aggregation.hpp"

namespace casekit {

// Canvas geometry, shared with tests that read vertices back.
inline constexpr double kRadarWidth = 720.0;
inline constexpr double kRadarHeight = 600.0;
inline constexpr double kRadarCx = 360.0;
inline constexpr double kRadarCy = 300.0;
inline constexpr double kRadarRadius = 200.0;

/// Spider chart: rings for 0..3, one spoke per family starting at 12 o'clock
/// and running clockwise, one polygon per dimension with vertices at value/3 of
/// the radius (absent values at the center). Fewer than three spokes render as
/// grouped bars. Throws Error(EMPTY_RADAR) when there are no spokes.
std::string render_radar_svg(const RadarData& radar);

/// Fixed-point number with trailing zeros removed; never "-0".
std::string svg_number(double v);

}  // namespace casekit
