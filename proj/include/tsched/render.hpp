#ifndef TSCHED_RENDER_HPP
#define TSCHED_RENDER_HPP

#include <string>

#include "tsched/core.hpp"
#include "tsched/simulate.hpp"

namespace tsched {

enum class RenderFormat { Svg, Ascii };

RenderFormat render_format_from_string(const std::string& name);

struct RenderOptions {
	RenderFormat format = RenderFormat::Svg;
	/// Pixels per time unit (SVG) or characters per time unit (ASCII).
	double scale = 20.0;
	/// Triangle height per unit of size, SVG only.
	double height = 1.0;
};

/// Draws each job as a right triangle over [s, s + p] with its vertical
/// edge at s. With a trace, executed intervals are drawn as a row of
/// rectangles below the time axis. Throws std::invalid_argument listing
/// the violating pairs when the schedule is infeasible.
std::string render(const Schedule& schedule, const RenderOptions& options, const ExecutionTrace* trace = nullptr);

} // namespace tsched

#endif
