#include "tsched/render.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tsched {

RenderFormat render_format_from_string(const std::string& name) {
	if (name == "svg") return RenderFormat::Svg;
	if (name == "ascii") return RenderFormat::Ascii;
	throw std::invalid_argument("unknown render format '" + name + "'");
}

namespace {

constexpr double kMargin = 20.0;

std::string num(double v) {
	std::ostringstream out;
	out << std::setprecision(6) << v;
	return out.str();
}

std::string render_svg(const Schedule& schedule, const RenderOptions& opt, const ExecutionTrace* trace) {
	const double span = makespan(schedule).to_double();
	Size tallest = 0;
	for (const auto& job : schedule.jobs()) tallest = std::max(tallest, job.size);

	const double axis_y = kMargin + static_cast<double>(tallest) * opt.height * opt.scale;
	const double row_height = opt.scale;
	const double width = 2 * kMargin + span * opt.scale;
	const double height = axis_y + kMargin + (trace ? 2 * row_height : 0) + kMargin;
	auto x = [&](const Rational& t) { return kMargin + t.to_double() * opt.scale; };

	std::ostringstream out;
	out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height) << "\">\n";
	for (const auto& job : schedule.jobs()) {
		const double top = axis_y - static_cast<double>(job.size) * opt.height * opt.scale;
		out << "  <polygon points=\"" << num(x(job.start)) << "," << num(axis_y) << " " << num(x(job.start)) << ","
		    << num(top) << " " << num(x(job.end())) << "," << num(axis_y)
		    << "\" fill=\"none\" stroke=\"black\" data-start=\"" << job.start << "\" data-size=\"" << job.size << "\"/>\n";
		out << "  <text x=\"" << num(x(job.start) + 2) << "\" y=\"" << num(axis_y - 2) << "\" font-size=\"10\">"
		    << job.size << "</text>\n";
	}
	out << "  <line x1=\"" << num(kMargin) << "\" y1=\"" << num(axis_y) << "\" x2=\"" << num(x(makespan(schedule)))
	    << "\" y2=\"" << num(axis_y) << "\" stroke=\"black\"/>\n";

	if (trace) {
		const double row_y = axis_y + row_height;
		for (const auto& outcome : trace->jobs) {
			if (!outcome.executed) continue;
			out << "  <rect x=\"" << num(x(outcome.start)) << "\" y=\"" << num(row_y) << "\" width=\""
			    << num((outcome.end - outcome.start).to_double() * opt.scale) << "\" height=\"" << num(row_height)
			    << "\" fill=\"none\" stroke=\"black\" data-start=\"" << outcome.start << "\" data-end=\"" << outcome.end
			    << "\"/>\n";
		}
	}
	out << "</svg>\n";
	return out.str();
}

std::string render_ascii(const Schedule& schedule, const RenderOptions& opt, const ExecutionTrace* trace) {
	std::vector<std::size_t> order(schedule.size());
	std::iota(order.begin(), order.end(), 0);
	std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return schedule[a].start < schedule[b].start; });
	auto column = [&](const Rational& t) { return static_cast<std::size_t>(t.to_double() * opt.scale); };

	std::ostringstream out;
	for (std::size_t j : order) {
		const auto& job = schedule[j];
		const std::size_t from = column(job.start);
		const std::size_t to = std::max(from + 1, column(job.end()));
		std::ostringstream label;
		label << "p=" << job.size << " @" << job.start;
		out << std::left << std::setw(14) << label.str() << std::string(from, ' ') << '|' << std::string(to - from - 1, '\\');
		if (trace) {
			const auto& outcome = trace->jobs[j];
			if (outcome.executed) out << "  ran [" << outcome.start << "," << outcome.end << ")";
			else out << "  canceled by job " << *outcome.canceled_by;
		}
		out << '\n';
	}
	out << std::string(14, ' ') << std::string(column(makespan(schedule)) + 1, '-') << "> " << makespan(schedule) << '\n';
	return out.str();
}

} // namespace

std::string render(const Schedule& schedule, const RenderOptions& options, const ExecutionTrace* trace) {
	if (schedule.empty()) throw std::invalid_argument("nothing to render");
	if (const auto violations = check_feasible(schedule); !violations.empty()) {
		std::ostringstream msg;
		msg << "infeasible schedule, violating pairs:";
		for (const auto& [i, j] : violations) msg << " (" << i << "," << j << ")";
		throw std::invalid_argument(msg.str());
	}
	if (trace && trace->jobs.size() != schedule.size()) throw std::invalid_argument("trace does not match schedule");
	if (options.scale <= 0 || options.height <= 0) throw std::invalid_argument("scale and height must be positive");
	return options.format == RenderFormat::Svg ? render_svg(schedule, options, trace) : render_ascii(schedule, options, trace);
}

} // namespace tsched
