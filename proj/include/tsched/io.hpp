#ifndef TSCHED_IO_HPP
#define TSCHED_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "tsched/core.hpp"
#include "tsched/greedy.hpp"
#include "tsched/hardness.hpp"
#include "tsched/simulate.hpp"

namespace tsched::io {

using nlohmann::json;

/// Integers as bare numbers, everything else as a "num/den" string.
json rational_to_json(const Rational& value);
/// Accepts integers and "n" / "n/d" strings; floating-point is rejected.
Rational rational_from_json(const json& value);

json to_json(const Instance& instance);
Instance instance_from_json(const json& doc);

json to_json(const Schedule& schedule);
Schedule schedule_from_json(const json& doc);

json to_json(const ThreeDMInstance& tdm);
ThreeDMInstance tdm_from_json(const json& doc);

json to_json(const EncodedInstance& encoded, const ThreeDMInstance& tdm);

json to_json(const GreedyTrace& trace);

json to_json(const ExecutionTrace& trace);
ExecutionTrace execution_trace_from_json(const json& doc);

DemandVector demands_from_json(const json& doc);

json read_json(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const json& doc);
std::string dump(const json& doc);

} // namespace tsched::io

#endif
