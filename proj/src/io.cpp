#include "tsched/io.hpp"

#include <fstream>
#include <stdexcept>

namespace tsched::io {

json rational_to_json(const Rational& value) {
	if (value.is_integer()) return value.num();
	return value.to_string();
}

Rational rational_from_json(const json& value) {
	if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
	if (value.is_string()) return Rational::parse(value.get<std::string>());
	throw std::invalid_argument("expected an integer or a \"num/den\" string, got " + value.dump());
}

namespace {

const json& require(const json& doc, const char* key) {
	if (!doc.is_object() || !doc.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
	return doc.at(key);
}

Size integer_field(const json& value, const char* what) {
	if (!value.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer, got " + value.dump());
	return value.get<Size>();
}

std::vector<std::int64_t> integer_list(const json& doc, const char* key) {
	const json& list = require(doc, key);
	if (!list.is_array()) throw std::invalid_argument(std::string("field '") + key + "' must be an array");
	std::vector<std::int64_t> out;
	for (const auto& v : list) out.push_back(integer_field(v, key));
	return out;
}

} // namespace

json to_json(const Instance& instance) {
	return json{{"sizes", std::vector<Size>(instance.sizes().begin(), instance.sizes().end())}};
}

Instance instance_from_json(const json& doc) {
	return Instance(integer_list(doc, "sizes"));
}

json to_json(const Schedule& schedule) {
	json jobs = json::array();
	for (const auto& job : schedule.jobs()) jobs.push_back({{"size", job.size}, {"start", rational_to_json(job.start)}});
	return json{{"jobs", jobs}};
}

Schedule schedule_from_json(const json& doc) {
	const json& list = require(doc, "jobs");
	if (!list.is_array()) throw std::invalid_argument("field 'jobs' must be an array");
	std::vector<ScheduledJob> jobs;
	for (const auto& entry : list) jobs.push_back({integer_field(require(entry, "size"), "size"), rational_from_json(require(entry, "start"))});
	return Schedule(std::move(jobs));
}

json to_json(const ThreeDMInstance& tdm) {
	return json{{"D", tdm.D}, {"a", tdm.a}, {"b", tdm.b}, {"c", tdm.c}};
}

ThreeDMInstance tdm_from_json(const json& doc) {
	ThreeDMInstance tdm;
	tdm.D = integer_field(require(doc, "D"), "D");
	tdm.a = integer_list(doc, "a");
	tdm.b = integer_list(doc, "b");
	tdm.c = integer_list(doc, "c");
	tdm.validate();
	return tdm;
}

json to_json(const EncodedInstance& encoded, const ThreeDMInstance& tdm) {
	json labels = json::array();
	for (const auto& l : encoded.labels) labels.push_back({{"type", to_string(l.type)}, {"index", l.index}, {"size", l.size}});
	return json{{"M", encoded.M}, {"target", encoded.target}, {"tdm", to_json(tdm)}, {"labels", labels}};
}

json to_json(const GreedyTrace& trace) {
	json steps = json::array();
	for (const auto& s : trace) {
		steps.push_back({{"job", s.job},
		                 {"size", s.size},
		                 {"gap_start", s.gap_start},
		                 {"gap_length", s.gap_length},
		                 {"placed_at", s.placed_at},
		                 {"shift", s.shift},
		                 {"parent", s.parent ? json(*s.parent) : json(nullptr)},
		                 {"makespan_after", s.makespan_after},
		                 {"gaps_after", s.gaps_after}});
	}
	return json{{"steps", steps}};
}

json to_json(const ExecutionTrace& trace) {
	json jobs = json::array();
	for (const auto& out : trace.jobs) {
		if (out.executed) jobs.push_back({{"status", "executed"}, {"start", rational_to_json(out.start)}, {"end", rational_to_json(out.end)}});
		else jobs.push_back({{"status", "canceled"}, {"canceled_by", *out.canceled_by}});
	}
	return json{{"jobs", jobs}, {"completion", rational_to_json(trace.completion)}};
}

ExecutionTrace execution_trace_from_json(const json& doc) {
	ExecutionTrace trace;
	for (const auto& entry : require(doc, "jobs")) {
		JobOutcome out;
		const std::string status = require(entry, "status").get<std::string>();
		if (status == "executed") {
			out.executed = true;
			out.start = rational_from_json(require(entry, "start"));
			out.end = rational_from_json(require(entry, "end"));
		} else if (status == "canceled") {
			out.canceled_by = require(entry, "canceled_by").get<std::size_t>();
		} else {
			throw std::invalid_argument("unknown job status '" + status + "'");
		}
		trace.jobs.push_back(out);
	}
	trace.completion = rational_from_json(require(doc, "completion"));
	return trace;
}

DemandVector demands_from_json(const json& doc) {
	const json& list = require(doc, "demands");
	if (!list.is_array()) throw std::invalid_argument("field 'demands' must be an array");
	DemandVector out;
	for (const auto& v : list) out.push_back(rational_from_json(v));
	return out;
}

json read_json(const std::filesystem::path& path) {
	std::ifstream in(path);
	if (!in) throw std::invalid_argument("cannot open " + path.string());
	try {
		return json::parse(in);
	} catch (const json::parse_error& e) {
		throw std::invalid_argument(path.string() + ": " + e.what());
	}
}

std::string dump(const json& doc) {
	return doc.dump(2) + "\n";
}

void write_json(const std::filesystem::path& path, const json& doc) {
	std::ofstream out(path);
	if (!out) throw std::invalid_argument("cannot write " + path.string());
	out << dump(doc);
}

} // namespace tsched::io
