#include "trsched/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace trsched::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw Error(ErrorKind::parse, (path.empty() ? std::string("/") : path) + ": " + message,
                path.empty() ? "/" : path);
}

const json& field(const json& j, const std::string& path, const char* key) {
    if (!j.is_object()) fail(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) fail(path + "/" + key, "missing field");
    return *it;
}

Rational rational_from_json(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail(path, "expected a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

std::vector<TimeValue> times_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    std::vector<TimeValue> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = path + "/" + std::to_string(i);
        out.push_back(rational_from_json(j[i], at));
        if (out.back().sign() < 0) fail(at, "must be >= 0");
    }
    return out;
}

json times_to_json(const std::vector<TimeValue>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

// Library validation errors become parse errors at the given path.
template <class F>
auto rethrow_at(const std::string& path, F&& build) {
    try {
        return build();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::parse) throw;
        const std::string at = e.field().empty() ? path : path + e.field();
        throw Error(ErrorKind::parse, (at.empty() ? std::string("/") : at) + ": " + e.what(), at.empty() ? "/" : at);
    }
}

}  // namespace

json to_json(const Instance& instance) {
    return json{{"b", instance.b()}, {"window", instance.window().str()}, {"jobs", times_to_json(instance.jobs())}};
}

json to_json(const PartitionInstance& part) { return json{{"values", part.values()}}; }

json to_json(const ScheduleTrace& trace) {
    json order = json::array();
    for (const std::size_t j : trace.order.order()) order.push_back(j + 1);
    return json{{"order", order},
                {"starts", times_to_json(trace.starts)},
                {"completions", times_to_json(trace.completions)},
                {"gaps", times_to_json(trace.gaps)},
                {"makespan", trace.makespan.str()}};
}

json to_json(const ReductionImage& image) {
    return json{{"instance", to_json(image.instance)}, {"threshold", image.threshold.str()}, {"u", image.u.str()}};
}

json to_json(const Split& split) {
    const auto one_based = [](const std::vector<std::size_t>& side) {
        json out = json::array();
        for (const std::size_t i : side) out.push_back(i + 1);
        return out;
    };
    return json{{"side1", one_based(split.side1)}, {"side2", one_based(split.side2)}};
}

Instance instance_from_json(const json& j, const std::string& path) {
    const json& b = field(j, path, "b");
    if (!b.is_number_integer()) fail(path + "/b", "expected an integer");
    const long bv = b.get<long>();
    if (bv < 2) fail(path + "/b", "b must be >= 2");
    TimeValue window = j.contains("window") ? rational_from_json(j.at("window"), path + "/window") : TimeValue(1);
    std::vector<TimeValue> jobs = times_from_json(field(j, path, "jobs"), path + "/jobs");
    return rethrow_at(path, [&] { return Instance(static_cast<int>(bv), window, jobs); });
}

PartitionInstance partition_from_json(const json& j, const std::string& path) {
    const json& values = field(j, path, "values");
    if (!values.is_array()) fail(path + "/values", "expected an array");
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i].is_number_integer()) fail(path + "/values/" + std::to_string(i), "expected an integer");
        out.push_back(values[i].get<std::int64_t>());
    }
    return rethrow_at(path, [&] { return PartitionInstance(out); });
}

Permutation permutation_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array of 1-based job indices");
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer() || j[i].get<long>() < 1) {
            fail(path + "/" + std::to_string(i), "expected a positive integer");
        }
        order.push_back(j[i].get<std::size_t>() - 1);
    }
    return Permutation(std::move(order));
}

ScheduleTrace trace_from_json(const json& j, const std::string& path) {
    ScheduleTrace trace;
    trace.order = permutation_from_json(field(j, path, "order"), path + "/order");
    trace.starts = times_from_json(field(j, path, "starts"), path + "/starts");
    trace.completions = times_from_json(field(j, path, "completions"), path + "/completions");
    trace.gaps = times_from_json(field(j, path, "gaps"), path + "/gaps");
    trace.makespan = rational_from_json(field(j, path, "makespan"), path + "/makespan");
    return trace;
}

ReductionImage reduction_from_json(const json& j, const std::string& path) {
    return ReductionImage{instance_from_json(field(j, path, "instance"), path + "/instance"),
                          rational_from_json(field(j, path, "threshold"), path + "/threshold"),
                          rational_from_json(field(j, path, "u"), path + "/u")};
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::parse, std::string("malformed JSON: ") + e.what(), "/");
    }
}

Instance parse_instance(std::string_view text) { return instance_from_json(parse_json(text)); }
PartitionInstance parse_partition(std::string_view text) { return partition_from_json(parse_json(text)); }
ScheduleTrace parse_trace(std::string_view text) { return trace_from_json(parse_json(text)); }
ReductionImage parse_reduction(std::string_view text) { return reduction_from_json(parse_json(text)); }

std::string emit(const json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::invalid_input, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Instance gen_random(std::size_t n, int b, std::uint64_t seed, double zero_fraction) {
    if (n < 1) throw Error(ErrorKind::invalid_input, "n must be >= 1", "n");
    if (b < 2) throw Error(ErrorKind::invalid_input, "b must be >= 2", "b");
    if (!(zero_fraction >= 0.0 && zero_fraction <= 1.0)) {
        throw Error(ErrorKind::invalid_input, "zero fraction must lie in [0, 1]", "zero_fraction");
    }
    constexpr long kDenominator = 1000;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> numerator(0, kDenominator);
    std::vector<TimeValue> jobs;
    jobs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) jobs.emplace_back(numerator(rng), kDenominator);

    const auto zeros = static_cast<std::size_t>(std::llround(zero_fraction * static_cast<double>(n)));
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t k = 0; k < std::min(zeros, n); ++k) jobs[idx[k]] = TimeValue(0);
    return Instance(b, TimeValue(1), std::move(jobs));
}

PartitionInstance gen_partition(std::size_t m, std::int64_t max_value, std::uint64_t seed) {
    if (m < 1) throw Error(ErrorKind::invalid_input, "m must be >= 1", "m");
    if (max_value < 1) throw Error(ErrorKind::invalid_input, "max value must be >= 1", "max_value");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> value(1, max_value);
    std::vector<std::int64_t> values(2 * m);
    do {
        std::generate(values.begin(), values.end(), [&] { return value(rng); });
    } while (std::accumulate(values.begin(), values.end(), std::int64_t{0}) % 2 != 0);
    return PartitionInstance(std::move(values));
}

}  // namespace trsched::io
