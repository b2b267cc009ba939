#pragma once

#include "trsched/core.hpp"
#include "trsched/reduction.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace trsched::io {

using json = nlohmann::json;

// Rationals travel as strings ("p/q" or integer); permutations are 1-based.

[[nodiscard]] json to_json(const Instance& instance);
[[nodiscard]] json to_json(const PartitionInstance& part);
[[nodiscard]] json to_json(const ScheduleTrace& trace);
[[nodiscard]] json to_json(const ReductionImage& image);
[[nodiscard]] json to_json(const Split& split);

[[nodiscard]] Instance instance_from_json(const json& j, const std::string& path = "");
[[nodiscard]] PartitionInstance partition_from_json(const json& j, const std::string& path = "");
[[nodiscard]] ScheduleTrace trace_from_json(const json& j, const std::string& path = "");
[[nodiscard]] ReductionImage reduction_from_json(const json& j, const std::string& path = "");
[[nodiscard]] Permutation permutation_from_json(const json& j, const std::string& path = "");

/// Parse text; all failures surface as Error(parse) with a field path.
[[nodiscard]] json parse_json(std::string_view text);
[[nodiscard]] Instance parse_instance(std::string_view text);
[[nodiscard]] PartitionInstance parse_partition(std::string_view text);
[[nodiscard]] ScheduleTrace parse_trace(std::string_view text);
[[nodiscard]] ReductionImage parse_reduction(std::string_view text);

/// Pretty JSON with a trailing newline.
[[nodiscard]] std::string emit(const json& j);

[[nodiscard]] std::string read_file(const std::string& path);

/// n jobs of size k/1000 with k uniform in [0, 1000]; round(zero_fraction * n)
/// of them (chosen at random) are forced to zero. Window 1.
[[nodiscard]] Instance gen_random(std::size_t n, int b, std::uint64_t seed, double zero_fraction);

/// 2m integers uniform in [1, max_value], redrawn until the total is even.
[[nodiscard]] PartitionInstance gen_partition(std::size_t m, std::int64_t max_value, std::uint64_t seed);

}  // namespace trsched::io
