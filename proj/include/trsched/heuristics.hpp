#pragma once

#include "trsched/core.hpp"

namespace trsched {

/// Jobs by nonincreasing execution time, ties by ascending index.
[[nodiscard]] Permutation lpt_order(const Instance& instance);

/// Greedy placement of the LPT order.
[[nodiscard]] ScheduleTrace lpt_schedule(const Instance& instance);

/// (2 - 2/B) * opt + W
[[nodiscard]] TimeValue lpt_bound(const Instance& instance, const TimeValue& opt);

/// True iff the LPT makespan is within `lpt_bound` of the given optimum.
[[nodiscard]] bool check_lpt_bound(const Instance& instance, const TimeValue& opt);

}  // namespace trsched
