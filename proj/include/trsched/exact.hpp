#pragma once

#include "trsched/core.hpp"

#include <cstddef>
#include <cstdint>

namespace trsched {

struct ExactResult {
    TimeValue optimum;
    ScheduleTrace witness;       // an optimal greedy trace
    std::uint64_t explored = 0;  // complete permutations evaluated
};

inline constexpr std::size_t kDefaultExactLimit = 12;
inline constexpr std::size_t kDefaultUnprunedLimit = 9;

/// Minimum greedy makespan over all permutations.
///
/// The search fixes the smallest job first and the second smallest last
/// (lowest index wins ties). Some optimal order has the two smallest jobs at
/// its ends, and reversing an order preserves its makespan, so this keeps the
/// optimum while also visiting each order/reverse pair at most once. The
/// middle is enumerated lexicographically by job index, and a prefix is cut
/// once its completion time exceeds the incumbent.
///
/// Throws Error(refused) when n > limit.
[[nodiscard]] ExactResult solve_exact(const Instance& instance, std::size_t limit = kDefaultExactLimit);

/// Plain enumeration of all n! orders; the reference for `solve_exact`.
[[nodiscard]] ExactResult solve_exact_unpruned(const Instance& instance, std::size_t limit = kDefaultUnprunedLimit);

}  // namespace trsched
