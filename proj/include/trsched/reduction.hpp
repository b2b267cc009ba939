#pragma once

#include "trsched/core.hpp"
#include "trsched/exact.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace trsched {

/// 2m positive integers to be split into two halves of m elements and equal sum.
class PartitionInstance {
public:
    /// Throws Error(invalid_input) for an empty or odd-length list or a value < 1.
    explicit PartitionInstance(std::vector<std::int64_t> values);

    [[nodiscard]] const std::vector<std::int64_t>& values() const noexcept { return values_; }
    [[nodiscard]] std::size_t half() const noexcept { return values_.size() / 2; }  // m
    [[nodiscard]] std::int64_t total() const;

    friend bool operator==(const PartitionInstance&, const PartitionInstance&) = default;

private:
    std::vector<std::int64_t> values_;
};

/// Two disjoint sets of 0-based value indices, each sorted ascending.
struct Split {
    std::vector<std::size_t> side1;
    std::vector<std::size_t> side2;

    friend bool operator==(const Split&, const Split&) = default;
};

/// Scheduling instance built from a partition instance: B = 2, W = U = sum / 2,
/// jobs (a_1, ..., a_2m, 0, 0, U) and makespan threshold (m + 2) U.
struct ReductionImage {
    Instance instance;
    TimeValue threshold;
    TimeValue u;

    friend bool operator==(const ReductionImage&, const ReductionImage&) = default;
};

/// Job slots of the image besides the 2m value jobs.
struct ImageSlots {
    std::size_t first_zero;
    std::size_t second_zero;
    std::size_t long_job;

    static ImageSlots of(const PartitionInstance& part) {
        const std::size_t n = part.values().size();
        return {n, n + 1, n + 2};
    }
};

/// Throws Error(invalid_input) when the total is odd.
[[nodiscard]] ReductionImage build_reduction(const PartitionInstance& part);

/// True iff `split` is a valid answer: disjoint, covers every index, m per
/// side, equal sums.
[[nodiscard]] bool is_balanced_split(const PartitionInstance& part, const Split& split);

/// Schedule of the image whose makespan is exactly (m + 2) U, built from a
/// balanced split: a zero-job, then side1 (nonincreasing) and side2
/// (nondecreasing) alternating, then the U-job and the other zero-job.
/// Throws Error(invalid_input) if the split is not balanced.
[[nodiscard]] ScheduleTrace build_witness_schedule(const PartitionInstance& part, const Split& split);

/// For a trace of the image with a zero-job at position 0, checks that the
/// values at positions 2, 4, .., 2m are prefix-dominated by those at
/// positions 1, 3, .., 2m - 1.
[[nodiscard]] bool witness_prefix_condition(const PartitionInstance& part, const ScheduleTrace& trace);

struct Decision {
    bool yes = false;
    std::optional<ReductionImage> image;  // absent for odd totals
    std::optional<ExactResult> exact;
};

/// Decides the partition instance by solving its image exactly and comparing
/// the optimum to the threshold. Odd totals answer NO without solving.
[[nodiscard]] Decision decide_partition_detailed(const PartitionInstance& part,
                                                 std::size_t limit = kDefaultExactLimit);

[[nodiscard]] bool decide_partition(const PartitionInstance& part, std::size_t limit = kDefaultExactLimit);

/// Recovers a balanced split from a feasible image trace of makespan exactly
/// (m + 2) U. A trace whose ends are not the two zero-jobs is first brought
/// into that form and replaced by its greedy placement.
[[nodiscard]] Split extract_partition(const PartitionInstance& part, const ScheduleTrace& trace);

}  // namespace trsched
