#pragma once

#include "trsched/error.hpp"
#include "trsched/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace trsched {

/// A single-processor instance under the B-constraint: no half-open window
/// [x, x + window) may intersect more than `b` jobs.
class Instance {
public:
    /// Throws Error(invalid_input) when b < 2, window <= 0, jobs is empty or
    /// any execution time is negative. Execution times above `window` are allowed.
    Instance(int b, TimeValue window, std::vector<TimeValue> jobs);

    [[nodiscard]] int b() const noexcept { return b_; }
    [[nodiscard]] const TimeValue& window() const noexcept { return window_; }
    [[nodiscard]] const std::vector<TimeValue>& jobs() const noexcept { return jobs_; }
    [[nodiscard]] std::size_t size() const noexcept { return jobs_.size(); }
    [[nodiscard]] const TimeValue& job(std::size_t i) const { return jobs_.at(i); }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    int b_;
    TimeValue window_;
    std::vector<TimeValue> jobs_;
};

/// Processing order as 0-based job indices. Construction does not validate;
/// use `validate` against a concrete instance size.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::size_t> order) : order_(std::move(order)) {}

    static Permutation identity(std::size_t n);

    [[nodiscard]] const std::vector<std::size_t>& order() const noexcept { return order_; }
    [[nodiscard]] std::size_t size() const noexcept { return order_.size(); }
    [[nodiscard]] std::size_t operator[](std::size_t pos) const { return order_[pos]; }
    [[nodiscard]] Permutation reversed() const;

    /// Throws Error(invalid_input) unless this is a bijection on {0..n-1}.
    void validate(std::size_t n) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::size_t> order_;
};

/// Placement of every job of a permutation on the time line.
/// starts[0] = 0, completions[k] = starts[k] + s_{order[k]},
/// starts[k+1] = completions[k] + gaps[k].
struct ScheduleTrace {
    Permutation order;
    std::vector<TimeValue> starts;
    std::vector<TimeValue> completions;
    std::vector<TimeValue> gaps;  // size n - 1
    TimeValue makespan;

    friend bool operator==(const ScheduleTrace&, const ScheduleTrace&) = default;
};

/// Earliest placement of `perm`: the first B jobs run back to back, and
/// afterwards C_k = max(C_{k-B} + W, C_{k-1}) + s_k.
[[nodiscard]] ScheduleTrace evaluate_greedy(const Instance& instance, const Permutation& perm);

/// Makespan of the earliest placement without materializing a trace.
[[nodiscard]] TimeValue greedy_makespan(const Instance& instance, const Permutation& perm);

/// Builds the trace of `perm` with explicit idle gaps (gaps.size() == n - 1,
/// all nonnegative). The result need not be feasible.
[[nodiscard]] ScheduleTrace trace_from_gaps(const Instance& instance, const Permutation& perm,
                                            std::vector<TimeValue> gaps);

/// Throws Error(inconsistent) unless `trace` satisfies every ScheduleTrace
/// invariant against `instance`.
void validate_trace(const Instance& instance, const ScheduleTrace& trace);

/// Gap-sum test: for every i with i + B < n, the distance from the end of the
/// i-th scheduled job to the start of the (i+B)-th is at least W.
[[nodiscard]] bool check_feasible(const Instance& instance, const ScheduleTrace& trace);

/// Window-sliding test: counts the jobs met by [x, x + W) at every position
/// where that count can change. Independent of `check_feasible`.
[[nodiscard]] bool check_feasible_geometric(const Instance& instance, const ScheduleTrace& trace);

/// max(sum s_i, W (n - B) / B) for n > B, else sum s_i.
[[nodiscard]] TimeValue lower_bound(const Instance& instance);

/// True iff every prefix sum of x is at most the matching prefix sum of y.
/// Throws Error(invalid_input) on length mismatch or empty input.
[[nodiscard]] bool check_prefix_dominance(std::span<const Rational> x, std::span<const Rational> y);

[[nodiscard]] TimeValue total_execution(const Instance& instance);

}  // namespace trsched
