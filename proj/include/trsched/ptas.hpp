#pragma once

#include "trsched/core.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace trsched {

/// Accuracy parameter of the approximation scheme. The geometric ladder is
/// eps (1 + eps)^k for k = 0..tau, where tau is the smallest k >= 1 with
/// eps (1 + eps)^k >= 1 (equivalently ceil(log(1/eps) / log(1 + eps))).
class PtasConfig {
public:
    /// Throws Error(invalid_input) unless 0 < epsilon < 1.
    explicit PtasConfig(Rational epsilon);

    [[nodiscard]] const Rational& epsilon() const noexcept { return epsilon_; }
    [[nodiscard]] int tau() const noexcept { return tau_; }
    [[nodiscard]] Rational ladder_value(int k) const;

private:
    Rational epsilon_;
    int tau_ = 1;
};

/// Idle values available to a regular solution: eps (1 + eps)^k, k = 0..tau.
[[nodiscard]] std::vector<TimeValue> idle_ladder(const PtasConfig& cfg);

/// Ladder exponent a single execution time rounds up to (0 for s <= eps).
[[nodiscard]] int round_exponent(const TimeValue& s, const PtasConfig& cfg);

struct RoundedInstance {
    int b = 2;
    std::vector<int> exponents;            // ladder exponent of each class, ascending
    std::vector<TimeValue> classes;        // eps (1 + eps)^exponents[c]
    std::vector<std::size_t> counts;       // jobs per class
    std::vector<std::size_t> origin;       // original job index -> class

    [[nodiscard]] std::size_t size() const noexcept { return origin.size(); }
};

/// Rounds every execution time up to the ladder. Execution times above the
/// top of the ladder keep climbing it, so the rounded value stays of the form
/// eps (1 + eps)^k. Throws Error(invalid_input) unless the window is 1.
[[nodiscard]] RoundedInstance round_instance(const Instance& instance, const PtasConfig& cfg);

/// One entry of the last-B window carried by a DP state: the idle time before
/// a job and the job's class. `idle` indexes the idle ladder, or is
/// kLeadingIdle for the zero idle before the very first job.
struct WindowSlot {
    static constexpr int kLeadingIdle = -1;
    int idle = kLeadingIdle;
    int cls = 0;

    friend bool operator==(const WindowSlot&, const WindowSlot&) = default;
};

/// Remaining class counts (window jobs included) plus the window itself.
struct DpState {
    std::vector<std::size_t> counts;
    std::vector<WindowSlot> window;

    friend bool operator==(const DpState&, const DpState&) = default;
};

struct DpSolution {
    TimeValue f_star;                       // best regular makespan
    std::vector<std::size_t> class_order;   // class of each scheduled position
    std::vector<TimeValue> idles;           // n - 1 ladder idles between positions
    std::size_t memo_states = 0;            // states stored in the memo table
    std::size_t infeasible_states = 0;      // stored states valued +infinity
};

/// Minimum makespan over regular solutions of the rounded instance: every
/// idle between consecutive jobs is a ladder value, the first job starts at 0,
/// and every idle/job run spanning B + 1 consecutive jobs is at least 1 long.
/// Throws Error(refused) when the instance has fewer than B jobs.
[[nodiscard]] DpSolution dp_solve(const RoundedInstance& rounded, const PtasConfig& cfg);

/// Upper bound on the number of distinct DP states:
/// prod(count_c + 1) * (tau + 2)^B * (number of classes)^B.
[[nodiscard]] double dp_state_ceiling(const RoundedInstance& rounded, const PtasConfig& cfg);

struct PtasResult {
    ScheduleTrace trace;      // greedy placement of the DP order on the original sizes
    TimeValue f_star;
    RoundedInstance rounded;
    DpSolution dp;
};

/// Rounds, solves the DP and places the reconstructed order greedily with the
/// original execution times. Requires window 1 and at least B jobs.
[[nodiscard]] PtasResult ptas_solve(const Instance& instance, const PtasConfig& cfg);

}  // namespace trsched
