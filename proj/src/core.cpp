#include "trsched/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace trsched {

Instance::Instance(int b, TimeValue window, std::vector<TimeValue> jobs)
    : b_(b), window_(std::move(window)), jobs_(std::move(jobs)) {
    if (b_ < 2) throw Error(ErrorKind::invalid_input, "b must be >= 2", "/b");
    if (window_.sign() <= 0) throw Error(ErrorKind::invalid_input, "window must be > 0", "/window");
    if (jobs_.empty()) throw Error(ErrorKind::invalid_input, "instance needs at least one job", "/jobs");
    for (std::size_t i = 0; i < jobs_.size(); ++i) {
        if (jobs_[i].sign() < 0) {
            throw Error(ErrorKind::invalid_input, "execution time must be >= 0", "/jobs/" + std::to_string(i));
        }
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return Permutation(std::move(order));
}

Permutation Permutation::reversed() const {
    return Permutation(std::vector<std::size_t>(order_.rbegin(), order_.rend()));
}

void Permutation::validate(std::size_t n) const {
    if (order_.size() != n) {
        throw Error(ErrorKind::invalid_input, "permutation has " + std::to_string(order_.size()) +
                                                  " entries, instance has " + std::to_string(n) + " jobs");
    }
    std::vector<bool> seen(n, false);
    for (const std::size_t j : order_) {
        if (j >= n) throw Error(ErrorKind::invalid_input, "permutation index " + std::to_string(j + 1) + " out of range");
        if (seen[j]) throw Error(ErrorKind::invalid_input, "permutation repeats job " + std::to_string(j + 1));
        seen[j] = true;
    }
}

namespace {

// Completion times of the earliest placement; shared by the trace and
// makespan-only entry points.
std::vector<TimeValue> greedy_completions(const Instance& instance, const Permutation& perm) {
    perm.validate(instance.size());
    const auto b = static_cast<std::size_t>(instance.b());
    const std::size_t n = instance.size();
    std::vector<TimeValue> completions(n);
    for (std::size_t k = 0; k < n; ++k) {
        const TimeValue& s = instance.job(perm[k]);
        if (k == 0) {
            completions[k] = s;
        } else if (k < b) {
            completions[k] = completions[k - 1] + s;
        } else {
            completions[k] = max(completions[k - b] + instance.window(), completions[k - 1]) + s;
        }
    }
    return completions;
}

}  // namespace

ScheduleTrace evaluate_greedy(const Instance& instance, const Permutation& perm) {
    ScheduleTrace trace;
    trace.completions = greedy_completions(instance, perm);
    trace.order = perm;
    const std::size_t n = instance.size();
    trace.starts.resize(n);
    for (std::size_t k = 0; k < n; ++k) trace.starts[k] = trace.completions[k] - instance.job(perm[k]);
    trace.gaps.reserve(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) trace.gaps.push_back(trace.starts[k + 1] - trace.completions[k]);
    trace.makespan = trace.completions.back();
    return trace;
}

TimeValue greedy_makespan(const Instance& instance, const Permutation& perm) {
    return greedy_completions(instance, perm).back();
}

ScheduleTrace trace_from_gaps(const Instance& instance, const Permutation& perm, std::vector<TimeValue> gaps) {
    perm.validate(instance.size());
    const std::size_t n = instance.size();
    if (gaps.size() + 1 != n) {
        throw Error(ErrorKind::invalid_input, "expected " + std::to_string(n - 1) + " gaps");
    }
    ScheduleTrace trace;
    trace.order = perm;
    trace.starts.resize(n);
    trace.completions.resize(n);
    TimeValue t;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            if (gaps[k - 1].sign() < 0) throw Error(ErrorKind::invalid_input, "gaps must be >= 0");
            t += gaps[k - 1];
        }
        trace.starts[k] = t;
        t += instance.job(perm[k]);
        trace.completions[k] = t;
    }
    trace.gaps = std::move(gaps);
    trace.makespan = t;
    return trace;
}

void validate_trace(const Instance& instance, const ScheduleTrace& trace) {
    const std::size_t n = instance.size();
    try {
        trace.order.validate(n);
    } catch (const Error& e) {
        throw Error(ErrorKind::inconsistent, e.what(), "/order");
    }
    if (trace.starts.size() != n || trace.completions.size() != n || trace.gaps.size() + 1 != n) {
        throw Error(ErrorKind::inconsistent, "trace vector lengths do not match the instance");
    }
    if (!trace.starts[0].is_zero()) throw Error(ErrorKind::inconsistent, "first job must start at 0", "/starts/0");
    for (std::size_t k = 0; k < n; ++k) {
        if (trace.completions[k] != trace.starts[k] + instance.job(trace.order[k])) {
            throw Error(ErrorKind::inconsistent, "completion != start + execution time",
                        "/completions/" + std::to_string(k));
        }
        if (k + 1 < n) {
            if (trace.gaps[k].sign() < 0) {
                throw Error(ErrorKind::inconsistent, "negative gap", "/gaps/" + std::to_string(k));
            }
            if (trace.starts[k + 1] != trace.completions[k] + trace.gaps[k]) {
                throw Error(ErrorKind::inconsistent, "start != previous completion + gap",
                            "/starts/" + std::to_string(k + 1));
            }
        }
    }
    if (trace.makespan != trace.completions.back()) {
        throw Error(ErrorKind::inconsistent, "makespan != last completion", "/makespan");
    }
}

bool check_feasible(const Instance& instance, const ScheduleTrace& trace) {
    validate_trace(instance, trace);
    const auto b = static_cast<std::size_t>(instance.b());
    const std::size_t n = instance.size();
    for (std::size_t i = 0; i + b < n; ++i) {
        // d(i : i+B) = d(i) + sum_{j=i+1}^{i+B-1} (s_j + d(j))
        TimeValue span = trace.gaps[i];
        for (std::size_t j = i + 1; j < i + b; ++j) span += instance.job(trace.order[j]) + trace.gaps[j];
        if (span < instance.window()) return false;
    }
    return true;
}

bool check_feasible_geometric(const Instance& instance, const ScheduleTrace& trace) {
    validate_trace(instance, trace);
    const TimeValue& w = instance.window();
    const std::size_t n = instance.size();

    // As a function of the window's left end x, a job on [a, c) with c > a is
    // met for x in (a - W, c); a zero-job at t is met for x in (t - W, t].
    std::vector<TimeValue> events;
    events.reserve(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        events.push_back(trace.starts[k] - w);
        events.push_back(trace.completions[k]);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    std::vector<TimeValue> probes = events;
    for (std::size_t k = 0; k + 1 < events.size(); ++k) probes.push_back((events[k] + events[k + 1]) / Rational(2));

    const auto count_at = [&](const TimeValue& x) {
        std::size_t met = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const TimeValue& a = trace.starts[k];
            const TimeValue& c = trace.completions[k];
            const bool hit = (c > a) ? (a - w < x && x < c) : (a - w < x && x <= a);
            met += hit ? 1 : 0;
        }
        return met;
    };
    const auto limit = static_cast<std::size_t>(instance.b());
    return std::none_of(probes.begin(), probes.end(), [&](const TimeValue& x) { return count_at(x) > limit; });
}

TimeValue total_execution(const Instance& instance) {
    return std::accumulate(instance.jobs().begin(), instance.jobs().end(), TimeValue{});
}

TimeValue lower_bound(const Instance& instance) {
    TimeValue sum = total_execution(instance);
    const auto n = static_cast<long>(instance.size());
    const long b = instance.b();
    if (n <= b) return sum;
    TimeValue packing = instance.window() * Rational(n - b, b);
    return max(sum, packing);
}

bool check_prefix_dominance(std::span<const Rational> x, std::span<const Rational> y) {
    if (x.size() != y.size()) throw Error(ErrorKind::invalid_input, "sequences differ in length");
    if (x.empty()) throw Error(ErrorKind::invalid_input, "sequences must be nonempty");
    Rational px;
    Rational py;
    for (std::size_t i = 0; i < x.size(); ++i) {
        px += x[i];
        py += y[i];
        if (px > py) return false;
    }
    return true;
}

}  // namespace trsched
