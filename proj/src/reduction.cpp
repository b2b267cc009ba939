#include "trsched/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace trsched {

PartitionInstance::PartitionInstance(std::vector<std::int64_t> values) : values_(std::move(values)) {
    if (values_.empty()) throw Error(ErrorKind::invalid_input, "partition instance is empty", "/values");
    if (values_.size() % 2 != 0) {
        throw Error(ErrorKind::invalid_input, "partition instance needs an even number of values", "/values");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 1) {
            throw Error(ErrorKind::invalid_input, "partition values must be >= 1", "/values/" + std::to_string(i));
        }
    }
}

std::int64_t PartitionInstance::total() const {
    return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

ReductionImage build_reduction(const PartitionInstance& part) {
    const std::int64_t total = part.total();
    if (total % 2 != 0) {
        throw Error(ErrorKind::invalid_input, "partition total " + std::to_string(total) + " is odd");
    }
    const TimeValue u(static_cast<long>(total / 2));
    std::vector<TimeValue> jobs;
    jobs.reserve(part.values().size() + 3);
    for (const std::int64_t a : part.values()) jobs.emplace_back(static_cast<long>(a));
    jobs.emplace_back(0);
    jobs.emplace_back(0);
    jobs.push_back(u);
    const auto m = static_cast<long>(part.half());
    return ReductionImage{Instance(2, u, std::move(jobs)), u * Rational(m + 2), u};
}

bool is_balanced_split(const PartitionInstance& part, const Split& split) {
    const std::size_t n = part.values().size();
    const std::size_t m = part.half();
    if (split.side1.size() != m || split.side2.size() != m) return false;
    std::vector<bool> seen(n, false);
    std::int64_t sum1 = 0;
    std::int64_t sum2 = 0;
    for (const auto* side : {&split.side1, &split.side2}) {
        for (const std::size_t i : *side) {
            if (i >= n || seen[i]) return false;
            seen[i] = true;
            (side == &split.side1 ? sum1 : sum2) += part.values()[i];
        }
    }
    return sum1 == sum2;
}

ScheduleTrace build_witness_schedule(const PartitionInstance& part, const Split& split) {
    if (!is_balanced_split(part, split)) {
        throw Error(ErrorKind::invalid_input, "sides are not an equal-size equal-sum partition");
    }
    const auto& a = part.values();
    std::vector<std::size_t> descending = split.side1;
    std::vector<std::size_t> ascending = split.side2;
    std::stable_sort(descending.begin(), descending.end(), [&](std::size_t x, std::size_t y) { return a[x] > a[y]; });
    std::stable_sort(ascending.begin(), ascending.end(), [&](std::size_t x, std::size_t y) { return a[x] < a[y]; });

    const ImageSlots slots = ImageSlots::of(part);
    std::vector<std::size_t> order;
    order.reserve(a.size() + 3);
    order.push_back(slots.first_zero);
    for (std::size_t j = 0; j < part.half(); ++j) {
        order.push_back(descending[j]);
        order.push_back(ascending[j]);
    }
    order.push_back(slots.long_job);
    order.push_back(slots.second_zero);

    const ReductionImage image = build_reduction(part);
    ScheduleTrace trace = evaluate_greedy(image.instance, Permutation(std::move(order)));
    if (trace.makespan != image.threshold || !witness_prefix_condition(part, trace)) {
        throw Error(ErrorKind::internal, "witness schedule misses the threshold");
    }
    return trace;
}

bool witness_prefix_condition(const PartitionInstance& part, const ScheduleTrace& trace) {
    const std::size_t m = part.half();
    std::vector<Rational> odd;
    std::vector<Rational> even;
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t p = trace.order[1 + 2 * j];
        const std::size_t q = trace.order[2 + 2 * j];
        if (p >= part.values().size() || q >= part.values().size()) return false;
        odd.emplace_back(static_cast<long>(part.values()[p]));
        even.emplace_back(static_cast<long>(part.values()[q]));
    }
    return check_prefix_dominance(even, odd);
}

Decision decide_partition_detailed(const PartitionInstance& part, std::size_t limit) {
    Decision decision;
    if (part.total() % 2 != 0) return decision;
    decision.image = build_reduction(part);
    decision.exact = solve_exact(decision.image->instance, limit);
    decision.yes = decision.exact->optimum <= decision.image->threshold;
    return decision;
}

bool decide_partition(const PartitionInstance& part, std::size_t limit) {
    return decide_partition_detailed(part, limit).yes;
}

namespace {

// Puts the two zero-jobs at the ends of `order`, first by swapping them with
// the current end jobs, then (if that loses the threshold) by moving them.
std::vector<std::size_t> normalize_ends(const ReductionImage& image, const ImageSlots& slots,
                                        std::vector<std::size_t> order) {
    const auto is_zero_slot = [&](std::size_t j) { return j == slots.first_zero || j == slots.second_zero; };
    if (is_zero_slot(order.front()) && is_zero_slot(order.back())) return order;

    std::vector<std::size_t> swapped = order;
    const auto first_zero = std::find_if(swapped.begin(), swapped.end(), is_zero_slot);
    std::iter_swap(swapped.begin(), first_zero);
    const auto second_zero = std::find_if(swapped.begin() + 1, swapped.end(), is_zero_slot);
    std::iter_swap(swapped.end() - 1, second_zero);
    if (greedy_makespan(image.instance, Permutation(swapped)) == image.threshold) return swapped;

    std::vector<std::size_t> moved;
    moved.reserve(order.size());
    std::vector<std::size_t> zeros;
    for (const std::size_t j : order) (is_zero_slot(j) ? zeros : moved).push_back(j);
    moved.insert(moved.begin(), zeros[0]);
    moved.push_back(zeros[1]);
    if (greedy_makespan(image.instance, Permutation(moved)) == image.threshold) return moved;

    throw Error(ErrorKind::inconsistent, "trace cannot be normalized to zero-jobs at both ends within the threshold");
}

}  // namespace

Split extract_partition(const PartitionInstance& part, const ScheduleTrace& trace) {
    const ReductionImage image = build_reduction(part);
    if (!check_feasible(image.instance, trace)) {
        throw Error(ErrorKind::inconsistent, "trace is not feasible for the reduction image");
    }
    if (trace.makespan != image.threshold) {
        throw Error(ErrorKind::inconsistent,
                    "trace makespan " + trace.makespan.str() + " differs from threshold " + image.threshold.str());
    }
    const ImageSlots slots = ImageSlots::of(part);
    const std::vector<std::size_t> order = normalize_ends(image, slots, trace.order.order());
    const std::size_t m = part.half();

    std::vector<std::size_t> odd;
    std::vector<std::size_t> even;
    for (std::size_t k = 1; k <= 2 * m + 1; ++k) (k % 2 == 1 ? odd : even).push_back(order[k]);

    // The long job sits among the odd positions; among equal-length
    // candidates the highest index plays its role.
    std::optional<std::size_t> stand_in;
    for (const std::size_t j : odd) {
        if (image.instance.job(j) == image.u && (!stand_in || j > *stand_in)) stand_in = j;
    }
    if (!stand_in) throw Error(ErrorKind::internal, "no job of length U at an odd position");
    odd.erase(std::find(odd.begin(), odd.end(), *stand_in));
    if (*stand_in != slots.long_job) {
        // The real long job then sits among the even positions; it is
        // interchangeable with the value job that took its role.
        auto it = std::find(even.begin(), even.end(), slots.long_job);
        if (it == even.end()) throw Error(ErrorKind::internal, "long job missing from the trace middle");
        *it = *stand_in;
    }

    Split split{std::move(odd), std::move(even)};
    std::sort(split.side1.begin(), split.side1.end());
    std::sort(split.side2.begin(), split.side2.end());
    if (!is_balanced_split(part, split)) {
        throw Error(ErrorKind::internal, "extracted sides are not an equal-sum partition");
    }
    return split;
}

}  // namespace trsched
