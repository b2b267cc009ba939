#include "trsched/heuristics.hpp"

#include <algorithm>

namespace trsched {

Permutation lpt_order(const Instance& instance) {
    std::vector<std::size_t> order = Permutation::identity(instance.size()).order();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return instance.job(b) < instance.job(a); });
    return Permutation(std::move(order));
}

ScheduleTrace lpt_schedule(const Instance& instance) { return evaluate_greedy(instance, lpt_order(instance)); }

TimeValue lpt_bound(const Instance& instance, const TimeValue& opt) {
    const Rational factor = Rational(2) - Rational(2, instance.b());
    return factor * opt + instance.window();
}

bool check_lpt_bound(const Instance& instance, const TimeValue& opt) {
    return lpt_schedule(instance).makespan <= lpt_bound(instance, opt);
}

}  // namespace trsched
