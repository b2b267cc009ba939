#include "trsched/exact.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace trsched {

namespace {

void check_limit(const Instance& instance, std::size_t limit) {
    if (instance.size() > limit) {
        throw Error(ErrorKind::refused, "exact solver refuses n = " + std::to_string(instance.size()) +
                                            " jobs (limit " + std::to_string(limit) + ")");
    }
}

class PrunedSearch {
public:
    explicit PrunedSearch(const Instance& instance)
        : inst_(instance), n_(instance.size()), b_(static_cast<std::size_t>(instance.b())),
          order_(n_), completions_(n_), used_(n_, false) {}

    ExactResult run() {
        std::vector<std::size_t> by_size(n_);
        std::iota(by_size.begin(), by_size.end(), std::size_t{0});
        std::stable_sort(by_size.begin(), by_size.end(),
                         [&](std::size_t a, std::size_t b) { return inst_.job(a) < inst_.job(b); });

        if (n_ == 1) {
            order_[0] = 0;
            place(0);
            record();
        } else {
            const std::size_t first = by_size[0];
            last_ = by_size[1];
            used_[first] = used_[last_] = true;
            order_[0] = first;
            place(0);
            extend(1);
        }
        ExactResult result;
        result.optimum = *best_;
        result.witness = evaluate_greedy(inst_, Permutation(best_order_));
        result.explored = explored_;
        return result;
    }

private:
    void place(std::size_t pos) {
        const TimeValue& s = inst_.job(order_[pos]);
        if (pos == 0) {
            completions_[0] = s;
        } else if (pos < b_) {
            completions_[pos] = completions_[pos - 1] + s;
        } else {
            completions_[pos] = max(completions_[pos - b_] + inst_.window(), completions_[pos - 1]) + s;
        }
    }

    bool exceeds_incumbent(std::size_t pos) const { return best_ && completions_[pos] > *best_; }

    void record() {
        ++explored_;
        if (!best_ || completions_[n_ - 1] < *best_) {
            best_ = completions_[n_ - 1];
            best_order_ = order_;
        }
    }

    void extend(std::size_t pos) {
        if (pos == n_ - 1) {
            order_[pos] = last_;
            place(pos);
            record();
            return;
        }
        for (std::size_t j = 0; j < n_; ++j) {
            if (used_[j]) continue;
            order_[pos] = j;
            place(pos);
            if (exceeds_incumbent(pos)) continue;
            used_[j] = true;
            extend(pos + 1);
            used_[j] = false;
        }
    }

    const Instance& inst_;
    std::size_t n_;
    std::size_t b_;
    std::size_t last_ = 0;
    std::vector<std::size_t> order_;
    std::vector<TimeValue> completions_;
    std::vector<bool> used_;
    std::optional<TimeValue> best_;
    std::vector<std::size_t> best_order_;
    std::uint64_t explored_ = 0;
};

}  // namespace

ExactResult solve_exact(const Instance& instance, std::size_t limit) {
    check_limit(instance, limit);
    return PrunedSearch(instance).run();
}

ExactResult solve_exact_unpruned(const Instance& instance, std::size_t limit) {
    check_limit(instance, limit);
    Permutation perm = Permutation::identity(instance.size());
    std::vector<std::size_t> order = perm.order();
    std::optional<TimeValue> best;
    std::vector<std::size_t> best_order;
    std::uint64_t explored = 0;
    do {
        TimeValue makespan = greedy_makespan(instance, Permutation(order));
        ++explored;
        if (!best || makespan < *best) {
            best = std::move(makespan);
            best_order = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));

    ExactResult result;
    result.optimum = *best;
    result.witness = evaluate_greedy(instance, Permutation(best_order));
    result.explored = explored;
    return result;
}

}  // namespace trsched
