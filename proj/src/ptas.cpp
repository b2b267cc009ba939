#include "trsched/ptas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <unordered_map>

namespace trsched {

PtasConfig::PtasConfig(Rational epsilon) : epsilon_(std::move(epsilon)) {
    if (epsilon_.sign() <= 0 || epsilon_ >= Rational(1)) {
        throw Error(ErrorKind::invalid_input, "epsilon must lie in (0, 1)", "epsilon");
    }
    const Rational target = Rational(1) / epsilon_;
    const Rational growth = Rational(1) + epsilon_;
    Rational power = growth;
    while (power < target) {
        power *= growth;
        ++tau_;
    }
}

Rational PtasConfig::ladder_value(int k) const {
    return epsilon_ * pow(Rational(1) + epsilon_, static_cast<unsigned>(k));
}

std::vector<TimeValue> idle_ladder(const PtasConfig& cfg) {
    std::vector<TimeValue> ladder;
    ladder.reserve(static_cast<std::size_t>(cfg.tau()) + 1);
    for (int k = 0; k <= cfg.tau(); ++k) ladder.push_back(cfg.ladder_value(k));
    return ladder;
}

int round_exponent(const TimeValue& s, const PtasConfig& cfg) {
    if (s <= cfg.epsilon()) return 0;
    const Rational growth = Rational(1) + cfg.epsilon();
    Rational value = cfg.epsilon() * growth;
    int k = 1;
    while (value < s) {
        value *= growth;
        ++k;
    }
    return k;
}

RoundedInstance round_instance(const Instance& instance, const PtasConfig& cfg) {
    if (instance.window() != Rational(1)) {
        throw Error(ErrorKind::invalid_input, "the approximation scheme needs window 1; rescale the instance first",
                    "/window");
    }
    std::vector<int> job_exponent;
    job_exponent.reserve(instance.size());
    for (const TimeValue& s : instance.jobs()) job_exponent.push_back(round_exponent(s, cfg));

    RoundedInstance rounded;
    rounded.b = instance.b();
    rounded.exponents = job_exponent;
    std::sort(rounded.exponents.begin(), rounded.exponents.end());
    rounded.exponents.erase(std::unique(rounded.exponents.begin(), rounded.exponents.end()), rounded.exponents.end());
    for (const int k : rounded.exponents) rounded.classes.push_back(cfg.ladder_value(k));
    rounded.counts.assign(rounded.exponents.size(), 0);
    for (const int k : job_exponent) {
        const auto c = static_cast<std::size_t>(
            std::lower_bound(rounded.exponents.begin(), rounded.exponents.end(), k) - rounded.exponents.begin());
        rounded.origin.push_back(c);
        ++rounded.counts[c];
    }
    return rounded;
}

namespace {

// Memoized recursion over DP states with every length scaled to an integer
// multiple of 1 / q^(top + 1), where eps = p / q and top is the largest ladder
// exponent in use. `Int` is std::int64_t when all sums provably fit, mpz_class
// otherwise.
template <class Int>
class DpEngine {
public:
    DpEngine(std::size_t b, std::vector<Int> class_len, std::vector<Int> idle_len, Int one,
             std::vector<std::size_t> counts)
        : b_(b), classes_(class_len.size()), class_len_(std::move(class_len)), idle_len_(std::move(idle_len)),
          one_(std::move(one)), total_(std::move(counts)) {}

    struct Outcome {
        Int value;
        std::vector<std::size_t> class_order;
        std::vector<int> idle_order;  // ladder index of each of the n - 1 idles
        std::size_t memo_states;
        std::size_t infeasible_states;
    };

    Outcome run() {
        std::size_t n = 0;
        for (const std::size_t c : total_) n += c;

        // Objective: the best value over every window that can end the schedule.
        Key top(classes_ + 2 * b_);
        std::copy(total_.begin(), total_.end(), top.begin());
        std::optional<Int> best;
        Key best_key;
        const bool leading = n == b_;
        std::vector<std::size_t> used(classes_, 0);
        enumerate_windows(top, 0, leading, used, [&](const Key& key) {
            const Entry entry = solve(key);
            if (entry.finite && (!best || entry.value < *best)) {
                best = entry.value;
                best_key = key;
            }
        });
        if (!best) throw Error(ErrorKind::internal, "dynamic program found no regular solution");

        Outcome out;
        out.value = *best;
        reconstruct(best_key, out);
        out.memo_states = memo_.size();
        out.infeasible_states = static_cast<std::size_t>(
            std::count_if(memo_.begin(), memo_.end(), [](const auto& kv) { return !kv.second.finite; }));
        return out;
    }

private:
    // counts[0..classes), then (idle + 1, cls) for each window slot.
    using Key = std::vector<std::uint32_t>;

    struct KeyHash {
        std::size_t operator()(const Key& key) const noexcept {
            std::size_t h = 0xcbf29ce484222325ULL;
            for (const std::uint32_t v : key) h = (h ^ v) * 0x100000001b3ULL;
            return h;
        }
    };

    struct Entry {
        bool finite = false;
        Int value{};
        int best_idle = 0;  // argmin of the predecessor slot
        int best_cls = 0;
    };

    [[nodiscard]] int slot_idle(const Key& key, std::size_t j) const {
        return static_cast<int>(key[classes_ + 2 * j]) - 1;
    }
    [[nodiscard]] std::size_t slot_cls(const Key& key, std::size_t j) const { return key[classes_ + 2 * j + 1]; }

    [[nodiscard]] std::size_t remaining(const Key& key) const {
        std::size_t sum = 0;
        for (std::size_t c = 0; c < classes_; ++c) sum += key[c];
        return sum;
    }

    // u_1 + v_1 + ... + v_{B-1} + u_B >= 1
    [[nodiscard]] bool window_feasible(const Key& key) const {
        Int span = idle_len_[static_cast<std::size_t>(slot_idle(key, 0))];
        for (std::size_t j = 0; j + 1 < b_; ++j) {
            span += class_len_[slot_cls(key, j)];
            span += idle_len_[static_cast<std::size_t>(slot_idle(key, j + 1))];
        }
        return span >= one_;
    }

    [[nodiscard]] bool count_consistent(const Key& key) const {
        std::vector<std::size_t> used(classes_, 0);
        for (std::size_t j = 0; j < b_; ++j) {
            const std::size_t c = slot_cls(key, j);
            if (++used[c] > key[c]) return false;
        }
        return true;
    }

    Entry solve(const Key& key) {
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Entry entry = compute(key);
        memo_.emplace(key, entry);
        return entry;
    }

    Entry compute(const Key& key) {
        Entry entry;
        if (!count_consistent(key)) return entry;
        const std::size_t left = remaining(key);
        const std::size_t last_cls = slot_cls(key, b_ - 1);
        const auto last_idle = slot_idle(key, b_ - 1);

        if (left == b_) {
            // First B jobs: no window spans B + 1 of them.
            if (slot_idle(key, 0) != WindowSlot::kLeadingIdle) return entry;
            entry.finite = true;
            entry.value = class_len_[slot_cls(key, 0)];
            for (std::size_t j = 1; j < b_; ++j) {
                entry.value += idle_len_[static_cast<std::size_t>(slot_idle(key, j))];
                entry.value += class_len_[slot_cls(key, j)];
            }
            return entry;
        }
        if (slot_idle(key, 0) == WindowSlot::kLeadingIdle || !window_feasible(key)) return entry;

        // Drop the last job and open a new first slot (idle x, class y).
        Key prev(key.size());
        std::copy(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(classes_), prev.begin());
        --prev[last_cls];
        for (std::size_t j = 0; j + 1 < b_; ++j) {
            prev[classes_ + 2 * (j + 1)] = key[classes_ + 2 * j];
            prev[classes_ + 2 * (j + 1) + 1] = key[classes_ + 2 * j + 1];
        }
        std::vector<std::size_t> in_window(classes_, 0);
        for (std::size_t j = 0; j + 1 < b_; ++j) ++in_window[slot_cls(key, j)];

        const bool reaches_start = left - 1 == b_;
        const int x_lo = reaches_start ? WindowSlot::kLeadingIdle : 0;
        const int x_hi = reaches_start ? WindowSlot::kLeadingIdle : static_cast<int>(idle_len_.size()) - 1;
        for (int x = x_lo; x <= x_hi; ++x) {
            for (std::size_t y = 0; y < classes_; ++y) {
                if (prev[y] <= in_window[y]) continue;
                prev[classes_] = static_cast<std::uint32_t>(x + 1);
                prev[classes_ + 1] = static_cast<std::uint32_t>(y);
                const Entry sub = solve(prev);
                if (!sub.finite) continue;
                if (!entry.finite || sub.value < entry.value) {
                    entry.finite = true;
                    entry.value = sub.value;
                    entry.best_idle = x;
                    entry.best_cls = static_cast<int>(y);
                }
            }
        }
        if (entry.finite) {
            entry.value += idle_len_[static_cast<std::size_t>(last_idle)];
            entry.value += class_len_[last_cls];
        }
        return entry;
    }

    template <class Visit>
    void enumerate_windows(Key& key, std::size_t slot, bool leading, std::vector<std::size_t>& used, Visit&& visit) {
        if (slot == b_) {
            visit(key);
            return;
        }
        const int x_lo = (slot == 0 && leading) ? WindowSlot::kLeadingIdle : 0;
        const int x_hi = (slot == 0 && leading) ? WindowSlot::kLeadingIdle : static_cast<int>(idle_len_.size()) - 1;
        for (int x = x_lo; x <= x_hi; ++x) {
            for (std::size_t y = 0; y < classes_; ++y) {
                if (used[y] >= key[y]) continue;
                ++used[y];
                key[classes_ + 2 * slot] = static_cast<std::uint32_t>(x + 1);
                key[classes_ + 2 * slot + 1] = static_cast<std::uint32_t>(y);
                enumerate_windows(key, slot + 1, leading, used, visit);
                --used[y];
            }
        }
    }

    void reconstruct(Key key, Outcome& out) const {
        std::vector<std::size_t> classes_rev;
        std::vector<int> idles_rev;
        while (remaining(key) > b_) {
            const Entry& entry = memo_.at(key);
            classes_rev.push_back(slot_cls(key, b_ - 1));
            idles_rev.push_back(slot_idle(key, b_ - 1));
            Key prev(key.size());
            std::copy(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(classes_), prev.begin());
            --prev[slot_cls(key, b_ - 1)];
            for (std::size_t j = 0; j + 1 < b_; ++j) {
                prev[classes_ + 2 * (j + 1)] = key[classes_ + 2 * j];
                prev[classes_ + 2 * (j + 1) + 1] = key[classes_ + 2 * j + 1];
            }
            prev[classes_] = static_cast<std::uint32_t>(entry.best_idle + 1);
            prev[classes_ + 1] = static_cast<std::uint32_t>(entry.best_cls);
            key = std::move(prev);
        }
        for (std::size_t j = b_; j-- > 0;) {
            classes_rev.push_back(slot_cls(key, j));
            if (j > 0) idles_rev.push_back(slot_idle(key, j));
        }
        out.class_order.assign(classes_rev.rbegin(), classes_rev.rend());
        out.idle_order.assign(idles_rev.rbegin(), idles_rev.rend());
    }

    std::size_t b_;
    std::size_t classes_;
    std::vector<Int> class_len_;
    std::vector<Int> idle_len_;
    Int one_;
    std::vector<std::size_t> total_;
    std::unordered_map<Key, Entry, KeyHash> memo_;
};

template <class Int>
Int narrow(const mpz_class& z) {
    if constexpr (std::is_same_v<Int, mpz_class>) {
        return z;
    } else {
        return static_cast<Int>(z.get_si());
    }
}

template <class Int>
DpSolution run_engine(const RoundedInstance& rounded, const PtasConfig& cfg,
                      const std::vector<mpz_class>& class_len, const std::vector<mpz_class>& idle_len,
                      const mpz_class& one) {
    std::vector<Int> cls;
    std::vector<Int> idle;
    for (const auto& z : class_len) cls.push_back(narrow<Int>(z));
    for (const auto& z : idle_len) idle.push_back(narrow<Int>(z));
    DpEngine<Int> engine(static_cast<std::size_t>(rounded.b), std::move(cls), std::move(idle), narrow<Int>(one),
                         rounded.counts);
    auto out = engine.run();

    const auto scale = [&](const Int& v) {
        if constexpr (std::is_same_v<Int, mpz_class>) {
            return Rational(v, one);
        } else {
            return Rational(mpz_class(static_cast<long>(v)), one);
        }
    };
    DpSolution solution;
    solution.f_star = scale(out.value);
    solution.class_order = std::move(out.class_order);
    const std::vector<TimeValue> ladder = idle_ladder(cfg);
    for (const int x : out.idle_order) solution.idles.push_back(ladder.at(static_cast<std::size_t>(x)));
    solution.memo_states = out.memo_states;
    solution.infeasible_states = out.infeasible_states;
    return solution;
}

}  // namespace

DpSolution dp_solve(const RoundedInstance& rounded, const PtasConfig& cfg) {
    const std::size_t n = rounded.size();
    const auto b = static_cast<std::size_t>(rounded.b);
    if (n < b) {
        throw Error(ErrorKind::refused, "dynamic program needs at least B = " + std::to_string(b) + " jobs, got " +
                                            std::to_string(n));
    }
    const int top = std::max(cfg.tau(), rounded.exponents.empty() ? 0 : rounded.exponents.back());
    const mpz_class p = cfg.epsilon().numerator();
    const mpz_class q = cfg.epsilon().denominator();

    // eps (1 + eps)^k = p (p + q)^k / q^(k + 1); scale everything by q^(top + 1).
    const auto scaled = [&](int k) {
        mpz_class growth;
        mpz_class rest;
        mpz_pow_ui(growth.get_mpz_t(), mpz_class(p + q).get_mpz_t(), static_cast<unsigned long>(k));
        mpz_pow_ui(rest.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(top - k));
        return mpz_class(p * growth * rest);
    };
    mpz_class one;
    mpz_pow_ui(one.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(top + 1));
    std::vector<mpz_class> class_len;
    for (const int k : rounded.exponents) class_len.push_back(scaled(k));
    std::vector<mpz_class> idle_len;
    for (int k = 0; k <= cfg.tau(); ++k) idle_len.push_back(scaled(k));

    // Every partial value is at most n (largest class + largest idle).
    const mpz_class bound = mpz_class(static_cast<unsigned long>(n + 1)) *
                            (class_len.back() + idle_len.back() + one);
    const mpz_class int64_room = mpz_class(std::numeric_limits<std::int64_t>::max() / 4);
    if (bound < int64_room) {
        return run_engine<std::int64_t>(rounded, cfg, class_len, idle_len, one);
    }
    return run_engine<mpz_class>(rounded, cfg, class_len, idle_len, one);
}

double dp_state_ceiling(const RoundedInstance& rounded, const PtasConfig& cfg) {
    double ceiling = 1.0;
    for (const std::size_t c : rounded.counts) ceiling *= static_cast<double>(c + 1);
    const double b = rounded.b;
    const double classes = std::max<double>(static_cast<double>(rounded.classes.size()), cfg.tau() + 1.0);
    return ceiling * std::pow(cfg.tau() + 2.0, b) * std::pow(classes, b);
}

PtasResult ptas_solve(const Instance& instance, const PtasConfig& cfg) {
    RoundedInstance rounded = round_instance(instance, cfg);
    DpSolution dp = dp_solve(rounded, cfg);

    // Jobs of one class take the class's positions in ascending index order.
    std::vector<std::deque<std::size_t>> members(rounded.classes.size());
    for (std::size_t j = 0; j < instance.size(); ++j) members[rounded.origin[j]].push_back(j);
    std::vector<std::size_t> order;
    order.reserve(instance.size());
    for (const std::size_t c : dp.class_order) {
        order.push_back(members[c].front());
        members[c].pop_front();
    }

    PtasResult result{evaluate_greedy(instance, Permutation(std::move(order))), dp.f_star, std::move(rounded),
                      std::move(dp)};
    if (result.trace.makespan > result.f_star) {
        throw Error(ErrorKind::internal, "greedy re-placement exceeded the regular makespan");
    }
    return result;
}

}  // namespace trsched
