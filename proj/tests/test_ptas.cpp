#include "support/oracles.hpp"
#include "trsched/exact.hpp"
#include "trsched/ptas.hpp"

#include <doctest.h>

using namespace trsched;

namespace {

Rational q(long p, long d = 1) { return {p, d}; }

std::vector<Rational> rounded_sizes(const RoundedInstance& r) {
    std::vector<Rational> out;
    for (const std::size_t c : r.origin) out.push_back(r.classes[c]);
    return out;
}

}  // namespace

TEST_SUITE("ptas") {
    TEST_CASE("config and ladders") {
        CHECK(PtasConfig(q(1, 2)).tau() == 2);
        CHECK(idle_ladder(PtasConfig(q(1, 2))) == std::vector<TimeValue>{q(1, 2), q(3, 4), q(9, 8)});
        CHECK(PtasConfig(q(9, 10)).tau() == 1);
        CHECK(idle_ladder(PtasConfig(q(9, 10))) == std::vector<TimeValue>{q(9, 10), q(171, 100)});
        CHECK(PtasConfig(q(1, 4)).tau() == 7);
        for (const Rational& eps : {q(1, 100), q(1, 7), q(1, 3), q(2, 3), q(99, 100)}) {
            const PtasConfig cfg(eps);
            const auto ladder = idle_ladder(cfg);
            CHECK(ladder.back() >= q(1));
            CHECK(ladder[ladder.size() - 2] < q(1));
        }
        CHECK_THROWS_AS(PtasConfig(q(0)), Error);
        CHECK_THROWS_AS(PtasConfig(q(1)), Error);
        CHECK_THROWS_AS(PtasConfig(q(3, 2)), Error);
    }

    TEST_CASE("rounding examples") {
        const PtasConfig half(q(1, 2));
        const RoundedInstance r = round_instance(Instance(2, q(1), {q(3, 10), q(1, 2), q(3, 5), q(0), q(1)}), half);
        CHECK(r.classes == std::vector<TimeValue>{q(1, 2), q(3, 4), q(9, 8)});
        CHECK(r.exponents == std::vector<int>{0, 1, 2});
        CHECK(r.counts == std::vector<std::size_t>{3, 1, 1});
        CHECK(rounded_sizes(r) == std::vector<Rational>{q(1, 2), q(1, 2), q(3, 4), q(1, 2), q(9, 8)});

        CHECK_THROWS_AS((void)round_instance(Instance(2, q(2), {q(1)}), half), Error);
    }

    TEST_CASE("property: rounding stays within (1 + eps) or eps") {
        std::mt19937_64 rng(4);
        for (const Rational& eps : {q(1, 2), q(1, 4), q(1, 10), q(3, 7)}) {
            const PtasConfig cfg(eps);
            for (int trial = 0; trial < 200; ++trial) {
                const Rational s = oracle::random_rational(rng, 1000, 1000);
                const Rational r = cfg.ladder_value(round_exponent(s, cfg));
                CHECK(s <= r);
                CHECK(r <= max((Rational(1) + eps) * s, eps));
            }
        }
    }

    TEST_CASE("dp examples") {
        const PtasConfig half(q(1, 2));
        const auto solve = [&](std::vector<TimeValue> jobs) {
            return dp_solve(round_instance(Instance(2, q(1), std::move(jobs)), half), half);
        };
        CHECK(solve({q(1, 2), q(1, 2)}).f_star == q(3, 2));
        CHECK(solve({q(1, 2), q(1, 2), q(1, 2)}).f_star == q(5, 2));
        const DpSolution mixed = solve({q(1, 2), q(3, 4)});
        CHECK(mixed.f_star == q(7, 4));
        CHECK(mixed.idles == std::vector<TimeValue>{q(1, 2)});

        CHECK_THROWS_AS((void)dp_solve(round_instance(Instance(3, q(1), {q(1), q(1)}), half), half), Error);
    }

    TEST_CASE("ptas examples") {
        const PtasConfig half(q(1, 2));
        const Instance three(2, q(1), {q(1, 2), q(1, 2), q(1, 2)});
        const PtasResult a = ptas_solve(three, half);
        CHECK(a.trace.makespan == q(2));
        CHECK(a.f_star == q(5, 2));

        const Instance pair(2, q(1), {q(3, 10), q(3, 5)});
        const PtasResult b = ptas_solve(pair, half);
        CHECK(b.f_star == q(7, 4));
        CHECK(b.trace.makespan == q(9, 10));

        const Instance wide(4, q(1), {q(1, 3), q(0), q(1), q(2, 9)});
        CHECK(ptas_solve(wide, PtasConfig(q(1, 4))).trace.makespan == q(1, 3) + q(1) + q(2, 9));

        CHECK_THROWS_AS((void)ptas_solve(Instance(2, q(2), {q(1), q(1), q(1)}), half), Error);
        CHECK_THROWS_AS((void)ptas_solve(Instance(3, q(1), {q(1), q(1)}), half), Error);
    }

    TEST_CASE("property: rounded sizes keep a feasible schedule feasible") {
        std::mt19937_64 rng(12);
        std::uniform_int_distribution<int> gap(0, 8);
        for (const Rational& eps : {q(1, 2), q(1, 4), q(1, 10)}) {
            const PtasConfig cfg(eps);
            for (int trial = 0; trial < 120; ++trial) {
                const Instance inst = oracle::random_grid_instance(rng, 2 + static_cast<std::size_t>(trial % 7), 2 + trial % 3);
                std::vector<std::size_t> order = Permutation::identity(inst.size()).order();
                std::shuffle(order.begin(), order.end(), rng);
                std::vector<TimeValue> gaps;
                for (std::size_t k = 0; k + 1 < inst.size(); ++k) gaps.emplace_back(gap(rng), 8);
                const ScheduleTrace t = trace_from_gaps(inst, Permutation(order), gaps);
                if (!check_feasible(inst, t)) continue;
                const Instance rounded(inst.b(), inst.window(), rounded_sizes(round_instance(inst, cfg)));
                CHECK(check_feasible(rounded, trace_from_gaps(rounded, Permutation(order), gaps)));
            }
        }
    }

    TEST_CASE("property: dp matches brute force over regular solutions") {
        std::mt19937_64 rng(21);
        for (const Rational& eps : {q(1, 2), q(1, 4)}) {
            const PtasConfig cfg(eps);
            const auto ladder = idle_ladder(cfg);
            for (int trial = 0; trial < 40; ++trial) {
                const int b = 2 + trial % 2;
                const auto n = static_cast<std::size_t>(b + trial % 3);
                const Instance inst = oracle::random_grid_instance(rng, n, b);
                const RoundedInstance r = round_instance(inst, cfg);
                const DpSolution dp = dp_solve(r, cfg);
                CHECK(dp.f_star == oracle::brute_force_regular(rounded_sizes(r), ladder, b));
            }
        }
    }

    TEST_CASE("big-integer ladder path agrees with rational brute force") {
        // eps = 3/37 puts the common denominator far beyond 64 bits.
        const PtasConfig cfg(q(3, 37));
        const Instance inst(2, q(1), {q(1, 2), q(0), q(9, 10)});
        const RoundedInstance r = round_instance(inst, cfg);
        const DpSolution dp = dp_solve(r, cfg);
        CHECK(dp.f_star == oracle::brute_force_regular_exact(rounded_sizes(r), idle_ladder(cfg), 2));
    }

    TEST_CASE("reconstruction is a regular solution of value f*") {
        std::mt19937_64 rng(99);
        for (const Rational& eps : {q(1, 2), q(1, 4), q(1, 3)}) {
            const PtasConfig cfg(eps);
            const auto ladder = idle_ladder(cfg);
            for (int trial = 0; trial < 30; ++trial) {
                const int b = 2 + trial % 3;
                const Instance inst = oracle::random_grid_instance(rng, static_cast<std::size_t>(b + trial % 4), b);
                const RoundedInstance r = round_instance(inst, cfg);
                const DpSolution dp = dp_solve(r, cfg);
                REQUIRE(dp.class_order.size() == inst.size());
                REQUIRE(dp.idles.size() + 1 == inst.size());
                std::vector<TimeValue> sizes;
                for (const std::size_t c : dp.class_order) sizes.push_back(r.classes[c]);
                for (const auto& x : dp.idles) CHECK(std::find(ladder.begin(), ladder.end(), x) != ladder.end());
                const Instance regular(b, q(1), sizes);
                const ScheduleTrace t = trace_from_gaps(regular, Permutation::identity(sizes.size()), dp.idles);
                CHECK(t.makespan == dp.f_star);
                CHECK(check_feasible(regular, t));
                CHECK(static_cast<double>(dp.memo_states) <= dp_state_ceiling(r, cfg));

                const PtasResult res = ptas_solve(inst, cfg);
                CHECK(check_feasible(inst, res.trace));
                CHECK(res.trace.makespan <= res.f_star);
                CHECK(solve_exact(inst).optimum <= res.trace.makespan);
            }
        }
    }

    TEST_CASE("deterministic reconstruction") {
        std::mt19937_64 rng(5);
        const Instance inst = oracle::random_grid_instance(rng, 6, 2);
        const PtasConfig cfg(q(1, 4));
        const PtasResult a = ptas_solve(inst, cfg);
        const PtasResult b = ptas_solve(inst, cfg);
        CHECK(a.trace == b.trace);
        CHECK(a.dp.class_order == b.dp.class_order);
        CHECK(a.dp.idles == b.dp.idles);
    }
}
