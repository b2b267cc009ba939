#include "support/oracles.hpp"
#include "trsched/exact.hpp"

#include <doctest.h>

using namespace trsched;

TEST_SUITE("exact") {
    TEST_CASE("examples") {
        const Instance halves(2, Rational(1), {Rational(1, 2), Rational(1, 2), Rational(1, 2)});
        CHECK(solve_exact(halves).optimum == Rational(2));
        CHECK(solve_exact_unpruned(halves).optimum == Rational(2));

        const Instance pair(3, Rational(1), {Rational(1, 3), Rational(2, 3), Rational(1)});
        CHECK(solve_exact(pair).optimum == Rational(2));

        // Image of the partition instance {2, 2}.
        const Instance image(2, Rational(2), {Rational(2), Rational(2), Rational(0), Rational(0), Rational(2)});
        CHECK(solve_exact(image).optimum == Rational(6));
        CHECK(solve_exact_unpruned(image).optimum == Rational(6));

        CHECK(solve_exact_unpruned(Instance(2, Rational(1), {Rational(3, 7)})).optimum == Rational(3, 7));

        const Instance mixed(2, Rational(1), {Rational(3, 10), Rational(1), Rational(1, 2)});
        const ExactResult best = solve_exact_unpruned(mixed);
        CHECK(best.optimum == Rational(9, 5));
        CHECK(best.explored == 6);
        CHECK(solve_exact(mixed).optimum == Rational(9, 5));
    }

    TEST_CASE("witness is an optimal feasible trace") {
        const Instance mixed(2, Rational(1), {Rational(3, 10), Rational(1), Rational(1, 2), Rational(0)});
        const ExactResult r = solve_exact(mixed);
        CHECK(r.witness.makespan == r.optimum);
        CHECK(check_feasible(mixed, r.witness));
        CHECK(r.witness == evaluate_greedy(mixed, r.witness.order));
        // Two smallest at the ends: job 4 (size 0) first, job 1 (size 3/10) last.
        CHECK(r.witness.order[0] == 3);
        CHECK(r.witness.order[3] == 0);
    }

    TEST_CASE("refuses instances above the limit") {
        const Instance big(2, Rational(1), std::vector<TimeValue>(13, Rational(1, 2)));
        CHECK_THROWS_AS((void)solve_exact(big), Error);
        CHECK_THROWS_AS((void)solve_exact_unpruned(Instance(2, Rational(1), std::vector<TimeValue>(10, Rational(1)))),
                        Error);
        try {
            (void)solve_exact(big, 5);
            FAIL("expected refusal");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::refused);
            CHECK(std::string(e.what()).find("limit 5") != std::string::npos);
        }
    }

    TEST_CASE("property: pruning keeps the optimum") {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 80; ++trial) {
            const auto n = static_cast<std::size_t>(1 + trial % 7);
            const Instance inst = oracle::random_grid_instance(rng, n, 2 + trial % 3, 0.3);
            const ExactResult pruned = solve_exact(inst);
            const ExactResult plain = solve_exact_unpruned(inst);
            CHECK(pruned.optimum == plain.optimum);
            CHECK(pruned.explored <= plain.explored);
            CHECK(pruned.optimum >= lower_bound(inst));
            CHECK(check_feasible(inst, pruned.witness));
        }
    }

    TEST_CASE("property: appending a job never lowers the optimum") {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 40; ++trial) {
            const Instance base = oracle::random_grid_instance(rng, 2 + static_cast<std::size_t>(trial % 5), 2 + trial % 2);
            std::vector<TimeValue> more = base.jobs();
            more.push_back(oracle::random_rational(rng, 4, 4));
            const Instance grown(base.b(), base.window(), more);
            CHECK(solve_exact(grown).optimum >= solve_exact(base).optimum);
        }
    }

    TEST_CASE("explored counts are reproducible") {
        std::mt19937_64 rng(9);
        const Instance inst = oracle::random_grid_instance(rng, 7, 2);
        const ExactResult a = solve_exact(inst);
        const ExactResult b = solve_exact(inst);
        CHECK(a.explored == b.explored);
        CHECK(a.witness == b.witness);
    }
}
