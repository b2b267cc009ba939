#pragma once

#include "trsched/core.hpp"
#include "trsched/io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace trsched::bench {

struct SuiteEntry {
    std::string id;
    Instance instance;
};

struct Suite {
    std::vector<SuiteEntry> entries;
    std::vector<Rational> epsilons;
    std::size_t limit = 10;  // exact-solver job limit
};

/// Suite file:
///   {"limit": 10, "epsilons": ["1/2", "1/4"],
///    "instances": [{"id": "a", "b": 2, "window": "1", "jobs": ["1/2", ...]}, ...],
///    "random": [{"count": 5, "n": 6, "b": 2, "seed": 1, "zero_fraction": 0.2}]}
/// Random blocks expand to ids "r<seed>-<k>" with seeds seed, seed + 1, ...
[[nodiscard]] Suite parse_suite(std::string_view text);

struct PtasCell {
    TimeValue makespan;
    TimeValue f_star;
    double millis = 0.0;
};

struct BenchRow {
    std::string id;
    std::size_t n = 0;
    int b = 2;
    TimeValue opt;
    TimeValue lpt;
    TimeValue lower;
    std::vector<std::optional<PtasCell>> ptas;  // per epsilon; empty when not applicable
    double exact_millis = 0.0;
    double lpt_millis = 0.0;
};

struct BenchReport {
    std::vector<Rational> epsilons;
    std::vector<BenchRow> rows;
};

/// Solves every entry. Throws Error(internal) if a row breaks the LPT bound
/// or the lower bound.
[[nodiscard]] BenchReport run(const Suite& suite);

/// CSV: decimals with 6 significant digits, each followed by its exact p/q.
[[nodiscard]] std::string render_csv(const BenchReport& report, bool timing);

/// Tab-separated decimals for plotting.
[[nodiscard]] std::string render_tsv(const BenchReport& report, bool timing);

}  // namespace trsched::bench
