#include "trsched/cli.hpp"

#include "trsched/bench.hpp"
#include "trsched/exact.hpp"
#include "trsched/heuristics.hpp"
#include "trsched/io.hpp"
#include "trsched/ptas.hpp"
#include "trsched/reduction.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace trsched {

namespace {

using io::json;

void report_error(std::ostream& err, const std::string& kind, const std::string& message,
                  const std::string& field = {}) {
    json body{{"kind", kind}, {"message", message}};
    if (!field.empty()) body["field"] = field;
    err << json{{"error", body}}.dump() << "\n";
}

// "1,3,2" or a path to a JSON array of 1-based indices.
Permutation read_permutation(const std::string& arg) {
    if (!arg.empty() && arg.find_first_not_of("0123456789, ") == std::string::npos) {
        std::vector<std::size_t> order;
        std::stringstream in(arg);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.find_first_not_of(' ') == std::string::npos) continue;
            const unsigned long v = std::stoul(item);
            if (v == 0) throw Error(ErrorKind::parse, "permutation entries are 1-based", "/perm");
            order.push_back(v - 1);
        }
        return Permutation(std::move(order));
    }
    return io::permutation_from_json(io::parse_json(io::read_file(arg)));
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::invalid_input, "cannot write '" + path + "'");
    f << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Single-processor scheduling under the B-constraint"};
    app.name("trsched");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");
    app.option_defaults()->always_capture_default();

    std::string instance_path;
    std::string perm_arg;
    std::string partition_path;
    std::string epsilon_text;
    std::string suite_path;
    std::string csv_path;
    std::string tsv_path;
    bool no_timing = false;
    std::size_t limit = kDefaultExactLimit;
    std::size_t n = 8;
    int b = 2;
    std::uint64_t seed = 0;
    double zero_fraction = 0.0;
    std::size_t m = 2;
    std::int64_t max_value = 10;

    auto* eval = app.add_subcommand("eval", "Greedy placement of a permutation and its feasibility");
    eval->add_option("instance", instance_path, "Instance JSON file")->required();
    eval->add_option("perm", perm_arg, "1-based order, e.g. 2,1,3, or a JSON file with that array")->required();

    auto* opt = app.add_subcommand("opt", "Exact optimum by permutation search");
    opt->add_option("instance", instance_path, "Instance JSON file")->required();
    opt->add_option("--limit", limit, "Refuse instances with more jobs than this");

    auto* lpt = app.add_subcommand("lpt", "Longest-processing-time-first schedule");
    lpt->add_option("instance", instance_path, "Instance JSON file")->required();

    auto* ptas = app.add_subcommand("ptas", "Rounding + dynamic-programming approximation");
    ptas->add_option("instance", instance_path, "Instance JSON file (window 1)")->required();
    ptas->add_option("--epsilon", epsilon_text, "Accuracy as an exact rational, e.g. 1/4")->required();

    auto* reduce = app.add_subcommand("reduce", "Scheduling image of a cardinality-constrained partition instance");
    reduce->add_option("partition", partition_path, "Partition JSON file")->required();

    auto* decide = app.add_subcommand("decide", "Decide a partition instance through its scheduling image");
    decide->add_option("partition", partition_path, "Partition JSON file")->required();
    decide->add_option("--limit", limit, "Exact-solver job limit");

    auto* gen = app.add_subcommand("gen", "Random instance with sizes k/1000");
    gen->add_option("--n", n, "Number of jobs")->required();
    gen->add_option("--b", b, "Constraint bound B");
    gen->add_option("--seed", seed, "Generator seed");
    gen->add_option("--zero-fraction", zero_fraction, "Share of jobs forced to zero");

    auto* genpart = app.add_subcommand("genpart", "Random partition instance with an even total");
    genpart->add_option("--m", m, "Half the number of values")->required();
    genpart->add_option("--max-value", max_value, "Largest value");
    genpart->add_option("--seed", seed, "Generator seed");

    auto* bench = app.add_subcommand("bench", "Solve a suite with every method and tabulate");
    bench->add_option("--suite", suite_path, "Suite JSON file")->required();
    bench->add_option("--csv", csv_path, "Write the CSV here instead of stdout");
    bench->add_option("--tsv", tsv_path, "Also write a plot-ready TSV");
    bench->add_flag("--no-timing", no_timing, "Omit wall-time columns (byte-stable output)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        report_error(err, "usage", e.what());
        return kExitUsage;
    }

    try {
        if (eval->parsed()) {
            const Instance inst = io::parse_instance(io::read_file(instance_path));
            const ScheduleTrace trace = evaluate_greedy(inst, read_permutation(perm_arg));
            out << io::emit(json{{"trace", io::to_json(trace)},
                                 {"feasible", check_feasible(inst, trace)},
                                 {"feasible_geometric", check_feasible_geometric(inst, trace)}});
        } else if (opt->parsed()) {
            const Instance inst = io::parse_instance(io::read_file(instance_path));
            const ExactResult res = solve_exact(inst, limit);
            out << io::emit(json{{"optimum", res.optimum.str()},
                                 {"witness", io::to_json(res.witness)},
                                 {"explored", res.explored},
                                 {"lower_bound", lower_bound(inst).str()}});
        } else if (lpt->parsed()) {
            const Instance inst = io::parse_instance(io::read_file(instance_path));
            out << io::emit(json{{"trace", io::to_json(lpt_schedule(inst))}, {"lower_bound", lower_bound(inst).str()}});
        } else if (ptas->parsed()) {
            const Instance inst = io::parse_instance(io::read_file(instance_path));
            Rational eps;
            try {
                eps = Rational::parse(epsilon_text);
            } catch (const std::invalid_argument& e) {
                throw Error(ErrorKind::parse, e.what(), "--epsilon");
            }
            const PtasConfig cfg(eps);
            const PtasResult res = ptas_solve(inst, cfg);
            json classes = json::array();
            for (const auto& c : res.rounded.classes) classes.push_back(c.str());
            out << io::emit(json{{"epsilon", cfg.epsilon().str()},
                                 {"tau", cfg.tau()},
                                 {"classes", classes},
                                 {"counts", res.rounded.counts},
                                 {"f_star", res.f_star.str()},
                                 {"memo_states", res.dp.memo_states},
                                 {"trace", io::to_json(res.trace)}});
        } else if (reduce->parsed()) {
            const PartitionInstance part = io::parse_partition(io::read_file(partition_path));
            out << io::emit(io::to_json(build_reduction(part)));
        } else if (decide->parsed()) {
            const PartitionInstance part = io::parse_partition(io::read_file(partition_path));
            out << (decide_partition(part, limit) ? "YES" : "NO") << "\n";
        } else if (gen->parsed()) {
            out << io::emit(io::to_json(io::gen_random(n, b, seed, zero_fraction)));
        } else if (genpart->parsed()) {
            out << io::emit(io::to_json(io::gen_partition(m, max_value, seed)));
        } else if (bench->parsed()) {
            const bench::Suite suite = bench::parse_suite(io::read_file(suite_path));
            const bench::BenchReport report = bench::run(suite);
            const std::string csv = bench::render_csv(report, !no_timing);
            if (csv_path.empty()) {
                out << csv;
            } else {
                write_file(csv_path, csv);
            }
            if (!tsv_path.empty()) write_file(tsv_path, bench::render_tsv(report, !no_timing));
        }
    } catch (const Error& e) {
        report_error(err, to_string(e.kind()), e.what(), e.field());
        return kExitDomain;
    } catch (const std::exception& e) {
        report_error(err, "internal", e.what());
        return kExitDomain;
    }
    return kExitOk;
}

}  // namespace trsched
