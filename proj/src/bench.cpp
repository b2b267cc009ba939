#include "trsched/bench.hpp"

#include "trsched/exact.hpp"
#include "trsched/heuristics.hpp"
#include "trsched/ptas.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace trsched::bench {

namespace {

using io::json;

template <class F>
double timed(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string millis(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", ms);
    return buf;
}

std::string safe_ratio(const TimeValue& num, const TimeValue& den) {
    return den.is_zero() ? std::string("inf") : to_decimal(num / den);
}

std::string exact_ratio(const TimeValue& num, const TimeValue& den) {
    return den.is_zero() ? std::string("inf") : (num / den).str();
}

}  // namespace

Suite parse_suite(std::string_view text) {
    const json doc = io::parse_json(text);
    if (!doc.is_object()) throw Error(ErrorKind::parse, "/: expected an object", "/");
    Suite suite;
    if (doc.contains("limit")) {
        if (!doc["limit"].is_number_unsigned()) throw Error(ErrorKind::parse, "/limit: expected an integer", "/limit");
        suite.limit = doc["limit"].get<std::size_t>();
    }
    if (doc.contains("epsilons")) {
        const json& eps = doc["epsilons"];
        if (!eps.is_array()) throw Error(ErrorKind::parse, "/epsilons: expected an array", "/epsilons");
        for (std::size_t i = 0; i < eps.size(); ++i) {
            const std::string at = "/epsilons/" + std::to_string(i);
            if (!eps[i].is_string()) throw Error(ErrorKind::parse, at + ": expected a rational string", at);
            try {
                suite.epsilons.push_back(Rational::parse(eps[i].get<std::string>()));
            } catch (const std::invalid_argument& e) {
                throw Error(ErrorKind::parse, at + ": " + e.what(), at);
            }
        }
    }
    if (doc.contains("instances")) {
        const json& list = doc["instances"];
        if (!list.is_array()) throw Error(ErrorKind::parse, "/instances: expected an array", "/instances");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string at = "/instances/" + std::to_string(i);
            std::string id = list[i].contains("id") && list[i]["id"].is_string() ? list[i]["id"].get<std::string>()
                                                                                 : "i" + std::to_string(i);
            suite.entries.push_back({std::move(id), io::instance_from_json(list[i], at)});
        }
    }
    if (doc.contains("random")) {
        const json& blocks = doc["random"];
        if (!blocks.is_array()) throw Error(ErrorKind::parse, "/random: expected an array", "/random");
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const json& block = blocks[i];
            const std::string at = "/random/" + std::to_string(i);
            try {
                const auto count = block.at("count").get<std::size_t>();
                const auto n = block.at("n").get<std::size_t>();
                const auto b = block.at("b").get<int>();
                const auto seed = block.at("seed").get<std::uint64_t>();
                const double zeros = block.value("zero_fraction", 0.0);
                for (std::size_t k = 0; k < count; ++k) {
                    suite.entries.push_back({"r" + std::to_string(seed) + "-" + std::to_string(k),
                                             io::gen_random(n, b, seed + k, zeros)});
                }
            } catch (const json::exception& e) {
                throw Error(ErrorKind::parse, at + ": " + e.what(), at);
            }
        }
    }
    return suite;
}

BenchReport run(const Suite& suite) {
    BenchReport report;
    report.epsilons = suite.epsilons;
    std::vector<PtasConfig> configs;
    for (const Rational& eps : suite.epsilons) configs.emplace_back(eps);

    for (const SuiteEntry& entry : suite.entries) {
        const Instance& inst = entry.instance;
        BenchRow row;
        row.id = entry.id;
        row.n = inst.size();
        row.b = inst.b();
        row.exact_millis = timed([&] { row.opt = solve_exact(inst, suite.limit).optimum; });
        row.lpt_millis = timed([&] { row.lpt = lpt_schedule(inst).makespan; });
        row.lower = lower_bound(inst);
        if (row.lpt > lpt_bound(inst, row.opt)) {
            throw Error(ErrorKind::internal, "row " + row.id + " violates the LPT bound");
        }
        if (row.opt < row.lower) throw Error(ErrorKind::internal, "row " + row.id + " is below the lower bound");
        const bool ptas_applicable = inst.window() == Rational(1) && inst.size() >= static_cast<std::size_t>(inst.b());
        for (const PtasConfig& cfg : configs) {
            if (!ptas_applicable) {
                row.ptas.emplace_back();
                continue;
            }
            PtasCell cell;
            cell.millis = timed([&] {
                const PtasResult res = ptas_solve(inst, cfg);
                cell.makespan = res.trace.makespan;
                cell.f_star = res.f_star;
            });
            row.ptas.emplace_back(std::move(cell));
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string render_csv(const BenchReport& report, bool timing) {
    std::ostringstream out;
    out << "id,n,b,opt,opt_exact,lpt,lpt_exact,lpt_ratio,lpt_ratio_exact,lower_bound,lower_bound_exact";
    for (const Rational& eps : report.epsilons) {
        const std::string tag = "[" + eps.str() + "]";
        out << ",ptas" << tag << ",ptas" << tag << "_exact,fstar" << tag << ",fstar" << tag << "_exact,ptas_ratio"
            << tag << ",ptas_ratio" << tag << "_exact";
    }
    if (timing) {
        out << ",exact_ms,lpt_ms";
        for (const Rational& eps : report.epsilons) out << ",ptas[" << eps.str() << "]_ms";
    }
    out << "\n";
    for (const BenchRow& row : report.rows) {
        out << row.id << "," << row.n << "," << row.b << "," << to_decimal(row.opt) << "," << row.opt << ","
            << to_decimal(row.lpt) << "," << row.lpt << "," << safe_ratio(row.lpt, row.opt) << ","
            << exact_ratio(row.lpt, row.opt) << "," << to_decimal(row.lower) << "," << row.lower;
        for (const auto& cell : row.ptas) {
            if (!cell) {
                out << ",,,,,,";
                continue;
            }
            out << "," << to_decimal(cell->makespan) << "," << cell->makespan << "," << to_decimal(cell->f_star) << ","
                << cell->f_star << "," << safe_ratio(cell->makespan, row.opt) << ","
                << exact_ratio(cell->makespan, row.opt);
        }
        if (timing) {
            out << "," << millis(row.exact_millis) << "," << millis(row.lpt_millis);
            for (const auto& cell : row.ptas) out << "," << (cell ? millis(cell->millis) : std::string());
        }
        out << "\n";
    }
    return out.str();
}

std::string render_tsv(const BenchReport& report, bool timing) {
    std::ostringstream out;
    out << "id\tn\tb\topt\tlpt_ratio\tlower_bound";
    for (const Rational& eps : report.epsilons) out << "\tptas_ratio[" << eps << "]\tfstar_ratio[" << eps << "]";
    if (timing) {
        out << "\texact_ms\tlpt_ms";
        for (const Rational& eps : report.epsilons) out << "\tptas_ms[" << eps << "]";
    }
    out << "\n";
    for (const BenchRow& row : report.rows) {
        out << row.id << "\t" << row.n << "\t" << row.b << "\t" << to_decimal(row.opt) << "\t"
            << safe_ratio(row.lpt, row.opt) << "\t" << to_decimal(row.lower);
        for (const auto& cell : row.ptas) {
            out << "\t" << (cell ? safe_ratio(cell->makespan, row.opt) : "nan") << "\t"
                << (cell ? safe_ratio(cell->f_star, row.opt) : "nan");
        }
        if (timing) {
            out << "\t" << millis(row.exact_millis) << "\t" << millis(row.lpt_millis);
            for (const auto& cell : row.ptas) out << "\t" << (cell ? millis(cell->millis) : "nan");
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace trsched::bench
