#include "support/oracles.hpp"
#include "trsched/bench.hpp"
#include "trsched/cli.hpp"
#include "trsched/exact.hpp"
#include "trsched/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace trsched;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const fs::path dir = fs::temp_directory_path() / "trsched_io_tests";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::internal;
}

std::string field_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.field();
    }
    return "<none>";
}

}  // namespace

TEST_SUITE("io") {
    TEST_CASE("parse_instance examples") {
        const Instance a = io::parse_instance(R"({"b":2,"window":"1","jobs":["3/5","1/2","7/10"]})");
        CHECK(a == Instance(2, Rational(1), {Rational(3, 5), Rational(1, 2), Rational(7, 10)}));

        const Instance image = io::parse_instance(R"({"b":2,"window":"5","jobs":["1","2","3","4","0","0","5"]})");
        CHECK(image == build_reduction(PartitionInstance({1, 2, 3, 4})).instance);

        CHECK(kind_of([] { (void)io::parse_instance(R"({"b":1,"window":"1","jobs":["1"]})"); }) == ErrorKind::parse);
        try {
            (void)io::parse_instance(R"({"b":1,"window":"1","jobs":["1"]})");
        } catch (const Error& e) {
            CHECK(std::string(e.what()).find("b must be >= 2") != std::string::npos);
            CHECK(e.field() == "/b");
        }
    }

    TEST_CASE("parse errors carry field paths") {
        CHECK(field_of([] { (void)io::parse_instance(R"({"b":2,"jobs":["1","-1/2"]})"); }) == "/jobs/1");
        CHECK(field_of([] { (void)io::parse_instance(R"({"b":2,"jobs":["1","1/0"]})"); }) == "/jobs/1");
        CHECK(field_of([] { (void)io::parse_instance(R"({"b":2,"window":"0","jobs":["1"]})"); }) == "/window");
        CHECK(field_of([] { (void)io::parse_instance(R"({"b":2,"window":"1"})"); }) == "/jobs");
        CHECK(field_of([] { (void)io::parse_instance(R"({"b":2,"jobs":[0.5]})"); }) == "/jobs/0");
        CHECK(kind_of([] { (void)io::parse_instance("{not json"); }) == ErrorKind::parse);
        CHECK(field_of([] { (void)io::parse_partition(R"({"values":[1,2,0,4]})"); }) == "/values/2");
        CHECK(field_of([] { (void)io::parse_trace(R"({"order":[0,1]})"); }) == "/order/0");
    }

    TEST_CASE("property: emit then parse is the identity") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 50; ++trial) {
            const Instance inst = oracle::random_grid_instance(rng, 1 + static_cast<std::size_t>(trial % 8), 2 + trial % 3);
            CHECK(io::parse_instance(io::emit(io::to_json(inst))) == inst);
            std::vector<std::size_t> order = Permutation::identity(inst.size()).order();
            std::shuffle(order.begin(), order.end(), rng);
            const ScheduleTrace t = evaluate_greedy(inst, Permutation(order));
            CHECK(io::parse_trace(io::emit(io::to_json(t))) == t);

            const PartitionInstance part = io::gen_partition(1 + static_cast<std::size_t>(trial % 3), 9, static_cast<std::uint64_t>(trial));
            CHECK(io::parse_partition(io::emit(io::to_json(part))) == part);
            const ReductionImage image = build_reduction(part);
            CHECK(io::parse_reduction(io::emit(io::to_json(image))) == image);
        }
    }

    TEST_CASE("generators") {
        CHECK(io::gen_random(9, 3, 42, 0.3) == io::gen_random(9, 3, 42, 0.3));
        CHECK_FALSE(io::gen_random(9, 3, 42, 0.0) == io::gen_random(9, 3, 43, 0.0));
        const Instance zeros = io::gen_random(6, 2, 1, 1.0);
        for (const auto& s : zeros.jobs()) CHECK(s.is_zero());
        const Instance some = io::gen_random(5, 2, 7, 0.0);
        CHECK(some.size() == 5);
        for (const auto& s : some.jobs()) {
            CHECK(s >= Rational(0));
            CHECK(s <= Rational(1));
            CHECK((s * Rational(1000)).is_integer());
        }
        const Instance forced = io::gen_random(10, 2, 3, 0.4);
        CHECK(std::count_if(forced.jobs().begin(), forced.jobs().end(), [](const Rational& s) { return s.is_zero(); }) >= 4);
        CHECK_THROWS_AS((void)io::gen_random(0, 2, 1, 0.0), Error);
        CHECK_THROWS_AS((void)io::gen_random(3, 1, 1, 0.0), Error);
        CHECK_THROWS_AS((void)io::gen_random(3, 2, 1, 1.5), Error);

        const PartitionInstance p = io::gen_partition(2, 10, 5);
        CHECK(p.values().size() == 4);
        CHECK(p.total() % 2 == 0);
        CHECK(p == io::gen_partition(2, 10, 5));
        const PartitionInstance ones = io::gen_partition(3, 1, 8);
        CHECK(ones.values() == std::vector<std::int64_t>(6, 1));
        CHECK(decide_partition(ones));
        CHECK_FALSE(decide_partition(PartitionInstance({1, 3})));
        CHECK_THROWS_AS((void)io::gen_partition(0, 3, 1), Error);
        CHECK_THROWS_AS((void)io::gen_partition(2, 0, 1), Error);
    }

    TEST_CASE("cli commands") {
        const std::string part = write_temp("part.json", R"({"values":[1,2,3,4]})");
        const CliRun yes = cli({"decide", part});
        CHECK(yes.code == 0);
        CHECK(yes.out == "YES\n");
        CHECK(cli({"decide", write_temp("no.json", R"({"values":[1,1,1,3]})")}).out == "NO\n");

        const CliRun image = cli({"reduce", part});
        CHECK(image.code == 0);
        CHECK(io::parse_reduction(image.out) == build_reduction(PartitionInstance({1, 2, 3, 4})));

        const std::string inst = write_temp("inst.json", R"({"b":2,"window":"1","jobs":["3/5","1/2","7/10"]})");
        const CliRun eval = cli({"eval", inst, "1,2,3"});
        CHECK(eval.code == 0);
        const auto doc = io::parse_json(eval.out);
        CHECK(doc["feasible"] == true);
        CHECK(doc["feasible_geometric"] == true);
        CHECK(io::trace_from_json(doc["trace"]).makespan == Rational(23, 10));

        const std::string perm = write_temp("perm.json", "[3,1,2]");
        CHECK(cli({"eval", inst, perm}).code == 0);

        const CliRun opt = cli({"opt", inst});
        CHECK(opt.code == 0);
        CHECK(io::parse_json(opt.out)["optimum"] == solve_exact(io::parse_instance(io::read_file(inst))).optimum.str());

        CHECK(cli({"lpt", inst}).code == 0);
        const CliRun ptas = cli({"ptas", inst, "--epsilon", "1/2"});
        CHECK(ptas.code == 0);
        CHECK(io::parse_json(ptas.out)["tau"] == 2);
    }

    TEST_CASE("cli failures") {
        const std::string inst = write_temp("inst.json", R"({"b":2,"window":"1","jobs":["3/5","1/2","7/10"]})");
        const CliRun refused = cli({"opt", inst, "--limit", "2"});
        CHECK(refused.code == 1);
        CHECK(io::parse_json(refused.err)["error"]["kind"] == "refused");
        CHECK(refused.err.find('\n') == refused.err.size() - 1);

        CHECK(cli({"eval", inst, "1,1,2"}).code == 1);
        CHECK(cli({"eval", inst, "1,2"}).code == 1);
        CHECK(cli({"ptas", inst, "--epsilon", "0.5"}).code == 1);
        CHECK(cli({"ptas", inst, "--epsilon", "2"}).code == 1);
        CHECK(cli({"opt", "/nonexistent/instance.json"}).code == 1);
        CHECK(cli({"opt", write_temp("bad.json", R"({"b":1,"jobs":["1"]})")}).code == 1);

        const CliRun usage = cli({});
        CHECK(usage.code == 2);
        CHECK(io::parse_json(usage.err)["error"]["kind"] == "usage");
        CHECK(cli({"ptas", inst}).code == 2);
        CHECK(cli({"gen", "--n", "abc"}).code == 2);
        CHECK(cli({"frobnicate"}).code == 2);
        CHECK(cli({"--help"}).code == 0);
    }

    TEST_CASE("cli output is byte-stable") {
        const std::vector<std::string> gen{"gen", "--n", "7", "--b", "3", "--seed", "11", "--zero-fraction", "0.25"};
        CHECK(cli(gen).out == cli(gen).out);
        CHECK(io::parse_instance(cli(gen).out) == io::gen_random(7, 3, 11, 0.25));
        const std::vector<std::string> genpart{"genpart", "--m", "3", "--max-value", "6", "--seed", "4"};
        CHECK(cli(genpart).out == cli(genpart).out);

        const std::string suite = write_temp("suite.json", R"({
            "limit": 8, "epsilons": ["1/2"],
            "instances": [{"id": "ex", "b": 2, "window": "1", "jobs": ["3/10", "1", "1/2"]},
                          {"id": "wide", "b": 2, "window": "3", "jobs": ["1", "2", "0"]}],
            "random": [{"count": 3, "n": 5, "b": 2, "seed": 9, "zero_fraction": 0.2}]})");
        const CliRun a = cli({"bench", "--suite", suite, "--no-timing"});
        const CliRun b = cli({"bench", "--suite", suite, "--no-timing"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out.rfind("id,n,b,opt,opt_exact,", 0) == 0);
        CHECK(a.out.find("\nex,3,2,1.8,9/5,2.3,23/10,") != std::string::npos);
        CHECK(a.out.find("\nwide,3,2,") != std::string::npos);
        CHECK(a.out.find("\nr9-2,5,2,") != std::string::npos);

        const std::string tsv = (fs::temp_directory_path() / "trsched_io_tests" / "bench.tsv").string();
        CHECK(cli({"bench", "--suite", suite, "--tsv", tsv}).code == 0);
        const std::string tsv_text = io::read_file(tsv);
        CHECK(tsv_text.rfind("id\tn\tb\topt\tlpt_ratio", 0) == 0);
    }
}
