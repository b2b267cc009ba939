#include "trsched/cli.hpp"
#include "trsched/core.hpp"
#include "trsched/exact.hpp"
#include "trsched/heuristics.hpp"
#include "trsched/io.hpp"
#include "trsched/ptas.hpp"
#include "trsched/reduction.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace trsched;

namespace {

// Rationals cross the boundary as fractions.Fraction; anything whose str()
// is an integer or "p/q" literal is accepted on input.
Rational to_rational(const py::handle& obj) {
    try {
        return Rational::parse(py::str(obj).cast<std::string>());
    } catch (const std::invalid_argument& e) {
        throw py::value_error(e.what());
    }
}

py::object to_fraction(const Rational& r) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.str());
}

std::vector<Rational> to_rationals(const py::iterable& items) {
    std::vector<Rational> out;
    for (const auto& item : items) out.push_back(to_rational(item));
    return out;
}

py::list to_fractions(const std::vector<Rational>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_fraction(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = R"pbdoc(
        Single-processor scheduling under the B-constraint
        --------------------------------------------------

        Exact rational schedules, exact and heuristic solvers, the partition
        reduction and the rounding + dynamic-programming approximation scheme.
        Job indices are 0-based here; JSON files use 1-based indices.
    )pbdoc";

    static py::exception<Error> error_type(m, "TrschedError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error_type, e.what());
        }
    });

    py::class_<Instance>(m, "Instance")
        .def(py::init([](int b, const py::iterable& jobs, const py::object& window) {
                 return Instance(b, to_rational(window), to_rationals(jobs));
             }),
             py::arg("b"), py::arg("jobs"), py::arg("window") = 1)
        .def_property_readonly("b", &Instance::b)
        .def_property_readonly("window", [](const Instance& i) { return to_fraction(i.window()); })
        .def_property_readonly("jobs", [](const Instance& i) { return to_fractions(i.jobs()); })
        .def("__len__", &Instance::size)
        .def("to_json", [](const Instance& i) { return io::emit(io::to_json(i)); })
        .def_static("from_json", [](const std::string& text) { return io::parse_instance(text); })
        .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; });

    py::class_<ScheduleTrace>(m, "ScheduleTrace")
        .def_property_readonly("order", [](const ScheduleTrace& t) { return t.order.order(); })
        .def_property_readonly("starts", [](const ScheduleTrace& t) { return to_fractions(t.starts); })
        .def_property_readonly("completions", [](const ScheduleTrace& t) { return to_fractions(t.completions); })
        .def_property_readonly("gaps", [](const ScheduleTrace& t) { return to_fractions(t.gaps); })
        .def_property_readonly("makespan", [](const ScheduleTrace& t) { return to_fraction(t.makespan); })
        .def("to_json", [](const ScheduleTrace& t) { return io::emit(io::to_json(t)); })
        .def_static("from_json", [](const std::string& text) { return io::parse_trace(text); });

    m.def("evaluate_greedy",
          [](const Instance& inst, std::vector<std::size_t> order) {
              return evaluate_greedy(inst, Permutation(std::move(order)));
          },
          py::arg("instance"), py::arg("order"), "Earliest placement of a 0-based job order.");
    m.def("trace_from_gaps",
          [](const Instance& inst, std::vector<std::size_t> order, const py::iterable& gaps) {
              return trace_from_gaps(inst, Permutation(std::move(order)), to_rationals(gaps));
          },
          py::arg("instance"), py::arg("order"), py::arg("gaps"));
    m.def("check_feasible", &check_feasible, py::arg("instance"), py::arg("trace"));
    m.def("check_feasible_geometric", &check_feasible_geometric, py::arg("instance"), py::arg("trace"));
    m.def("lower_bound", [](const Instance& inst) { return to_fraction(lower_bound(inst)); });
    m.def("check_prefix_dominance", [](const py::iterable& x, const py::iterable& y) {
        return check_prefix_dominance(to_rationals(x), to_rationals(y));
    });

    py::class_<ExactResult>(m, "ExactResult")
        .def_property_readonly("optimum", [](const ExactResult& r) { return to_fraction(r.optimum); })
        .def_readonly("witness", &ExactResult::witness)
        .def_readonly("explored", &ExactResult::explored);
    m.def("solve_exact", &solve_exact, py::arg("instance"), py::arg("limit") = kDefaultExactLimit);
    m.def("solve_exact_unpruned", &solve_exact_unpruned, py::arg("instance"),
          py::arg("limit") = kDefaultUnprunedLimit);

    m.def("lpt_schedule", &lpt_schedule, py::arg("instance"));
    m.def("check_lpt_bound", [](const Instance& inst, const py::object& opt) {
        return check_lpt_bound(inst, to_rational(opt));
    });

    py::class_<PartitionInstance>(m, "PartitionInstance")
        .def(py::init<std::vector<std::int64_t>>(), py::arg("values"))
        .def_property_readonly("values", &PartitionInstance::values)
        .def("to_json", [](const PartitionInstance& p) { return io::emit(io::to_json(p)); });
    py::class_<ReductionImage>(m, "ReductionImage")
        .def_readonly("instance", &ReductionImage::instance)
        .def_property_readonly("threshold", [](const ReductionImage& r) { return to_fraction(r.threshold); })
        .def_property_readonly("u", [](const ReductionImage& r) { return to_fraction(r.u); })
        .def("to_json", [](const ReductionImage& r) { return io::emit(io::to_json(r)); });
    m.def("build_reduction", &build_reduction, py::arg("partition"));
    m.def("build_witness_schedule",
          [](const PartitionInstance& part, std::vector<std::size_t> side1, std::vector<std::size_t> side2) {
              return build_witness_schedule(part, Split{std::move(side1), std::move(side2)});
          },
          py::arg("partition"), py::arg("side1"), py::arg("side2"));
    m.def("decide_partition", &decide_partition, py::arg("partition"), py::arg("limit") = kDefaultExactLimit);
    m.def("extract_partition", [](const PartitionInstance& part, const ScheduleTrace& trace) {
        Split split = extract_partition(part, trace);
        return py::make_tuple(split.side1, split.side2);
    });

    m.def("idle_ladder", [](const py::object& eps) { return to_fractions(idle_ladder(PtasConfig(to_rational(eps)))); });
    py::class_<PtasResult>(m, "PtasResult")
        .def_readonly("trace", &PtasResult::trace)
        .def_property_readonly("f_star", [](const PtasResult& r) { return to_fraction(r.f_star); })
        .def_property_readonly("classes", [](const PtasResult& r) { return to_fractions(r.rounded.classes); })
        .def_property_readonly("counts", [](const PtasResult& r) { return r.rounded.counts; })
        .def_property_readonly("memo_states", [](const PtasResult& r) { return r.dp.memo_states; });
    m.def("ptas_solve",
          [](const Instance& inst, const py::object& eps) { return ptas_solve(inst, PtasConfig(to_rational(eps))); },
          py::arg("instance"), py::arg("epsilon"));

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out;
              std::ostringstream err;
              const int code = run_cli(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
