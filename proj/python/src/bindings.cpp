#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "lifeline/cli.hpp"
#include "lifeline/config.hpp"
#include "lifeline/errors.hpp"
#include "lifeline/oracle.hpp"
#include "lifeline/protocol.hpp"
#include "lifeline/simulation.hpp"
#include "lifeline/trace.hpp"
#include "lifeline/verify.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace lifeline;

namespace {

ScenarioConfig config_from_str(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    return config_from_json(j);
}

py::dict report_to_dict(const ExecutionReport& rep) {
    py::list violations;
    for (const Violation& v : rep.violations) {
        py::dict d;
        d["kind"] = std::string(kind_name(v.kind));
        d["round"] = v.round;
        d["witnesses"] = v.witnesses;
        d["detail"] = v.detail;
        d["warning"] = v.warning;
        violations.append(d);
    }
    py::dict out;
    out["rounds_checked"] = rep.rounds_checked;
    out["failures"] = rep.failure_count();
    out["warnings"] = rep.warning_count();
    out["premise_failures"] = rep.premise_failures;
    out["violations"] = violations;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Life-line swarm protocol simulator: core bindings";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ModelViolation>(m, "ModelViolation", PyExc_RuntimeError);
    py::register_exception<ProtocolFault>(m, "ProtocolFault", PyExc_RuntimeError);

    py::class_<Point2>(m, "Point2")
        .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
        .def_readwrite("x", &Point2::x)
        .def_readwrite("y", &Point2::y)
        .def("norm", &Point2::norm)
        .def("__eq__", [](const Point2& a, const Point2& b) { return a == b; })
        .def("__repr__", [](const Point2& p) {
            std::ostringstream os;
            os << "Point2(" << p.x << ", " << p.y << ")";
            return os.str();
        });

    py::class_<Frame>(m, "Frame")
        .def(py::init<double, bool, Point2>(), py::arg("rotation") = 0.0, py::arg("reflect") = false,
             py::arg("translation") = Point2{})
        .def_readwrite("rotation", &Frame::rotation)
        .def_readwrite("reflect", &Frame::reflect)
        .def_readwrite("translation", &Frame::translation);

    m.def("dist", &dist);
    m.def("frame_apply", &frame_apply);
    m.def("frame_inverse", &frame_inverse);
    m.def("move_toward", &move_toward, py::arg("origin"), py::arg("to"), py::arg("max_step"));

    py::class_<Params>(m, "Params")
        .def(py::init([](std::size_t n, double D, double Dmax, double threshold, Point2 base) {
                 Params p{n, D, Dmax, threshold, base};
                 validate(p);
                 return p;
             }),
             py::arg("n") = 50, py::arg("D") = 1.0, py::arg("Dmax") = 7.5, py::arg("launch_threshold") = 3.5,
             py::arg("base") = Point2{})
        .def_readonly("n", &Params::n)
        .def_readonly("D", &Params::D)
        .def_readonly("Dmax", &Params::Dmax)
        .def_readonly("launch_threshold", &Params::launch_threshold)
        .def_readonly("base", &Params::base)
        .def_property_readonly("Dp", &Params::pursuit_distance);

    py::class_<RobotInfo>(m, "RobotInfo")
        .def(py::init<Ident, bool, bool, bool>(), py::arg("ident"), py::arg("light") = false,
             py::arg("alive") = true, py::arg("launched") = true)
        .def_readwrite("ident", &RobotInfo::ident)
        .def_readwrite("light", &RobotInfo::light)
        .def_readwrite("alive", &RobotInfo::alive)
        .def_readwrite("launched", &RobotInfo::launched);

    py::class_<RobotState>(m, "RobotState")
        .def(py::init<Point2, RobotInfo>(), py::arg("loc"), py::arg("info"))
        .def_readwrite("loc", &RobotState::loc)
        .def_readwrite("info", &RobotState::info);

    py::class_<Configuration>(m, "Configuration")
        .def(py::init([](std::vector<RobotState> robots) { return Configuration{std::move(robots)}; }))
        .def_readwrite("robots", &Configuration::robots)
        .def("__len__", &Configuration::size);

    m.def("config_init", &config_init);
    m.def("exists_at_base", &exists_at_base);
    m.def("apply_withdrawals", &apply_withdrawals);
    m.def("apply_launch", &apply_launch);
    m.def("visibility_path", &visibility_path);
    m.def("unreachable_from_base", &unreachable_from_base);
    m.def("path_conf_ok", [](const Params& p, const Configuration& cf) { return path_conf(p, cf).empty(); });
    m.def("no_collision_ok", [](const Configuration& cf) {
        for (const Violation& v : no_collision_conf(cf)) {
            if (!v.warning) return false;
        }
        return true;
    });

    m.def("protocol_names", &protocol_names);

    m.def(
        "run",
        [](const std::string& config_json, bool keep_trace) {
            const ScenarioConfig cfg = config_from_str(config_json);
            RunOptions ro;
            ro.keep_trace = keep_trace;
            RunResult rr = run_scenario(cfg, ro);
            py::dict out = report_to_dict(rr.report);
            out["rounds_run"] = rr.rounds_run;
            out["fault"] = rr.fault;
            if (keep_trace) {
                std::ostringstream os;
                write_trace(os, rr.trace);
                out["trace"] = os.str();
            }
            return out;
        },
        py::arg("config_json"), py::arg("keep_trace") = false,
        "Run a scenario given as a JSON config string and return its report");

    m.def(
        "check_trace",
        [](const std::string& text) {
            std::istringstream in(text);
            return report_to_dict(check_execution(read_trace(in)));
        },
        py::arg("trace_text"));

    m.def(
        "oracle",
        [](const std::string& protocol, std::size_t samples, std::uint64_t seed) {
            const Params p;
            auto fns = make_protocol(protocol, p);
            if (!fns) {
                throw ConfigError("unknown protocol '" + protocol + "'");
            }
            const OracleResult r = run_oracle(p, *fns, samples, seed);
            py::dict out;
            out["samples"] = r.samples;
            out["failures"] = r.failures;
            py::dict per_clause;
            for (std::size_t c = 0; c < kClauseCount; ++c) {
                per_clause[py::str(std::string(clause_name(static_cast<Clause>(c))))] = r.clause_failures[c];
            }
            out["clause_failures"] = per_clause;
            return out;
        },
        py::arg("protocol") = "sample", py::arg("samples") = 1000, py::arg("seed") = 0);

    m.def(
        "fuzz",
        [](const std::string& config_json, std::size_t count, std::uint64_t seed, unsigned jobs) {
            FuzzOptions o;
            o.count = count;
            o.seed = seed;
            o.jobs = jobs;
            const FuzzResult r = fuzz(config_from_str(config_json), o);
            py::dict out;
            out["scenarios_run"] = r.scenarios_run;
            out["first_failure"] = r.first_failure;
            return out;
        },
        py::arg("config_json"), py::arg("count") = 10, py::arg("seed") = 0, py::arg("jobs") = 1);

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
