#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lscat/cli.hpp"
#include "lscat/cover_verifier.hpp"
#include "lscat/orbit_classifier.hpp"
#include "lscat/realizations/clifford.hpp"
#include "lscat/serialize.hpp"

namespace py = pybind11;
using namespace lscat;

namespace {

LieType lie_type(const std::string& family, int rank) { return LieType::make(parse_family(family), rank); }

std::vector<std::string> strings(const QVec& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

QVec parse_point(const std::vector<std::string>& coords) {
    QVec out;
    for (const auto& c : coords) out.push_back(Rat::parse(c));
    return out;
}

}  // namespace

// Results that are documents come back as JSON text; the Python package
// decodes them.
PYBIND11_MODULE(_lscat, m) {
    m.doc() = "Alcove geometry, vertex conjugacy classes and LS-category bounds";

    m.def("root_data_json", [](const std::string& f, int n) { return dump_json(root_data_json(build(lie_type(f, n)))); },
          py::arg("family"), py::arg("rank"));
    m.def("marks", [](const std::string& f, int n) { return build(lie_type(f, n)).marks; }, py::arg("family"),
          py::arg("rank"));
    m.def("alcove_json",
          [](const std::string& f, int n) { return dump_json(alcove_json(FundamentalAlcove(build(lie_type(f, n))))); },
          py::arg("family"), py::arg("rank"));
    m.def("orbits_json", [](const std::string& f, int n) { return dump_json(orbits_json(build(lie_type(f, n)))); },
          py::arg("family"), py::arg("rank"));
    m.def(
        "bound_json",
        [](const std::string& f, int n, bool assume_conjecture, const std::map<std::size_t, int>& overrides) {
            BoundOptions opts;
            opts.assume_conjecture = assume_conjecture;
            opts.overrides = overrides;
            return dump_json(to_json(ls_bound(build(lie_type(f, n)), opts)));
        },
        py::arg("family"), py::arg("rank"), py::arg("assume_conjecture") = false,
        py::arg("overrides") = std::map<std::size_t, int>{});
    m.def(
        "verify_json",
        [](const std::string& f, int n, const std::vector<std::string>& checks, std::uint64_t seed, std::size_t samples,
           std::size_t word_length_bound, long grid_denominator) {
            VerifyPlan plan;
            plan.lie_type = lie_type(f, n);
            if (checks.empty()) plan.checks = supported_checks(plan.lie_type);
            for (const auto& c : checks) plan.checks.push_back(parse_check(c));
            plan.seed = seed;
            plan.samples = samples;
            plan.word_length_bound = word_length_bound;
            plan.grid_denominator = grid_denominator;
            VerifyReport report;
            {
                py::gil_scoped_release release;
                report = run(plan);
            }
            return dump_json(to_json(report));
        },
        py::arg("family"), py::arg("rank"), py::arg("checks") = std::vector<std::string>{}, py::arg("seed") = 0,
        py::arg("samples") = 500, py::arg("word_length_bound") = 8, py::arg("grid_denominator") = 12);

    m.def("vertex", [](const std::string& f, int n, std::size_t k) {
        return strings(FundamentalAlcove(build(lie_type(f, n))).vertex(k));
    }, py::arg("family"), py::arg("rank"), py::arg("k"));
    m.def(
        "in_cell",
        [](const std::string& f, int n, std::size_t k, const std::vector<std::string>& point) {
            return FundamentalAlcove(build(lie_type(f, n))).in_cell(k, parse_point(point));
        },
        py::arg("family"), py::arg("rank"), py::arg("k"), py::arg("point"));
    m.def(
        "reduce_to_alcove",
        [](const std::string& f, int n, const std::vector<std::string>& point) {
            return strings(FundamentalAlcove(build(lie_type(f, n))).reduce(parse_point(point)).point);
        },
        py::arg("family"), py::arg("rank"), py::arg("point"));
    m.def(
        "spin_vertex_element",
        [](const std::string& f, int n, std::size_t k) { return to_string(spin_vertex_element(parse_family(f), n, k)); },
        py::arg("family"), py::arg("rank"), py::arg("k"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
