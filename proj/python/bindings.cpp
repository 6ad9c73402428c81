#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "wbafrac/catalog.hpp"
#include "wbafrac/cli.hpp"
#include "wbafrac/graded.hpp"
#include "wbafrac/suites.hpp"

namespace py = pybind11;
using namespace wbafrac;

// Structured results cross the boundary as JSON text; the Python package
// decodes them.

namespace {

std::string check_json(const std::string& name, const std::vector<std::string>& suites, const Params& params,
                       std::uint64_t seed)
{
    Example ex = build_example(name, params);
    nlohmann::json j = report_header(ex);
    bool all = true;
    for (const auto& s : suites.empty() ? ex.manifest : suites) {
        Report rep = run_suite(ex, s, seed);
        j["suites"][s] = rep.to_json();
        all = all && rep.passed();
    }
    j["passed"] = all;
    return j.dump();
}

std::string localize_json(const std::string& name, const std::vector<std::string>& at, const Params& params)
{
    Example ex = build_example(name, params);
    Localization loc = at.empty() ? localize_example(ex)
                                  : localize_example(ex, at, AnnihilatorStrategy::bounded(4));
    nlohmann::json j = report_header(ex);
    j["localization"] = loc.report_json();
    if (loc.materialized()) {
        auto model = loc.wba();
        j["dimension"] = model->dimension();
        j["dimensions"] = dimension_json(*model, model->graded() ? model->cutoff() : kUnbounded);
    }
    return j.dump();
}

std::string detq_json(unsigned level)
{
    auto m = mhatq2(level, 2);
    Element det = quantum_determinant(*m.free, level);
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [b, c] : det) terms[m.free->basis_label(b)] = c.to_string();
    return terms.dump();
}

std::string emit_json(const std::string& name, const Params& params)
{
    Example ex = build_example(name, params);
    return to_json(*ex.wba, ex.wba->graded() ? ex.wba->cutoff() : kUnbounded).dump();
}

py::tuple run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.attr("__version__") = kVersion;

    py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<StructureError>(m, "StructureError", PyExc_RuntimeError);

    py::class_<Scalar>(m, "Scalar")
        .def(py::init<long>())
        .def_static("zeta", [](unsigned n, long k) { return Scalar::zeta_power(CycloField::get(n), k); })
        .def_static("sqrt_two", [](unsigned n) { return sqrt_two(CycloField::get(n)); })
        .def_property_readonly("conductor", [](const Scalar& s) { return s.field().conductor(); })
        .def("inverse", &Scalar::inverse)
        .def("pow", &Scalar::pow)
        .def("is_zero", &Scalar::is_zero)
        .def("is_one", &Scalar::is_one)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &Scalar::to_string)
        .def("__repr__", [](const Scalar& s) { return "Scalar(" + s.to_string() + ")"; });

    m.def("quantum_integer", &quantum_integer);
    m.def("examples", [] {
        std::vector<std::string> names;
        for (const auto& d : catalog_descriptors()) names.push_back(d.name);
        return names;
    });
    m.def("suite_names", &suite_names);
    m.def("_check", &check_json, py::arg("name"), py::arg("suites") = std::vector<std::string>{},
          py::arg("params") = Params{}, py::arg("seed") = 1);
    m.def("_localize", &localize_json, py::arg("name"), py::arg("at") = std::vector<std::string>{},
          py::arg("params") = Params{});
    m.def("_quantum_determinant", &detq_json, py::arg("r"));
    m.def("_emit", &emit_json, py::arg("name"), py::arg("params") = Params{});
    m.def("run_cli", &run_cli, py::arg("args"));
}
