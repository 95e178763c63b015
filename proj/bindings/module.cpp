// Python bindings for the document-level operations.
//
// The module keeps a deliberately small surface: documents in, JSON report
// strings out.  The pure-python wrapper in python/lcadual/__init__.py decodes
// the reports into dicts.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcadual/analyzer.hpp"
#include "lcadual/commands.hpp"
#include "lcadual/constructions.hpp"
#include "lcadual/document.hpp"
#include "lcadual/errors.hpp"

namespace py = pybind11;

namespace {

using namespace lcadual;

AnalyzeOptions make_analyze_options(std::optional<unsigned> radius,
                                    const std::vector<std::string>& properties,
                                    std::size_t ball_cap) {
    AnalyzeOptions options;
    options.radius = radius;
    options.ball_cap = ball_cap;
    for (const auto& name : properties) {
        auto property = property_from_name(name);
        if (!property) {
            throw UsageError("unknown property \"" + name + "\"");
        }
        options.properties.push_back(*property);
    }
    return options;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact linear cellular automata over group rings";

    py::class_<AutomatonDocument>(m, "Automaton")
        .def_static(
            "parse", [](const std::string& text) { return parse_document(text); },
            py::arg("text"), "Parse an automaton document.")
        .def(
            "print", [](const AutomatonDocument& doc) { return print_document(doc); },
            "Render the document in canonical form.")
        .def(
            "adjoint",
            [](const AutomatonDocument& doc) {
                AutomatonDocument out = doc;
                out.matrix = doc.matrix.adjoint();
                return out;
            },
            "Return a copy of the document whose matrix is the adjoint.")
        .def_property_readonly(
            "field", [](const AutomatonDocument& doc) { return doc.field.name(); })
        .def_property_readonly(
            "group", [](const AutomatonDocument& doc) { return doc.group->describe(); })
        .def_property_readonly(
            "dimension", [](const AutomatonDocument& doc) { return doc.dimension; })
        .def(
            "analyze_json",
            [](const AutomatonDocument& doc, std::optional<unsigned> radius,
               const std::vector<std::string>& properties, std::size_t ball_cap) {
                return run_analyze(doc, make_analyze_options(radius, properties, ball_cap))
                    .output;
            },
            py::arg("radius") = std::nullopt,
            py::arg("properties") = std::vector<std::string>{},
            py::arg("ball_cap") = kDefaultBallCap,
            "Run the decision procedures and return the report as JSON text.")
        .def(
            "verify_finite_json",
            [](const AutomatonDocument& doc, std::size_t cap) {
                return run_verify_finite(doc, cap).output;
            },
            py::arg("cap") = kDefaultFiniteCap,
            "Check the four duality equations over a finite group; JSON text.")
        .def(
            "evolve_json",
            [](const AutomatonDocument& doc, unsigned steps, const std::string& config) {
                return run_evolve(doc, steps, config).output;
            },
            py::arg("steps") = 1u, py::arg("config") = std::string{},
            "Apply the automaton to a named configuration; JSON text.")
        .def(
            "pair_json",
            [](const AutomatonDocument& doc) { return run_pair(doc).output; },
            "Pair the configurations named \"omega\" and \"c\"; JSON text.");

    m.def("gallery_names", &gallery_names, "Names of the built-in constructions.");

    m.def(
        "demo_report",
        [](const std::string& name, const std::string& field, bool self_check) {
            DemoOptions options;
            options.field_name = field;
            options.self_check = self_check;
            RunResult result = run_demo(name, options);
            return py::make_tuple(result.exit_code, result.output);
        },
        py::arg("name"), py::arg("field") = std::string{"F2"},
        py::arg("self_check") = false,
        "Run a gallery construction; returns (exit_code, json_text).");
}
