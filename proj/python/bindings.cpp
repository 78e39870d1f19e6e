#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numbers>
#include <optional>
#include <stdexcept>

#include "steerlab/angles.hpp"
#include "steerlab/envelope.hpp"
#include "steerlab/optimize.hpp"
#include "steerlab/strategies.hpp"
#include "steerlab/verify.hpp"
#include "steerlab/weak.hpp"

namespace py = pybind11;
using namespace steerlab;

namespace {

std::vector<std::vector<Complex>> to_rows(const CMatrix& m) {
    std::vector<std::vector<Complex>> rows(static_cast<std::size_t>(m.dim()));
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) rows[static_cast<std::size_t>(i)].push_back(m(i, j));
    }
    return rows;
}

ScenarioId scenario_arg(const std::string& slug) {
    const auto id = scenario_from_slug(slug);
    if (!id) throw std::invalid_argument("unknown scenario '" + slug + "'");
    return *id;
}

PointerModel pointer_arg(const std::string& family, double g) {
    if (family == "square") return PointerModel::square(g);
    if (family == "linear") return PointerModel::linear(g);
    throw std::invalid_argument("pointer family must be 'square' or 'linear'");
}

WeakConfig weak_config_arg(const std::string& name) {
    for (WeakConfig c : all_weak_configs()) {
        if (to_string(c) == name) return c;
    }
    throw std::invalid_argument("unknown weak configuration '" + name + "'");
}

const StrategyCase& find_case(const std::vector<StrategyCase>& catalog, const std::string& label) {
    for (const StrategyCase& c : catalog) {
        if (to_string(c.id) == label) return c;
    }
    throw std::invalid_argument("case '" + label + "' not in catalog");
}

}  // namespace

PYBIND11_MODULE(_steerlab, m) {
    m.doc() = "Sequential-measurement steering and CHSH trade-off toolkit";

    m.def("pauli", [](int i) { return to_rows(pauli(i)); }, py::arg("index"));
    m.def(
        "rot_y", [](double angle) { return to_rows(rot_y(angle)); }, py::arg("angle"));
    m.def(
        "max_entangled", [] { return to_rows(max_entangled().mat()); },
        "Density matrix of the maximally entangled two-qubit state");
    m.def(
        "partial_entangled", [](double alpha) { return to_rows(partial_entangled(alpha).mat()); },
        py::arg("alpha"));

    m.def(
        "case_catalog",
        [](const std::string& scenario, double alpha) {
            py::list out;
            for (const StrategyCase& c : case_catalog(scenario_arg(scenario), alpha)) {
                py::dict d;
                d["case"] = to_string(c.id);
                d["angle_name"] = c.angle_name;
                d["angle_count"] = c.angle_count;
                d["has_closed_form"] = c.has_closed_form();
                out.append(d);
            }
            return out;
        },
        py::arg("scenario"), py::arg("alpha"));

    m.def(
        "simulate_case",
        [](const std::string& scenario, double alpha, const std::string& label, double angle) {
            return simulate_case(find_case(case_catalog(scenario_arg(scenario), alpha), label),
                                 angle);
        },
        py::arg("scenario"), py::arg("alpha"), py::arg("case"), py::arg("angle") = 0.0,
        "Simulated (S1, S2) for one strategy case");

    m.def(
        "closed_form_scores",
        [](const std::string& scenario, double alpha, const std::string& label, double angle) {
            return closed_form_scores(
                find_case(case_catalog(scenario_arg(scenario), alpha), label), angle);
        },
        py::arg("scenario"), py::arg("alpha"), py::arg("case"), py::arg("angle") = 0.0);

    m.def(
        "mixed_scores",
        [](const std::vector<std::pair<double, double>>& pairs, const std::vector<double>& mix) {
            return mixed_scores(pairs, mix);
        },
        py::arg("per_case"), py::arg("mix"));

    m.def(
        "build_envelope",
        [](const std::string& scenario, double alpha, int samples) {
            const TradeoffEnvelope env =
                build_envelope(case_catalog(scenario_arg(scenario), alpha), samples);
            py::dict out;
            out["s1_min"] = env.s1_min();
            out["s1_max"] = env.s1_max();
            out["breakpoints"] = env.interior_breakpoints();
            py::list segments;
            for (const EnvelopeSegment& s : env.segments()) {
                py::dict d;
                d["label"] = to_string(s.label);
                d["s1_begin"] = s.s1_begin;
                d["s1_end"] = s.s1_end;
                segments.append(d);
            }
            out["segments"] = segments;
            out["diagonal_crossing"] = env.diagonal_crossing();
            return out;
        },
        py::arg("scenario"), py::arg("alpha"), py::arg("samples") = 4096);

    m.def(
        "envelope_value",
        [](const std::string& scenario, double alpha, double s1, int samples) {
            return build_envelope(case_catalog(scenario_arg(scenario), alpha), samples)
                .value_at(s1);
        },
        py::arg("scenario"), py::arg("alpha"), py::arg("s1"), py::arg("samples") = 4096);

    m.def(
        "optimize",
        [](const std::string& scenario, const std::vector<std::string>& pattern,
           std::optional<double> alpha) {
            const ViolationOptimum r =
                optimize_pattern_tokens(scenario_arg(scenario), pattern, alpha);
            py::dict out;
            out["value"] = r.value;
            out["s1"] = r.s1;
            out["s2"] = r.s2;
            out["alpha"] = r.alpha;
            out["alpha_optimized"] = r.alpha_optimized;
            py::dict angles;
            for (std::size_t i = 0; i < r.angle_names.size(); ++i) {
                angles[py::str(r.angle_names[i])] = r.angles[i];
            }
            out["angles"] = angles;
            py::dict mix;
            for (std::size_t i = 0; i < r.pattern.size(); ++i) {
                mix[py::str(to_string(r.pattern[i]))] = r.mix[i];
            }
            out["mix"] = mix;
            return out;
        },
        py::arg("scenario"), py::arg("pattern"), py::arg("alpha") = std::nullopt,
        "Max-min double violation over angles, mixing weights and optionally alpha");

    m.def(
        "weak_benchmark",
        [](const std::string& family, double g, const std::string& config) {
            const PointerModel p = pointer_arg(family, g);
            const WeakScores scores = weak_benchmark(p, weak_config_arg(config));
            py::dict out;
            out["g"] = p.g;
            out["f"] = p.f;
            out["s1"] = scores.s1;
            out["s2"] = scores.s2;
            return out;
        },
        py::arg("family"), py::arg("g"), py::arg("config") = "steer-ab-ll");

    m.def(
        "verify",
        [](const std::string& only) {
            VerifyOptions options;
            options.only = only;
            py::list out;
            for (const CheckResult& r : run_verification(options)) {
                py::dict d;
                d["group"] = r.group;
                d["name"] = r.name;
                d["expected"] = r.expected;
                d["computed"] = r.computed;
                d["tolerance"] = r.tolerance;
                d["pass"] = r.pass;
                out.append(d);
            }
            return out;
        },
        py::arg("only") = "");

    m.def("parse_angle", [](const std::string& text) { return parse_angle(text); },
          py::arg("text"));
    m.def("format_angle", &format_angle, py::arg("radians"));

    m.attr("SCENARIOS") = std::vector<std::string>{
        "steer-ab-ll", "steer-ab-cl", "steer-ab-lc",  "steer-bc-ll-3a",
        "steer-bc-ll-3b", "steer-bc-cl", "steer-bc-lc"};
    m.attr("MAX_ALPHA") = std::numbers::pi / 2.0;
}
