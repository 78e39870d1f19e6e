#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steerlab/angles.hpp"
#include "steerlab/envelope.hpp"
#include "steerlab/io.hpp"
#include "steerlab/optimize.hpp"
#include "steerlab/strategies.hpp"
#include "steerlab/verify.hpp"
#include "steerlab/weak.hpp"

namespace {

using namespace steerlab;

constexpr double kPi = std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

double parse_alpha_or_throw(const std::string& text) {
    if (text == "max") return kPi / 4.0;
    const std::optional<double> v = parse_angle(text);
    if (!v || *v < 0.0 || *v > kPi / 2.0) {
        throw CLI::ValidationError("--alpha", "expected 'max', 'free' or an angle in [0, pi/2]");
    }
    return *v;
}

ScenarioId scenario_or_throw(const std::string& slug) {
    const std::optional<ScenarioId> id = scenario_from_slug(slug);
    if (!id) throw CLI::ValidationError("--scenario", "unknown scenario '" + slug + "'");
    return *id;
}

std::vector<std::string> split_tokens(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) out.push_back(tok);
    }
    return out;
}

void emit(const std::string& content, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        write_file(path, content);
    }
}

int cmd_tradeoff(const std::string& scenario_slug, const std::string& alpha_text, int samples,
                 const std::string& format, const std::string& output, long seed) {
    const ScenarioId scenario = scenario_or_throw(scenario_slug);
    if (scenario_is_weak(scenario)) {
        throw CLI::ValidationError("--scenario",
                                   "weak scenarios are pointer-driven; use the weak command");
    }
    if (alpha_text == "free") {
        throw CLI::ValidationError("--alpha", "trade-off boundaries need a fixed state; "
                                              "use 'max' or an angle");
    }
    const double alpha = parse_alpha_or_throw(alpha_text);

    const std::vector<StrategyCase> cases = case_catalog(scenario, alpha);
    const TradeoffEnvelope env = build_envelope(cases, samples);

    RunManifest manifest;
    manifest.command = "tradeoff";
    manifest.scenario = scenario_slug;
    manifest.alpha = format_angle(alpha);
    manifest.samples = samples;
    manifest.seed = seed;
    manifest.output_path = output.empty() ? "-" : output;

    std::vector<TradeoffRow> rows;
    for (const EnvelopeSample& s : env.samples()) {
        const EnvelopeLabel label = env.segments()[s.segment].label;
        rows.push_back({s.s1, s.s2, "envelope:" + to_string(label),
                        label.arc ? to_string(label.a) : std::string("-")});
    }
    // classical-bound markers: where the boundary meets S = 1 in either axis
    if (env.value_at(env.s1_min()) >= 1.0 && env.value_at(env.s1_max()) <= 1.0) {
        double lo = env.s1_min(), hi = env.s1_max();
        for (int i = 0; i < 80; ++i) {
            const double mid = 0.5 * (lo + hi);
            (env.value_at(mid) > 1.0 ? lo : hi) = mid;
        }
        rows.push_back({0.5 * (lo + hi), 1.0, "classical_bound_s2", "-"});
    }
    if (env.s1_min() <= 1.0 && 1.0 <= env.s1_max()) {
        rows.push_back({1.0, env.value_at(1.0), "classical_bound_s1", "-"});
    }
    for (const StrategyCase& c : cases) {
        const DensityMatrix rho = partial_entangled(c.alpha);
        const int n = c.angle_count == 0 ? 1 : samples;
        for (int k = 0; k < n; ++k) {
            const double angle =
                n == 1 ? 0.0
                       : c.angle_min + (c.angle_max - c.angle_min) * k / static_cast<double>(n - 1);
            const auto [s1, s2] = simulate_case(c, angle, rho);
            rows.push_back({s1, s2, "case_arc", to_string(c.id)});
        }
    }

    emit(format == "json" ? tradeoff_json(manifest, rows) : tradeoff_csv(manifest, rows), output);
    return kExitOk;
}

int cmd_optimize(const std::string& scenario_slug, const std::string& mix_csv,
                 const std::string& alpha_text, const std::string& format,
                 const std::string& output) {
    const ScenarioId scenario = scenario_or_throw(scenario_slug);
    if (scenario_is_weak(scenario)) {
        throw CLI::ValidationError("--scenario",
                                   "weak scenarios are pointer-driven; use the weak command");
    }
    const std::vector<std::string> tokens = split_tokens(mix_csv);
    if (tokens.empty()) throw CLI::ValidationError("--mix", "expected labels like 1,3");

    std::optional<double> alpha;
    if (alpha_text != "free") alpha = parse_alpha_or_throw(alpha_text);

    const ViolationOptimum opt = optimize_pattern_tokens(scenario, tokens, alpha);

    nlohmann::ordered_json doc;
    doc["scenario"] = scenario_slug;
    doc["pattern"] = tokens;
    doc["value"] = opt.value;
    doc["s1"] = opt.s1;
    doc["s2"] = opt.s2;
    doc["alpha"] = format_angle(opt.alpha);
    doc["alpha_optimized"] = opt.alpha_optimized;
    doc["violation"] = opt.value > 1.0;
    for (std::size_t i = 0; i < opt.angle_names.size(); ++i) {
        doc["angles"][opt.angle_names[i]] = format_angle(opt.angles[i]);
    }
    for (std::size_t i = 0; i < opt.pattern.size(); ++i) {
        doc["mix"]["p(" + to_string(opt.pattern[i]) + ")"] = opt.mix[i];
    }

    if (format == "json") {
        emit(doc.dump(2) + "\n", output);
        return kExitOk;
    }

    std::ostringstream os;
    os << "scenario:  " << scenario_slug << "\n";
    os << "pattern:   " << mix_csv << "\n";
    os << "value:     " << format_double(opt.value) << "  (max-min double violation)\n";
    os << "s1, s2:    " << format_double(opt.s1) << ", " << format_double(opt.s2) << "\n";
    os << "alpha:     " << format_angle(opt.alpha)
       << (opt.alpha_optimized ? "  (optimized)" : "  (fixed)") << "\n";
    for (std::size_t i = 0; i < opt.angle_names.size(); ++i) {
        os << "angle " << opt.angle_names[i] << ": " << format_angle(opt.angles[i]) << "\n";
    }
    for (std::size_t i = 0; i < opt.pattern.size(); ++i) {
        os << "p(" << to_string(opt.pattern[i]) << "):      " << format_double(opt.mix[i]) << "\n";
    }
    os << (opt.value > 1.0 ? "double violation achieved\n" : "no violation\n");
    emit(os.str(), output);
    return kExitOk;
}

int cmd_verify(const std::string& only, bool inject_fault) {
    VerifyOptions options;
    options.only = only;
    options.inject_fault = inject_fault;
    const std::vector<CheckResult> results = run_verification(options);
    const int passed = print_verification(std::cout, results);
    return passed == static_cast<int>(results.size()) ? kExitOk : kExitVerifyFailure;
}

int cmd_weak(const std::string& family, double g, const std::string& format,
             const std::string& output) {
    PointerModel pointer;
    if (family == "square") {
        pointer = PointerModel::square(g);
    } else if (family == "linear") {
        pointer = PointerModel::linear(g);
    } else {
        throw CLI::ValidationError("--family", "expected 'square' or 'linear'");
    }

    nlohmann::ordered_json doc;
    doc["family"] = family;
    doc["g"] = pointer.g;
    doc["f"] = pointer.f;
    std::ostringstream os;
    os << "family: " << family << "  G=" << format_double(pointer.g)
       << "  F=" << format_double(pointer.f) << "\n";
    for (WeakConfig config : all_weak_configs()) {
        const WeakScores scores = weak_benchmark(pointer, config);
        doc["configs"][to_string(config)] = {{"s1", scores.s1}, {"s2", scores.s2}};
        os << to_string(config) << ": S1=" << format_double(scores.s1)
           << " S2=" << format_double(scores.s2) << "\n";
    }
    emit(format == "json" ? doc.dump(2) + "\n" : os.str(), output);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"steerlab: sequential-measurement steering and CHSH trade-off toolkit"};
    app.require_subcommand(1);

    std::string scenario;
    std::string alpha = "max";
    std::string format = "csv";
    std::string report_format = "text";
    std::string output;
    std::string mix = "1,3";
    std::string only;
    std::string family = "square";
    int samples = 4096;
    long seed = 0;
    double g = 0.8;
    bool inject_fault = false;

    CLI::App* tradeoff = app.add_subcommand("tradeoff", "write trade-off boundary and case arcs");
    tradeoff->add_option("--scenario", scenario, "scenario slug")->required();
    tradeoff->add_option("--alpha", alpha, "state parameter: 'max' or an angle");
    tradeoff->add_option("--samples", samples, "samples per case arc")
        ->check(CLI::Range(100, 1 << 20));
    tradeoff->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    tradeoff->add_option("--output", output, "output path ('-' for stdout)");
    tradeoff->add_option("--seed", seed, "recorded in the manifest");

    CLI::App* optimize = app.add_subcommand("optimize", "max-min double violation search");
    optimize->add_option("--scenario", scenario, "scenario slug")->required();
    optimize->add_option("--mix", mix, "case labels to mix, e.g. 1,3");
    optimize->add_option("--alpha", alpha, "'max', 'free' or an angle");
    optimize->add_option("--format", report_format)->check(CLI::IsMember({"text", "json"}));
    optimize->add_option("--output", output, "output path ('-' for stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run the reproduction check table");
    verify->add_option("--only", only, "restrict to one check group");
    verify->add_flag("--inject-fault", inject_fault, "corrupt one unitary (self-test)")
        ->group("");  // hidden

    CLI::App* weak = app.add_subcommand("weak", "weak-pointer benchmark scores");
    weak->add_option("--family", family, "pointer family: square or linear");
    weak->add_option("--g", g, "precision factor G")->check(CLI::Range(0.0, 1.0));
    weak->add_option("--format", report_format)->check(CLI::IsMember({"text", "json"}));
    weak->add_option("--output", output, "output path ('-' for stdout)");

    try {
        app.parse(argc, argv);
        if (tradeoff->parsed()) {
            return cmd_tradeoff(scenario, alpha, samples, format, output, seed);
        }
        if (optimize->parsed()) {
            return cmd_optimize(scenario, mix, alpha, report_format, output);
        }
        if (verify->parsed()) {
            return cmd_verify(only, inject_fault);
        }
        if (weak->parsed()) {
            return cmd_weak(family, g, report_format, output);
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
