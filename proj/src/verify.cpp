#include "steerlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>

#include "steerlab/envelope.hpp"
#include "steerlab/optimize.hpp"
#include "steerlab/strategies.hpp"
#include "steerlab/weak.hpp"

namespace steerlab {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

struct Collector {
    std::vector<CheckResult>& out;
    std::string only;

    bool wants(const std::string& group) const { return only.empty() || only == group; }

    void add(const std::string& group, const std::string& name, double expected,
             double computed, double tolerance) {
        out.push_back({group, name, expected, computed, tolerance,
                       std::abs(computed - expected) <= tolerance});
    }

    // For checks of the form "computed must stay below bound".
    void add_below(const std::string& group, const std::string& name, double bound,
                   double computed) {
        out.push_back({group, name, bound, computed, 0.0, computed < bound});
    }
};

DensityMatrix random_state(std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix g(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g.at(i, j) = Complex(normal(rng), normal(rng));
    CMatrix rho = g * g.adjoint();
    return DensityMatrix(rho * (1.0 / rho.trace().real()));
}

Observable random_xz(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(-kPi, kPi);
    return Observable::xz(uni(rng));
}

MeasurementAction random_action(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(-kPi, kPi);
    const CMatrix u = rot_y(uni(rng));
    if (rng() % 2 == 0) return MeasurementAction::identity(u);
    return MeasurementAction::projective(random_xz(rng), u);
}

StrategyCase corrupt_unitary(StrategyCase c) {
    auto build = c.build;
    c.build = [build](double angle) {
        CaseSettings s = build(angle);
        s.bob1 = MeasurementAction::projective(
            s.bob1.kind == MeasurementAction::Kind::Projective ? s.bob1.obs
                                                               : Observable::xz(0.0),
            s.bob1.post_unitary * rot_y(0.05));
        return s;
    };
    return c;
}

// ---------------------------------------------------------------------------
// Group: cross — simulated (S1, S2) against every printed closed form.
// ---------------------------------------------------------------------------
void check_cross(Collector& col, bool inject_fault) {
    const std::vector<ScenarioId> scenarios = {ScenarioId::SteerAB_LL, ScenarioId::SteerAB_CL,
                                               ScenarioId::SteerBC_LL_3a,
                                               ScenarioId::SteerBC_LL_3b};
    const std::vector<double> general_alphas = {7.0 * kPi / 36.0, 23.0 * kPi / 96.0,
                                                10.0 * kPi / 37.0, 0.31};
    bool fault_pending = inject_fault;
    for (ScenarioId scenario : scenarios) {
        for (const StrategyCase& base : all_printed_cases(scenario, kPi / 4.0)) {
            if (!base.has_closed_form()) continue;
            std::vector<double> alphas;
            if (base.family == SettingsFamily::MaximalForm) {
                alphas = {kPi / 4.0};
            } else {
                alphas = general_alphas;
            }
            double worst = 0.0;
            for (double alpha : alphas) {
                StrategyCase c;
                bool found = false;
                for (const StrategyCase& cand : all_printed_cases(scenario, alpha)) {
                    if (cand.id == base.id && cand.family == base.family) {
                        c = cand;
                        found = true;
                        break;
                    }
                }
                if (!found) continue;
                if (fault_pending && c.family == SettingsFamily::MaximalForm &&
                    c.id == CaseId::One) {
                    c = corrupt_unitary(c);
                    fault_pending = false;
                }
                const DensityMatrix rho = partial_entangled(alpha);
                const int grid = 200;
                for (int k = 0; k <= grid; ++k) {
                    const double angle =
                        c.angle_min + (c.angle_max - c.angle_min) * k / static_cast<double>(grid);
                    const auto sim = simulate_case(c, angle, rho);
                    const auto ana = closed_form_scores(c, angle);
                    worst = std::max({worst, std::abs(sim.first - ana.first),
                                      std::abs(sim.second - ana.second)});
                }
            }
            const std::string family_tag =
                base.family == SettingsFamily::MaximalForm ? "maximal" : "general";
            col.add("cross",
                    to_string(scenario) + " case " + to_string(base.id) + " (" + family_tag +
                        ") max |sim - closed|",
                    0.0, worst, 1e-10);
        }
    }
}

// ---------------------------------------------------------------------------
// Group: bounds — the two quantum-bound checks.
// ---------------------------------------------------------------------------
void check_bounds(Collector& col) {
    const DensityMatrix rho = max_entangled();
    for (const StrategyCase& c : case_catalog(ScenarioId::SteerAB_LL, kPi / 4.0)) {
        if (c.id == CaseId::Two) {
            col.add("bounds", "steer-ab-ll case 2 second witness at quantum bound", kSqrt2,
                    simulate_case(c, 0.0, rho).second, 1e-10);
        }
    }
    for (const StrategyCase& c : case_catalog(ScenarioId::SteerAB_CL, kPi / 4.0)) {
        if (c.id == CaseId::One) {
            col.add("bounds", "steer-ab-cl case 1 CHSH at Tsirelson point", kSqrt2,
                    simulate_case(c, kPi / 4.0, rho).first, 1e-10);
        }
    }
}

// ---------------------------------------------------------------------------
// Group: envelope — reproduction of the four printed piecewise boundaries.
// ---------------------------------------------------------------------------

double invert_increasing(const std::function<double(double)>& f, double target, double lo,
                         double hi) {
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct PrintedEnvelope {
    ScenarioId scenario;
    std::vector<double> breakpoints;
    std::function<double(double)> value;
    std::vector<std::string> regions;
};

std::vector<PrintedEnvelope> printed_envelopes() {
    std::vector<PrintedEnvelope> out;

    const auto arc_case1 = [](double x) { return 0.5 * (x + std::sqrt(2.0 - x * x)); };

    out.push_back(
        {ScenarioId::SteerAB_LL,
         {0.656, 1.180},
         [arc_case1](double x) {
             if (x <= 0.656) return (kSqrt2 - std::sqrt(3.5)) * x + kSqrt2;
             if (x <= 1.180) return -0.257 * x + 1.283;
             return arc_case1(x);
         },
         {"mix(2|3)", "mix(1|3)", "arc(1)"}});

    const double b51 = std::sqrt(7.0 / 8.0);
    out.push_back(
        {ScenarioId::SteerAB_CL,
         {b51, 0.978, 1.254},
         [b51](double x) {
             if (x <= b51) return (1.0 - std::sqrt(7.0) / 2.0) * x + kSqrt2;
             if (x <= 0.978) return x + std::sqrt(1.0 - x * x) / 2.0;
             if (x <= 1.254) return -1.337 * x + 2.390;
             // Pure two-projective arc, inverted parametrically.
             const double mu = invert_increasing(
                 [](double m) { return 0.5 * (3.0 * std::cos(m) - std::cos(3.0 * m)); }, x, 0.0,
                 kPi / 4.0);
             const double c = std::cos(mu);
             return c * c * c;
         },
         {"mix(2|3)", "arc(3)", "mix(1|3)", "arc(1)"}});

    out.push_back({ScenarioId::SteerBC_LL_3a,
                   {0.619, 1.161},
                   [arc_case1](double x) {
                       if (x <= 0.619) return -0.503 * x + kSqrt2;
                       if (x <= 1.161) return -0.218 * x + 1.238;
                       return arc_case1(x);
                   },
                   {"mix(2|3a)", "mix(1|3a)", "arc(1)"}});

    out.push_back({ScenarioId::SteerBC_LL_3b,
                   {0.565, 1.156},
                   [arc_case1](double x) {
                       if (x <= 0.565)
                           return std::sqrt(5.0) / 2.0 * (1.0 - std::sqrt(11.0 / 5.0)) * x +
                                  kSqrt2;
                       if (x <= 1.156) return -0.209 * x + 1.227;
                       return arc_case1(x);
                   },
                   {"mix(2|3b)", "mix(1|3b)", "arc(1)"}});
    return out;
}

void check_envelope(Collector& col) {
    for (const PrintedEnvelope& ref : printed_envelopes()) {
        const TradeoffEnvelope env =
            build_envelope(case_catalog(ref.scenario, kPi / 4.0), 4096);
        double worst = 0.0;
        const int grid = 2000;
        for (int k = 0; k <= grid; ++k) {
            const double x = kSqrt2 * k / static_cast<double>(grid);
            worst = std::max(worst, std::abs(env.value_at(x) - ref.value(x)));
        }
        col.add("envelope", to_string(ref.scenario) + " boundary vs printed pieces", 0.0, worst,
                2e-3);

        const std::vector<double> got = env.interior_breakpoints();
        for (std::size_t i = 0; i < ref.breakpoints.size(); ++i) {
            double nearest = 1e9;
            for (double g : got) nearest = std::min(nearest, std::abs(g - ref.breakpoints[i]));
            col.add("envelope",
                    to_string(ref.scenario) + " breakpoint near " +
                        std::to_string(ref.breakpoints[i]),
                    0.0, nearest, 5e-3);
        }

        bool regions_match = env.segments().size() == ref.regions.size();
        if (regions_match) {
            for (std::size_t i = 0; i < ref.regions.size(); ++i) {
                regions_match &= to_string(env.segments()[i].label) == ref.regions[i];
            }
        }
        col.add("envelope", to_string(ref.scenario) + " region sequence", 1.0,
                regions_match ? 1.0 : 0.0, 0.0);

        col.add("envelope",
                to_string(ref.scenario) + " diagonal crossing vs mixed optimum",
                optimize_pattern_tokens(ref.scenario, {"1", "3"}, kPi / 4.0).value,
                env.diagonal_crossing(), 2e-3);
    }
}

// ---------------------------------------------------------------------------
// Group: optimum — maximal-state optima.
// ---------------------------------------------------------------------------
void check_optimum(Collector& col) {
    const double a = kPi / 4.0;
    const auto run = [&](ScenarioId s, std::vector<std::string> tokens) {
        return optimize_pattern_tokens(s, tokens, a);
    };

    col.add("optimum", "steer-ab-ll mix {1,3}", 1.021,
            run(ScenarioId::SteerAB_LL, {"1", "3"}).value, 2e-3);
    {
        const ViolationOptimum r = run(ScenarioId::SteerAB_LL, {"1", "2"});
        col.add("optimum", "steer-ab-ll mix {1,2}", 1.035, r.value, 2e-3);
        col.add("optimum", "steer-ab-ll mix {1,2} first-case weight", 0.845, r.mix[0], 0.02);
    }
    col.add("optimum", "steer-ab-cl mix {1,3}", 1.022,
            run(ScenarioId::SteerAB_CL, {"1", "3"}).value, 2e-3);
    col.add("optimum", "steer-ab-cl mix {1,2}", 1.0,
            run(ScenarioId::SteerAB_CL, {"1", "2"}).value, 2e-3);
    col.add("optimum", "steer-bc-ll-3a mix {1,3}", 1.016,
            run(ScenarioId::SteerBC_LL_3a, {"1", "3"}).value, 2e-3);
    col.add("optimum", "steer-bc-ll-3b mix {1,3}", 1.015,
            run(ScenarioId::SteerBC_LL_3b, {"1", "3"}).value, 2e-3);
    {
        const ViolationOptimum r = run(ScenarioId::SteerBC_LL_3a, {"1", "2"});
        col.add("optimum", "steer-bc-ll-3a mix {1,2}", 1.035, r.value, 2e-3);
        col.add("optimum", "steer-bc-ll-3a mix {1,2} first-case weight", 0.845, r.mix[0], 0.02);
    }
}

// ---------------------------------------------------------------------------
// Group: optimum-alpha — state-optimized optima.
// ---------------------------------------------------------------------------
void check_optimum_alpha(Collector& col) {
    const auto run = [&](ScenarioId s, std::vector<std::string> tokens) {
        return optimize_pattern_tokens(s, tokens, std::nullopt);
    };
    // Companion rows: the reported optimum values also hold with the state
    // pinned at the published parameter.
    const auto at_stated = [&](ScenarioId s, std::vector<std::string> tokens, double alpha) {
        return optimize_pattern_tokens(s, tokens, alpha).value;
    };

    {
        const ViolationOptimum r = run(ScenarioId::SteerAB_LL, {"1", "3"});
        col.add("optimum-alpha", "steer-ab-ll mix {1,3} value", 1.021, r.value, 2e-3);
        col.add("optimum-alpha", "steer-ab-ll mix {1,3} alpha", 23.0 * kPi / 96.0, r.alpha, 0.01);
        col.add("optimum-alpha", "steer-ab-ll mix {1,3} value at alpha=23pi/96", 1.021,
                at_stated(ScenarioId::SteerAB_LL, {"1", "3"}, 23.0 * kPi / 96.0), 2e-3);
    }
    {
        const ViolationOptimum r = run(ScenarioId::SteerAB_LL, {"1", "2"});
        col.add("optimum-alpha", "steer-ab-ll mix {1,2} value", 1.043, r.value, 2e-3);
        col.add("optimum-alpha", "steer-ab-ll mix {1,2} alpha", 7.0 * kPi / 36.0, r.alpha, 0.01);
        col.add("optimum-alpha", "steer-ab-ll mix {1,2} value at alpha=7pi/36", 1.043,
                at_stated(ScenarioId::SteerAB_LL, {"1", "2"}, 7.0 * kPi / 36.0), 2e-3);
    }
    {
        const ViolationOptimum r = run(ScenarioId::SteerAB_CL, {"1", "3"});
        col.add("optimum-alpha", "steer-ab-cl mix {1,3} value", 1.030, r.value, 2e-3);
        col.add("optimum-alpha", "steer-ab-cl mix {1,3} alpha", 2.0 * kPi / 9.0, r.alpha, 0.01);
        col.add("optimum-alpha", "steer-ab-cl mix {1,3} value at alpha=2pi/9", 1.030,
                at_stated(ScenarioId::SteerAB_CL, {"1", "3"}, 2.0 * kPi / 9.0), 2e-3);
    }
    {
        const ViolationOptimum r = run(ScenarioId::SteerBC_LL_3a, {"1", "3"});
        col.add("optimum-alpha", "steer-bc-ll-3a mix {1,3} value", 1.017, r.value, 2e-3);
        col.add("optimum-alpha", "steer-bc-ll-3a mix {1,3} alpha", 10.0 * kPi / 37.0, r.alpha,
                0.01);
        col.add("optimum-alpha", "steer-bc-ll-3a mix {1,3} value at alpha=10pi/37", 1.017,
                at_stated(ScenarioId::SteerBC_LL_3a, {"1", "3"}, 10.0 * kPi / 37.0), 2e-3);
    }
    {
        const ViolationOptimum r = run(ScenarioId::SteerBC_LL_3a, {"1", "2"});
        col.add("optimum-alpha", "steer-bc-ll-3a mix {1,2} value", 1.043, r.value, 2e-3);
        col.add("optimum-alpha", "steer-bc-ll-3a mix {1,2} alpha", 7.0 * kPi / 36.0, r.alpha,
                0.01);
        col.add("optimum-alpha", "steer-bc-ll-3a mix {1,2} value at alpha=7pi/36", 1.043,
                at_stated(ScenarioId::SteerBC_LL_3a, {"1", "2"}, 7.0 * kPi / 36.0), 2e-3);
    }
    {
        const ViolationOptimum r = run(ScenarioId::SteerBC_LL_3b, {"1", "3"});
        col.add("optimum-alpha", "steer-bc-ll-3b mix {1,3} value", 1.016, r.value, 2e-3);
        col.add("optimum-alpha", "steer-bc-ll-3b mix {1,3} alpha", 10.0 * kPi / 37.0, r.alpha,
                0.01);
        col.add("optimum-alpha", "steer-bc-ll-3b mix {1,3} value at alpha=10pi/37", 1.016,
                at_stated(ScenarioId::SteerBC_LL_3b, {"1", "3"}, 10.0 * kPi / 37.0), 2e-3);
    }
}

// ---------------------------------------------------------------------------
// Group: negative — hybrid pairings that never doubly violate.
// ---------------------------------------------------------------------------
void check_negative(Collector& col) {
    OptimizeOptions fast;
    fast.angle_grid = 180;
    fast.refine_starts = 6;
    for (ScenarioId scenario :
         {ScenarioId::SteerAB_LC, ScenarioId::SteerBC_CL, ScenarioId::SteerBC_LC}) {
        double best = 0.0;
        for (int k = 0; k < 50; ++k) {
            const double alpha = kPi / 4.0 * k / 49.0;
            for (const std::vector<std::string>& tokens :
                 {std::vector<std::string>{"1", "2"}, std::vector<std::string>{"1", "3"}}) {
                best = std::max(best,
                                optimize_pattern_tokens(scenario, tokens, alpha, fast).value);
            }
        }
        col.add_below("negative", to_string(scenario) + " max min(S1,S2) over alpha grid",
                      1.0 - 1e-6, best);
    }
}

// ---------------------------------------------------------------------------
// Group: weak — pointer benchmark through the joint-probability pipeline.
// ---------------------------------------------------------------------------
void check_weak(Collector& col) {
    const PointerModel pointer = PointerModel::square(0.8);
    const double expected = 1.6 / kSqrt2;  // sqrt(2) G = (1 + F) / sqrt(2) at G = 0.8
    for (WeakConfig config : all_weak_configs()) {
        const WeakScores scores = weak_benchmark(pointer, config);
        col.add("weak", "square pointer G=0.8 " + to_string(config) + " S1", expected, scores.s1,
                1e-5);
        col.add("weak", "square pointer G=0.8 " + to_string(config) + " S2", expected, scores.s2,
                1e-5);
    }
}

// ---------------------------------------------------------------------------
// Group: properties — randomized structural checks.
// ---------------------------------------------------------------------------
void check_properties(Collector& col) {
    std::mt19937_64 rng(20240817);

    double worst_trace = 0.0;
    double worst_eig = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const DensityMatrix rho = random_state(rng);
        const DensityMatrix out = bob_channel(rho, random_action(rng), random_action(rng));
        worst_trace = std::max(worst_trace, std::abs(out.mat().trace().real() - 1.0));
        worst_eig = std::min(worst_eig, out.mat().min_eigenvalue());
        // weak back-action: the outcome sum is trace preserving
        const PointerModel pointer =
            rng() % 2 == 0 ? PointerModel::square(0.3 + 0.6 * (i % 7) / 7.0)
                           : PointerModel::linear(0.3 + 0.6 * (i % 7) / 7.0);
        const Observable o = random_xz(rng);
        const CMatrix outcome_sum =
            weak_channel(rho, o, pointer, +1) + weak_channel(rho, o, pointer, -1);
        worst_trace = std::max(worst_trace, std::abs(outcome_sum.trace().real() - 1.0));
        worst_eig = std::min(worst_eig, weak_channel(rho, o, pointer, +1).min_eigenvalue());
        worst_eig = std::min(worst_eig, weak_channel(rho, o, pointer, -1).min_eigenvalue());
    }
    col.add("properties", "channel trace preservation (1000 random)", 0.0, worst_trace, 1e-10);
    col.add("properties", "channel positivity (1000 random)", 0.0, std::min(0.0, worst_eig),
            1e-10);

    // strong-measurement limit of the weak pointer
    {
        std::mt19937_64 rng2(7);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const DensityMatrix rho = random_state(rng2);
            const Observable o = random_xz(rng2);
            const PointerModel strong = PointerModel::square(1.0);
            for (int outcome : {+1, -1}) {
                const CMatrix weak = weak_channel(rho, o, strong, outcome);
                const CMatrix lifted = tensor(CMatrix::identity(2), projector(o, outcome));
                const CMatrix proj = lifted * rho.mat() * lifted.adjoint();
                worst = std::max(worst, weak.max_abs_diff(proj));
            }
        }
        col.add("properties", "weak channel meets projective at G=1", 0.0, worst, 1e-12);
    }

    // joint-probability normalization and marginal consistency
    {
        std::mt19937_64 rng3(99);
        double worst_norm = 0.0;
        double worst_marg = 0.0;
        for (int i = 0; i < 100; ++i) {
            const DensityMatrix rho = random_state(rng3);
            const Observable alice = random_xz(rng3);
            const Observable charlie = random_xz(rng3);
            const MeasurementAction b0 = random_action(rng3);
            const MeasurementAction b1 = random_action(rng3);
            for (const MeasurementAction& action : {b0, b1}) {
                double total = 0.0;
                for (int a : {+1, -1})
                    for (int b : {+1, -1})
                        for (int c : {+1, -1})
                            total += joint_probability(rho, alice, action, charlie, a, b, c);
                worst_norm = std::max(worst_norm, std::abs(total - 1.0));

                // sum over c reproduces first-pair statistics
                for (int a : {+1, -1}) {
                    for (int b : {+1, -1}) {
                        double lhs = 0.0;
                        for (int c : {+1, -1})
                            lhs += joint_probability(rho, alice, action, charlie, a, b, c);
                        double rhs = 0.0;
                        if (action.kind == MeasurementAction::Kind::Identity) {
                            rhs = b == 1 ? correlation(rho, projector(alice, a),
                                                       CMatrix::identity(2))
                                         : 0.0;
                        } else {
                            rhs = correlation(rho, projector(alice, a),
                                              projector(action.obs, b));
                        }
                        worst_marg = std::max(worst_marg, std::abs(lhs - rhs));
                    }
                }
            }
            // setting-averaged sum over b reproduces second-pair statistics
            const DensityMatrix rho_ac = bob_channel(rho, b0, b1);
            for (int a : {+1, -1}) {
                for (int c : {+1, -1}) {
                    double lhs = 0.0;
                    for (const MeasurementAction& action : {b0, b1})
                        for (int b : {+1, -1})
                            lhs += 0.5 * joint_probability(rho, alice, action, charlie, a, b, c);
                    const double rhs =
                        correlation(rho_ac, projector(alice, a), projector(charlie, c));
                    worst_marg = std::max(worst_marg, std::abs(lhs - rhs));
                }
            }
        }
        col.add("properties", "joint probability normalization (100 random)", 0.0, worst_norm,
                1e-10);
        col.add("properties", "joint probability marginal consistency", 0.0, worst_marg, 1e-10);
    }

    // no-signalling under identity actions: channel output equals the input
    {
        std::mt19937_64 rng4(123);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const DensityMatrix rho = random_state(rng4);
            const MeasurementAction id0 = MeasurementAction::identity();
            const DensityMatrix out = bob_channel(rho, id0, id0);
            worst = std::max(worst, out.mat().max_abs_diff(rho.mat()));
        }
        col.add("properties", "identity actions leave the state untouched", 0.0, worst, 1e-12);
    }

    // envelope dominance: mixtures along the construction pairings stay below
    {
        const std::vector<StrategyCase> cases =
            case_catalog(ScenarioId::SteerAB_LL, kPi / 4.0);
        const TradeoffEnvelope env = build_envelope(cases, 32768);
        const DensityMatrix rho = max_entangled();
        std::mt19937_64 rng5(4242);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        double worst = -1.0;
        for (int i = 0; i < 10000; ++i) {
            // random pair routed through the one-of-each case, random angles
            const std::size_t other = rng5() % 2;  // case 1 or case 2
            const StrategyCase& c3 = cases[2];
            const StrategyCase& co = cases[other];
            const double t3 = c3.angle_min + (c3.angle_max - c3.angle_min) * uni(rng5);
            const double to = co.angle_min + (co.angle_max - co.angle_min) * uni(rng5);
            const auto p3 = simulate_case(c3, t3, rho);
            const auto po = simulate_case(co, to, rho);
            const double p = uni(rng5);
            const double x = p * p3.first + (1.0 - p) * po.first;
            const double y = p * p3.second + (1.0 - p) * po.second;
            if (x < env.s1_min() || x > env.s1_max()) continue;
            worst = std::max(worst, y - env.value_at(x));
        }
        col.add("properties", "envelope dominance over 10^4 mixtures", 0.0, std::max(0.0, worst),
                1e-8);
    }

    // affinity of score mixing
    {
        std::mt19937_64 rng6(31415);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            std::vector<std::pair<double, double>> pairs = {{uni(rng6), uni(rng6)},
                                                            {uni(rng6), uni(rng6)},
                                                            {uni(rng6), uni(rng6)}};
            double w0 = uni(rng6), w1 = uni(rng6) * (1.0 - w0);
            const std::vector<double> mix = {w0, w1, 1.0 - w0 - w1};
            const auto direct = mixed_scores(pairs, mix);
            double s1 = 0.0, s2 = 0.0;
            for (std::size_t k = 0; k < 3; ++k) {
                s1 += mix[k] * pairs[k].first;
                s2 += mix[k] * pairs[k].second;
            }
            worst = std::max({worst, std::abs(direct.first - s1), std::abs(direct.second - s2)});
        }
        col.add("properties", "score mixing is affine", 0.0, worst, 1e-12);
    }
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    Collector col{results, options.only};
    if (col.wants("cross")) check_cross(col, options.inject_fault);
    if (col.wants("bounds")) check_bounds(col);
    if (col.wants("envelope")) check_envelope(col);
    if (col.wants("optimum")) check_optimum(col);
    if (col.wants("optimum-alpha")) check_optimum_alpha(col);
    if (col.wants("negative")) check_negative(col);
    if (col.wants("weak")) check_weak(col);
    if (col.wants("properties")) check_properties(col);
    return results;
}

int print_verification(std::ostream& os, const std::vector<CheckResult>& results) {
    int passed = 0;
    for (const CheckResult& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(14) << r.group
           << std::setw(64) << r.name << " expected=" << std::setprecision(10) << r.expected
           << " computed=" << std::setprecision(10) << r.computed << " tol=" << r.tolerance
           << "\n";
        passed += r.pass ? 1 : 0;
    }
    os << passed << "/" << results.size() << " checks passed\n";
    return passed;
}

}  // namespace steerlab
