#include "steerlab/strategies.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace steerlab {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt5 = std::sqrt(5.0);
const double kSqrt10 = std::sqrt(10.0);

SettingPair pair_xz(double t0, double t1) { return {Observable::xz(t0), Observable::xz(t1)}; }

// Third-observer directions (2 sigma_1 -+ sigma_3) / sqrt(5).
SettingPair charlie_tilted_pair() {
    return {Observable(2.0 / kSqrt5, 0.0, -1.0 / kSqrt5),
            Observable(2.0 / kSqrt5, 0.0, 1.0 / kSqrt5)};
}

MeasurementAction proj_xz(double t, CMatrix u = CMatrix::identity(2)) {
    return MeasurementAction::projective(Observable::xz(t), std::move(u));
}

struct CaseSpec {
    CaseId id;
    std::string angle_name;  // empty if the case has no free angle
    std::function<CaseSettings(double, double)> build;        // (alpha, angle)
    std::function<std::pair<double, double>(double, double)>  // (alpha, angle)
        closed_form;                                          // absent for unscored scenarios
};

StrategyCase instantiate(ScenarioId scenario, SettingsFamily family, double alpha,
                         const CaseSpec& spec, WitnessKind s1_kind, WitnessKind s2_kind,
                         bool keep_closed_form) {
    StrategyCase c;
    c.scenario = scenario;
    c.id = spec.id;
    c.family = family;
    c.alpha = alpha;
    c.angle_count = spec.angle_name.empty() ? 0 : 1;
    c.angle_name = spec.angle_name;
    c.angle_min = -kPi / 2.0;
    c.angle_max = kPi / 2.0;
    c.s1_kind = s1_kind;
    c.s2_kind = s2_kind;
    auto build = spec.build;
    c.build = [build, alpha](double angle) { return build(alpha, angle); };
    if (keep_closed_form && spec.closed_form) {
        auto cf = spec.closed_form;
        c.closed_form = [cf, alpha](double angle) { return cf(alpha, angle); };
    }
    return c;
}

// ---------------------------------------------------------------------------
// First party steering the sequential pair: maximal-state settings.
// ---------------------------------------------------------------------------

std::vector<CaseSpec> steer_ab_ll_maximal() {
    std::vector<CaseSpec> cases;
    cases.push_back({CaseId::One, "case1_alice_tilt",
                     [](double, double t) {
                         CaseSettings s;
                         s.alice = pair_xz(t, -t);
                         s.bob0 = proj_xz(-kPi / 4.0);
                         s.bob1 = proj_xz(kPi / 4.0, rot_y(kPi / 4.0));
                         s.charlie = pair_xz(-kPi / 4.0, -kPi / 4.0);
                         return s;
                     },
                     [](double, double t) {
                         return std::pair{std::abs(std::cos(t) - std::sin(t)),
                                          std::abs(std::cos(t))};
                     }});
    cases.push_back({CaseId::Two, "",
                     [](double, double) {
                         CaseSettings s;
                         s.alice = pair_xz(kPi / 4.0, -kPi / 4.0);
                         s.charlie = pair_xz(kPi / 4.0, -kPi / 4.0);
                         return s;
                     },
                     [](double, double) { return std::pair{0.0, kSqrt2}; }});
    cases.push_back({CaseId::Three, "case3_alice_tilt",
                     [](double, double t) {
                         CaseSettings s;
                         s.alice = pair_xz(t, -t);
                         s.bob0 = MeasurementAction::identity();
                         s.bob1 = proj_xz(0.0);
                         s.charlie = pair_xz(kPi / 4.0, -kPi / 4.0);
                         return s;
                     },
                     [](double, double t) {
                         return std::pair{std::abs(std::cos(t)) / kSqrt2,
                                          std::abs(2.0 * std::cos(t) + std::sin(t)) / 2.0};
                     }});
    return cases;
}

std::vector<CaseSpec> steer_ab_ll_general() {
    std::vector<CaseSpec> cases;
    cases.push_back({CaseId::One, "case1_alice_tilt",
                     [](double, double t) {
                         CaseSettings s;
                         s.alice = pair_xz(t, -t);
                         s.bob0 = proj_xz(-kPi / 4.0);
                         s.bob1 = proj_xz(kPi / 4.0, rot_y(-kPi / 4.0));
                         s.charlie = pair_xz(-kPi / 4.0, 3.0 * kPi / 4.0);
                         return s;
                     },
                     [](double a, double t) {
                         return std::pair{
                             std::abs(std::cos(t) * std::sin(2.0 * a) - std::sin(t)),
                             std::abs(std::sin(t))};
                     }});
    cases.push_back({CaseId::Two, "",
                     [](double, double) {
                         CaseSettings s;
                         s.alice = pair_xz(kPi / 4.0, 3.0 * kPi / 4.0);
                         s.charlie = pair_xz(kPi / 4.0, 3.0 * kPi / 4.0);
                         return s;
                     },
                     [](double a, double) {
                         return std::pair{std::abs(std::cos(2.0 * a)),
                                          (1.0 + std::sin(2.0 * a)) / kSqrt2};
                     }});
    cases.push_back({CaseId::Three, "case3_alice_tilt",
                     [](double, double t) {
                         CaseSettings s;
                         s.alice = pair_xz(t, -t);
                         s.bob0 = MeasurementAction::identity();
                         s.bob1 = proj_xz(0.0);
                         s.charlie = pair_xz(kPi / 4.0, -kPi / 4.0);
                         return s;
                     },
                     [](double a, double t) {
                         return std::pair{
                             std::abs(std::sin(2.0 * a + t)) / kSqrt2,
                             std::abs(2.0 * std::cos(t) * std::sin(2.0 * a) + std::sin(t)) / 2.0};
                     }});
    return cases;
}

std::vector<CaseSpec> steer_ab_cl_maximal() {
    std::vector<CaseSpec> cases;
    cases.push_back({CaseId::One, "case1_alice_tilt",
                     [](double, double t) {
                         CaseSettings s;
                         s.alice = pair_xz(t, -t);
                         s.bob0 = proj_xz(0.0);
                         s.bob1 = proj_xz(2.0 * t, rot_y(t));
                         s.charlie = pair_xz(-kPi / 4.0, kPi / 4.0);
                         return s;
                     },
                     [](double, double t) {
                         const double c = std::cos(t);
                         return std::pair{0.5 * (3.0 * c - std::cos(3.0 * t)),
                                          std::abs(c * c * c)};
                     }});
    cases.push_back({CaseId::Two, "",
                     [](double, double) {
                         CaseSettings s;
                         s.alice = pair_xz(kPi / 4.0, -kPi / 4.0);
                         s.charlie = pair_xz(kPi / 4.0, -kPi / 4.0);
                         return s;
                     },
                     [](double, double) { return std::pair{0.0, kSqrt2}; }});
    cases.push_back({CaseId::Three, "case3_alice_tilt",
                     [](double, double t) {
                         CaseSettings s;
                         s.alice = pair_xz(t, -t);
                         s.bob0 = MeasurementAction::identity();
                         s.bob1 = proj_xz(kPi / 2.0);
                         s.charlie = pair_xz(kPi / 4.0, -kPi / 4.0);
                         return s;
                     },
                     [](double, double t) {
                         return std::pair{std::sin(t),
                                          std::abs(std::cos(t) + 2.0 * std::sin(t)) / 2.0};
                     }});
    return cases;
}

std::vector<CaseSpec> steer_ab_cl_general() {
    std::vector<CaseSpec> cases;
    cases.push_back({CaseId::One, "case1_alice_tilt",
                     [](double, double t) {
                         CaseSettings s;
                         s.alice = pair_xz(t, -t);
                         s.bob0 = proj_xz(0.0);
                         s.bob1 = proj_xz(2.0 * t, rot_y(t));
                         s.charlie = pair_xz(-kPi / 4.0, kPi / 4.0);
                         return s;
                     },
                     [](double a, double t) {
                         const double c = std::cos(t);
                         return std::pair{
                             c * (1.0 + std::sin(2.0 * a) - std::cos(2.0 * t)),
                             std::abs(std::sin(2.0 * a) * c * c * c)};
                     }});
    cases.push_back({CaseId::Two, "",
                     [](double, double) {
                         CaseSettings s;
                         s.alice = pair_xz(kPi / 2.0, 0.0);
                         s.charlie = pair_xz(kPi / 2.0, 0.0);
                         return s;
                     },
                     [](double a, double) {
                         return std::pair{std::cos(2.0 * a),
                                          (1.0 + std::sin(2.0 * a)) / kSqrt2};
                     }});
    cases.push_back({CaseId::Three, "case3_alice_tilt",
                     [](double, double t) {
                         CaseSettings s;
                         s.alice = pair_xz(t, kPi - t);
                         s.bob0 = MeasurementAction::identity();
                         s.bob1 = proj_xz(0.0);
                         s.charlie = pair_xz(kPi / 4.0, 3.0 * kPi / 4.0);
                         return s;
                     },
                     [](double a, double t) {
                         return std::pair{
                             std::sin(2.0 * a + t),
                             std::abs(2.0 * std::cos(t) * std::sin(2.0 * a) + std::sin(t)) / 2.0};
                     }});
    return cases;
}

// ---------------------------------------------------------------------------
// Sequential pair steering the first party.
// ---------------------------------------------------------------------------

std::vector<CaseSpec> steer_bc_maximal(bool alt_three) {
    std::vector<CaseSpec> cases;
    cases.push_back({CaseId::One, "case1_bob_tilt",
                     [](double, double t) {
                         CaseSettings s;
                         s.alice = pair_xz(-kPi / 4.0, kPi / 4.0);
                         s.bob0 = proj_xz(t);
                         s.bob1 = proj_xz(-t, rot_y(-t));
                         s.charlie = pair_xz(t, t);
                         return s;
                     },
                     [](double, double t) {
                         return std::pair{std::abs(std::cos(t) - std::sin(t)),
                                          std::abs(std::cos(t))};
                     }});
    cases.push_back({CaseId::Two, "",
                     [](double, double) {
                         CaseSettings s;
                         s.alice = pair_xz(-kPi / 4.0, kPi / 4.0);
                         s.charlie = pair_xz(-kPi / 4.0, kPi / 4.0);
                         return s;
                     },
                     [](double, double) { return std::pair{0.0, kSqrt2}; }});
    if (!alt_three) {
        cases.push_back({CaseId::ThreeA, "case3a_bob_tilt",
                         [](double, double t) {
                             CaseSettings s;
                             s.alice = pair_xz(-kPi / 4.0, kPi / 4.0);
                             s.bob0 = MeasurementAction::identity();
                             s.bob1 = proj_xz(t);
                             s.charlie = charlie_tilted_pair();
                             return s;
                         },
                         [](double, double t) {
                             return std::pair{
                                 std::abs(std::sin(t) + std::cos(t)) / 2.0,
                                 std::abs(9.0 + std::cos(2.0 * t)) / (4.0 * kSqrt5)};
                         }});
    } else {
        cases.push_back({CaseId::ThreeB, "case3b_alice_tilt",
                         [](double, double t) {
                             CaseSettings s;
                             s.alice = pair_xz(t, t + kPi / 2.0);
                             s.bob0 = MeasurementAction::identity();
                             s.bob1 = proj_xz(0.0);
                             s.charlie = charlie_tilted_pair();
                             return s;
                         },
                         [](double, double t) {
                             return std::pair{
                                 std::abs(std::sin(t)) / kSqrt2,
                                 kSqrt10 / 4.0 * std::abs(std::cos(t) - std::sin(t))};
                         }});
    }
    return cases;
}

std::vector<CaseSpec> steer_bc_general(bool alt_three) {
    std::vector<CaseSpec> cases;
    cases.push_back({CaseId::One, "case1_bob_tilt",
                     [](double, double t) {
                         CaseSettings s;
                         s.alice = pair_xz(-kPi / 4.0, kPi / 4.0);
                         s.bob0 = proj_xz(t);
                         s.bob1 = proj_xz(-t, rot_y(-(kPi / 2.0 + t)));
                         s.charlie = pair_xz(t, t + kPi);
                         return s;
                     },
                     [](double a, double t) {
                         return std::pair{
                             std::abs(std::cos(t) * std::sin(2.0 * a) - std::sin(t)),
                             std::abs(std::sin(t))};
                     }});
    cases.push_back({CaseId::Two, "",
                     [](double, double) {
                         CaseSettings s;
                         s.alice = pair_xz(kPi / 4.0, 3.0 * kPi / 4.0);
                         s.charlie = pair_xz(kPi / 4.0, 3.0 * kPi / 4.0);
                         return s;
                     },
                     [](double a, double) {
                         return std::pair{std::abs(std::cos(2.0 * a)),
                                          (1.0 + std::sin(2.0 * a)) / kSqrt2};
                     }});
    if (!alt_three) {
        cases.push_back({CaseId::ThreeA, "case3a_bob_tilt",
                         [](double, double t) {
                             CaseSettings s;
                             s.alice = pair_xz(-kPi / 4.0, kPi / 4.0);
                             s.bob0 = MeasurementAction::identity();
                             s.bob1 = proj_xz(t);
                             s.charlie = charlie_tilted_pair();
                             return s;
                         },
                         [](double a, double t) {
                             const double s2a = std::sin(2.0 * a);
                             const double c2a = std::cos(2.0 * a);
                             const double s1 =
                                 std::abs(s2a * std::cos(t) + std::sin(t) - c2a) / 2.0;
                             const double s2 =
                                 std::abs(3.0 - std::cos(2.0 * t) + 6.0 * s2a +
                                          std::sin(2.0 * a - 2.0 * t) +
                                          std::sin(2.0 * a + 2.0 * t)) /
                                 (4.0 * kSqrt5);
                             return std::pair{s1, s2};
                         }});
    } else {
        cases.push_back({CaseId::ThreeB, "case3b_alice_tilt",
                         [](double, double t) {
                             CaseSettings s;
                             s.alice = pair_xz(t, t + kPi / 2.0);
                             s.bob0 = MeasurementAction::identity();
                             s.bob1 = proj_xz(0.0);
                             s.charlie = charlie_tilted_pair();
                             return s;
                         },
                         [](double a, double t) {
                             const double s2a = std::sin(2.0 * a);
                             const double c2a = std::cos(2.0 * a);
                             return std::pair{
                                 std::abs((c2a - s2a) * std::sin(t)) / kSqrt2,
                                 std::abs((1.0 + 4.0 * s2a) * (std::cos(t) - std::sin(t))) /
                                     (2.0 * kSqrt10)};
                         }});
    }
    return cases;
}

bool near_maximal(double alpha) { return std::abs(alpha - kPi / 4.0) < 1e-12; }

struct ScenarioPlan {
    WitnessKind s1_kind;
    WitnessKind s2_kind;
    bool scored;  // closed forms apply to this witness pairing
    std::function<std::vector<CaseSpec>()> maximal;
    std::function<std::vector<CaseSpec>()> general;
};

ScenarioPlan plan_for(ScenarioId id) {
    using WK = WitnessKind;
    switch (id) {
        case ScenarioId::SteerAB_LL:
            return {WK::LinearSteering, WK::LinearSteering, true, steer_ab_ll_maximal,
                    steer_ab_ll_general};
        case ScenarioId::SteerAB_CL:
            return {WK::WeightedCHSH, WK::LinearSteering, true, steer_ab_cl_maximal,
                    steer_ab_cl_general};
        case ScenarioId::SteerAB_LC:
            // No-violation scenario: the printed hybrid settings scored with
            // the witnesses swapped across the pairs.
            return {WK::LinearSteering, WK::WeightedCHSH, false, steer_ab_cl_maximal,
                    steer_ab_cl_general};
        case ScenarioId::SteerBC_LL_3a:
            return {WK::LinearSteering, WK::LinearSteering, true,
                    [] { return steer_bc_maximal(false); }, [] { return steer_bc_general(false); }};
        case ScenarioId::SteerBC_LL_3b:
            return {WK::LinearSteering, WK::LinearSteering, true,
                    [] { return steer_bc_maximal(true); }, [] { return steer_bc_general(true); }};
        case ScenarioId::SteerBC_CL: {
            auto both_max = [] {
                auto cases = steer_bc_maximal(false);
                auto alt = steer_bc_maximal(true);
                cases.push_back(alt.back());
                return cases;
            };
            auto both_gen = [] {
                auto cases = steer_bc_general(false);
                auto alt = steer_bc_general(true);
                cases.push_back(alt.back());
                return cases;
            };
            return {WK::WeightedCHSH, WK::LinearSteering, false, both_max, both_gen};
        }
        case ScenarioId::SteerBC_LC: {
            auto both_max = [] {
                auto cases = steer_bc_maximal(false);
                auto alt = steer_bc_maximal(true);
                cases.push_back(alt.back());
                return cases;
            };
            auto both_gen = [] {
                auto cases = steer_bc_general(false);
                auto alt = steer_bc_general(true);
                cases.push_back(alt.back());
                return cases;
            };
            return {WK::LinearSteering, WK::WeightedCHSH, false, both_max, both_gen};
        }
        default:
            throw std::invalid_argument(
                "weak-pointer scenarios have no projective case catalog; use the weak benchmark");
    }
}

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= kPi / 2.0)) {
        throw std::invalid_argument("alpha must lie in [0, pi/2]");
    }
}

}  // namespace

std::string to_string(ScenarioId id) {
    switch (id) {
        case ScenarioId::SteerAB_LL: return "steer-ab-ll";
        case ScenarioId::SteerAB_CL: return "steer-ab-cl";
        case ScenarioId::SteerAB_LC: return "steer-ab-lc";
        case ScenarioId::SteerBC_LL_3a: return "steer-bc-ll-3a";
        case ScenarioId::SteerBC_LL_3b: return "steer-bc-ll-3b";
        case ScenarioId::SteerBC_CL: return "steer-bc-cl";
        case ScenarioId::SteerBC_LC: return "steer-bc-lc";
        case ScenarioId::Weak_LL: return "weak-ll";
        case ScenarioId::Weak_CL: return "weak-cl";
    }
    return "?";
}

std::string to_string(CaseId id) {
    switch (id) {
        case CaseId::One: return "1";
        case CaseId::Two: return "2";
        case CaseId::Three: return "3";
        case CaseId::ThreeA: return "3a";
        case CaseId::ThreeB: return "3b";
    }
    return "?";
}

std::optional<ScenarioId> scenario_from_slug(const std::string& slug) {
    for (ScenarioId id :
         {ScenarioId::SteerAB_LL, ScenarioId::SteerAB_CL, ScenarioId::SteerAB_LC,
          ScenarioId::SteerBC_LL_3a, ScenarioId::SteerBC_LL_3b, ScenarioId::SteerBC_CL,
          ScenarioId::SteerBC_LC, ScenarioId::Weak_LL, ScenarioId::Weak_CL}) {
        if (to_string(id) == slug) return id;
    }
    return std::nullopt;
}

bool scenario_is_weak(ScenarioId id) {
    return id == ScenarioId::Weak_LL || id == ScenarioId::Weak_CL;
}

std::vector<StrategyCase> case_catalog(ScenarioId id, double alpha) {
    check_alpha(alpha);
    const ScenarioPlan plan = plan_for(id);
    const bool maximal = near_maximal(alpha);
    const SettingsFamily family =
        maximal ? SettingsFamily::MaximalForm : SettingsFamily::GeneralForm;
    std::vector<StrategyCase> out;
    for (const CaseSpec& spec : maximal ? plan.maximal() : plan.general()) {
        out.push_back(instantiate(id, family, alpha, spec, plan.s1_kind, plan.s2_kind,
                                  plan.scored));
    }
    return out;
}

std::vector<StrategyCase> all_printed_cases(ScenarioId id, double alpha) {
    check_alpha(alpha);
    const ScenarioPlan plan = plan_for(id);
    std::vector<StrategyCase> out;
    for (const CaseSpec& spec : plan.maximal()) {
        out.push_back(instantiate(id, SettingsFamily::MaximalForm, alpha, spec, plan.s1_kind,
                                  plan.s2_kind, plan.scored));
    }
    for (const CaseSpec& spec : plan.general()) {
        out.push_back(instantiate(id, SettingsFamily::GeneralForm, alpha, spec, plan.s1_kind,
                                  plan.s2_kind, plan.scored));
    }
    return out;
}

std::pair<double, double> simulate_case(const StrategyCase& c, double angle) {
    return simulate_case(c, angle, partial_entangled(c.alpha));
}

std::pair<double, double> simulate_case(const StrategyCase& c, double angle,
                                        const DensityMatrix& rho) {
    const CaseSettings s = c.build(angle);

    const CMatrix a0 = observable_matrix(s.alice.first);
    const CMatrix a1 = observable_matrix(s.alice.second);
    const CMatrix b0 = s.bob0.effective_observable();
    const CMatrix b1 = s.bob1.effective_observable();

    double s1 = 0.0;
    if (c.s1_kind == WitnessKind::LinearSteering) {
        s1 = std::abs(correlation(rho, a0, b0) + correlation(rho, a1, b1)) / std::sqrt(2.0);
    } else {
        s1 = 0.5 * (correlation(rho, a0, b0) + correlation(rho, a0, b1) +
                    correlation(rho, a1, b0) - correlation(rho, a1, b1));
    }

    const DensityMatrix rho_ac = bob_channel(rho, s.bob0, s.bob1);
    const double s2 = (c.s2_kind == WitnessKind::LinearSteering
                           ? steering_parameter(rho_ac, s.alice, s.charlie)
                           : chsh_parameter(rho_ac, s.alice, s.charlie))
                          .value;
    return {s1, s2};
}

std::pair<double, double> closed_form_scores(const StrategyCase& c, double angle) {
    if (!c.closed_form) {
        throw std::logic_error("case has no closed form");
    }
    return c.closed_form(angle);
}

}  // namespace steerlab
