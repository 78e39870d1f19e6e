#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "steerlab/channels.hpp"
#include "steerlab/witnesses.hpp"

namespace steerlab {

// Which observer pair is certified by which witness. "LL" pairs two linear
// steering inequalities, "CL" puts the weighted CHSH on the first pair,
// "LC" puts it on the second pair. SteerAB scenarios have the first party
// steering; SteerBC scenarios have the sequential parties steering back.
enum class ScenarioId {
    SteerAB_LL,
    SteerAB_CL,
    SteerAB_LC,
    SteerBC_LL_3a,
    SteerBC_LL_3b,
    SteerBC_CL,
    SteerBC_LC,
    Weak_LL,
    Weak_CL,
};

// Intermediate-observer action pattern label: 1 = two projective,
// 2 = two identity, 3/3a/3b = one of each.
enum class CaseId { One, Two, Three, ThreeA, ThreeB };

// Settings printed for the maximally entangled state vs the general-alpha
// catalog. Both trace the same arcs at alpha = pi/4.
enum class SettingsFamily { MaximalForm, GeneralForm };

struct CaseSettings {
    SettingPair alice;
    MeasurementAction bob0 = MeasurementAction::identity();
    MeasurementAction bob1 = MeasurementAction::identity();
    SettingPair charlie;
};

struct StrategyCase {
    ScenarioId scenario;
    CaseId id;
    SettingsFamily family;
    double alpha;

    int angle_count = 0;  // 0 or 1
    std::string angle_name;
    double angle_min = 0.0;
    double angle_max = 0.0;

    WitnessKind s1_kind = WitnessKind::LinearSteering;
    WitnessKind s2_kind = WitnessKind::LinearSteering;

    std::function<CaseSettings(double)> build;
    std::function<std::pair<double, double>(double)> closed_form;  // may be empty

    bool has_closed_form() const { return static_cast<bool>(closed_form); }
};

std::string to_string(ScenarioId id);
std::string to_string(CaseId id);
std::optional<ScenarioId> scenario_from_slug(const std::string& slug);

bool scenario_is_weak(ScenarioId id);

// Full case list for one scenario at one state parameter. At alpha = pi/4 the
// maximal-form settings are returned; elsewhere the general-alpha ones.
std::vector<StrategyCase> case_catalog(ScenarioId id, double alpha);

// Every printed settings family for cross-validation (both forms).
std::vector<StrategyCase> all_printed_cases(ScenarioId id, double alpha);

// (S1, S2) for one case at one angle, computed through the density-matrix
// pipeline: first-pair correlators on rho, second-pair witness on the
// channel output state.
std::pair<double, double> simulate_case(const StrategyCase& c, double angle);

// Same, with the input state supplied by the caller (it must match c.alpha);
// avoids rebuilding the state in tight sampling loops.
std::pair<double, double> simulate_case(const StrategyCase& c, double angle,
                                        const DensityMatrix& rho);

// Same pair from the case's analytic closed form; throws if absent.
std::pair<double, double> closed_form_scores(const StrategyCase& c, double angle);

}  // namespace steerlab
