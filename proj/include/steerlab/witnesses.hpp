#pragma once

#include <utility>
#include <vector>

#include "steerlab/cmatrix.hpp"
#include "steerlab/states.hpp"

namespace steerlab {

struct SettingPair {
    Observable first;
    Observable second;
};

enum class WitnessKind { LinearSteering, WeightedCHSH };

struct WitnessScore {
    double value = 0.0;
    WitnessKind kind = WitnessKind::LinearSteering;
};

// Tr[(A x B) rho] for 2x2 operators on the two slots.
double correlation(const DensityMatrix& rho, const CMatrix& a, const CMatrix& b);

// (1/sqrt(2)) |<A0 x X0> + <A1 x X1>|, classical bound 1, quantum bound sqrt(2).
WitnessScore steering_parameter(const DensityMatrix& rho, const SettingPair& alice,
                                const SettingPair& other);

// (1/2) (<A0 x X0> + <A0 x X1> + <A1 x X0> - <A1 x X1>), classical bound 1,
// Tsirelson bound sqrt(2). Sign is kept.
WitnessScore chsh_parameter(const DensityMatrix& rho, const SettingPair& alice,
                            const SettingPair& other);

// Component-wise convex combination of per-case (S1, S2) pairs.
std::pair<double, double> mixed_scores(const std::vector<std::pair<double, double>>& per_case,
                                       const std::vector<double>& mix);

}  // namespace steerlab
