#include "steerlab/witnesses.hpp"

#include <cmath>
#include <stdexcept>

namespace steerlab {

double correlation(const DensityMatrix& rho, const CMatrix& a, const CMatrix& b) {
    return (tensor(a, b) * rho.mat()).trace().real();
}

WitnessScore steering_parameter(const DensityMatrix& rho, const SettingPair& alice,
                                const SettingPair& other) {
    const double sum =
        correlation(rho, observable_matrix(alice.first), observable_matrix(other.first)) +
        correlation(rho, observable_matrix(alice.second), observable_matrix(other.second));
    return {std::abs(sum) / std::sqrt(2.0), WitnessKind::LinearSteering};
}

WitnessScore chsh_parameter(const DensityMatrix& rho, const SettingPair& alice,
                            const SettingPair& other) {
    const CMatrix a0 = observable_matrix(alice.first);
    const CMatrix a1 = observable_matrix(alice.second);
    const CMatrix x0 = observable_matrix(other.first);
    const CMatrix x1 = observable_matrix(other.second);
    const double value = 0.5 * (correlation(rho, a0, x0) + correlation(rho, a0, x1) +
                                correlation(rho, a1, x0) - correlation(rho, a1, x1));
    return {value, WitnessKind::WeightedCHSH};
}

std::pair<double, double> mixed_scores(const std::vector<std::pair<double, double>>& per_case,
                                       const std::vector<double>& mix) {
    if (per_case.size() != mix.size()) {
        throw std::invalid_argument("mixed_scores: per-case list and mix must have equal length");
    }
    double total = 0.0;
    for (double p : mix) {
        if (p < 0.0) throw std::invalid_argument("mixed_scores: mix entries must be nonnegative");
        total += p;
    }
    if (std::abs(total - 1.0) > kUnitTol) {
        throw std::invalid_argument("mixed_scores: mix must sum to 1");
    }
    double s1 = 0.0;
    double s2 = 0.0;
    for (std::size_t i = 0; i < mix.size(); ++i) {
        s1 += mix[i] * per_case[i].first;
        s2 += mix[i] * per_case[i].second;
    }
    return {s1, s2};
}

}  // namespace steerlab
