#pragma once

#include <string>
#include <vector>

#include "steerlab/channels.hpp"
#include "steerlab/witnesses.hpp"

namespace steerlab {

// The three weak-pointer configurations: both witnesses linear with the
// first party steering, the hybrid CHSH/steering split, and both linear
// with the sequential pair steering.
enum class WeakConfig { SteerAB_LL, Hybrid_CL, SteerBC_LL };

std::string to_string(WeakConfig config);
std::vector<WeakConfig> all_weak_configs();

struct WeakScores {
    double s1 = 0.0;  // first-pair witness (steering or weighted CHSH)
    double s2 = 0.0;  // second-pair linear steering
};

// (S1, S2) under the optimal settings of the given configuration, computed
// through the full joint-probability pipeline on the maximally entangled
// state. The closed forms are sqrt(2) G and (1 + F) / sqrt(2).
WeakScores weak_benchmark(const PointerModel& pointer, WeakConfig config);

}  // namespace steerlab
