#pragma once

#include <optional>
#include <string>
#include <vector>

#include "steerlab/strategies.hpp"

namespace steerlab {

struct OptimizeOptions {
    // Grid stage: angle step is (domain width) / angle_grid. alpha_grid spans
    // [0, pi/2] when the state parameter is free.
    int angle_grid = 720;
    int alpha_grid = 360;
    int refine_starts = 12;
    double tol = 1e-8;
    int threads = 0;  // 0 = STEERLAB_THREADS, else hardware concurrency
};

struct ViolationOptimum {
    double value = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    std::vector<CaseId> pattern;
    std::vector<std::string> angle_names;  // one entry per pattern case with a free angle
    std::vector<double> angles;
    std::vector<double> mix;
    double alpha = 0.0;
    bool alpha_optimized = false;
};

// Maximize min(S1, S2) over the free angles of the selected cases, the mixing
// distribution and (optionally) the state parameter. Deterministic: a uniform
// grid with an exact inner mixing-weight solve, then simplex refinement from
// the best cells, with lexicographic tie-breaking on the angle vector.
ViolationOptimum optimize_double_violation(ScenarioId scenario,
                                           const std::vector<CaseId>& pattern,
                                           std::optional<double> alpha,
                                           const OptimizeOptions& options = {});

// Expands a pattern of textual labels ("1", "2", "3", "3a", "3b"); a bare "3"
// matches every one-of-each variant in the scenario's catalog and the best
// resolution is returned.
ViolationOptimum optimize_pattern_tokens(ScenarioId scenario,
                                         const std::vector<std::string>& tokens,
                                         std::optional<double> alpha,
                                         const OptimizeOptions& options = {});

int worker_count(int requested);

}  // namespace steerlab
