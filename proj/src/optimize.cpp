#include "steerlab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace steerlab {

namespace {

constexpr double kPi = std::numbers::pi;

struct CaseGrid {
    std::vector<double> angles;
    std::vector<std::pair<double, double>> scores;
};

CaseGrid sample_case(const StrategyCase& c, int angle_grid) {
    CaseGrid g;
    const DensityMatrix rho = partial_entangled(c.alpha);
    const int n = c.angle_count == 0 ? 1 : angle_grid + 1;
    g.angles.reserve(static_cast<std::size_t>(n));
    g.scores.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double t =
            c.angle_count == 0
                ? 0.0
                : c.angle_min + (c.angle_max - c.angle_min) * static_cast<double>(k) / angle_grid;
        g.angles.push_back(t);
        g.scores.push_back(simulate_case(c, t, rho));
    }
    return g;
}

// Best mixing weight for two achievable points: min of two affine functions
// of p is concave piecewise linear, so the maximum sits at an endpoint or at
// the crossing.
std::pair<double, double> best_pair_mix(const std::pair<double, double>& a,
                                        const std::pair<double, double>& b) {
    const auto value_at = [&](double p) {
        return std::min(p * a.first + (1.0 - p) * b.first,
                        p * a.second + (1.0 - p) * b.second);
    };
    double best_p = 0.0;
    double best = value_at(0.0);
    if (value_at(1.0) > best) {
        best = value_at(1.0);
        best_p = 1.0;
    }
    const double denom = (a.first - b.first) - (a.second - b.second);
    if (std::abs(denom) > 1e-15) {
        const double p = (b.second - b.first) / denom;
        if (p > 0.0 && p < 1.0 && value_at(p) > best) {
            best = value_at(p);
            best_p = p;
        }
    }
    return {best, best_p};
}

struct Candidate {
    double value = -std::numeric_limits<double>::infinity();
    std::vector<double> angles;  // one per pattern case with a free angle
    std::vector<double> mix;     // full simplex over pattern cases
    double alpha = 0.0;
};

// Tie order among near-equal optima: state parameter first (objectives with
// identity cases are symmetric under alpha <-> pi/2 - alpha, keep the lower
// twin), then the angle vector, then the mixing weights.
bool lex_less(const Candidate& a, const Candidate& b) {
    if (std::abs(a.alpha - b.alpha) > 1e-9) return a.alpha < b.alpha;
    if (a.angles != b.angles) return a.angles < b.angles;
    return a.mix < b.mix;
}

// Total order so the kept set is independent of grid chunking across workers.
bool better(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value > b.value;
    return lex_less(a, b);
}

void keep_top(std::vector<Candidate>& top, Candidate cand, std::size_t limit) {
    top.push_back(std::move(cand));
    std::sort(top.begin(), top.end(), better);
    if (top.size() > limit) top.resize(limit);
}

// Plain Nelder-Mead with box clamping inside the objective.
std::pair<std::vector<double>, double> nelder_mead(
    const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
    double scale, double tol, int max_eval) {
    const std::size_t n = x0.size();
    if (n == 0) return {x0, f(x0)};
    std::vector<std::vector<double>> xs(n + 1, x0);
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i < n; ++i) xs[i + 1][i] += scale;
    for (std::size_t i = 0; i <= n; ++i) fs[i] = f(xs[i]);
    int evals = static_cast<int>(n) + 1;

    while (evals < max_eval) {
        std::vector<std::size_t> order(n + 1);
        for (std::size_t i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        const std::size_t best = order[0], worst = order[n], second = order[n - 1];

        double spread = 0.0;
        for (std::size_t i = 0; i <= n; ++i) spread = std::max(spread, fs[i] - fs[best]);
        double diam = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t d = 0; d < n; ++d)
                diam = std::max(diam, std::abs(xs[i][d] - xs[best][d]));
        if (spread < tol * 1e-4 && diam < tol) break;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t d = 0; d < n; ++d) centroid[d] += xs[i][d];
        }
        for (double& v : centroid) v /= static_cast<double>(n);

        const auto blend = [&](double coef) {
            std::vector<double> p(n);
            for (std::size_t d = 0; d < n; ++d)
                p[d] = centroid[d] + coef * (centroid[d] - xs[worst][d]);
            return p;
        };

        std::vector<double> reflected = blend(1.0);
        const double fr = f(reflected);
        ++evals;
        if (fr < fs[best]) {
            std::vector<double> expanded = blend(2.0);
            const double fe = f(expanded);
            ++evals;
            xs[worst] = fe < fr ? expanded : reflected;
            fs[worst] = std::min(fe, fr);
        } else if (fr < fs[second]) {
            xs[worst] = reflected;
            fs[worst] = fr;
        } else {
            std::vector<double> contracted = blend(-0.5);
            const double fc = f(contracted);
            ++evals;
            if (fc < fs[worst]) {
                xs[worst] = contracted;
                fs[worst] = fc;
            } else {
                for (std::size_t i = 0; i <= n; ++i) {
                    if (i == best) continue;
                    for (std::size_t d = 0; d < n; ++d)
                        xs[i][d] = xs[best][d] + 0.5 * (xs[i][d] - xs[best][d]);
                    fs[i] = f(xs[i]);
                    ++evals;
                }
            }
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (fs[i] < fs[best]) best = i;
    return {xs[best], fs[best]};
}

}  // namespace

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("STEERLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

ViolationOptimum optimize_double_violation(ScenarioId scenario,
                                           const std::vector<CaseId>& pattern,
                                           std::optional<double> alpha,
                                           const OptimizeOptions& options) {
    if (pattern.empty()) throw std::invalid_argument("optimize: empty mix pattern");
    if (scenario_is_weak(scenario)) {
        throw std::invalid_argument("optimize: weak scenarios are served by the weak benchmark");
    }

    const bool free_alpha = !alpha.has_value();
    std::vector<double> alpha_values;
    if (free_alpha) {
        for (int k = 0; k <= options.alpha_grid; ++k) {
            alpha_values.push_back(kPi / 2.0 * static_cast<double>(k) / options.alpha_grid);
        }
    } else {
        alpha_values.push_back(*alpha);
    }
    // A joint (angles x alpha) sweep does not need the full angle resolution;
    // refinement recovers the remaining digits.
    const int grid = free_alpha ? std::max(90, options.angle_grid / 2) : options.angle_grid;

    const auto select_cases = [&](double a) {
        std::vector<StrategyCase> all = case_catalog(scenario, a);
        std::vector<StrategyCase> out;
        for (CaseId id : pattern) {
            bool found = false;
            for (const StrategyCase& c : all) {
                if (c.id == id) {
                    out.push_back(c);
                    found = true;
                    break;
                }
            }
            if (!found) {
                throw std::invalid_argument("optimize: case " + to_string(id) +
                                            " is not part of scenario " + to_string(scenario));
            }
        }
        return out;
    };

    std::vector<Candidate> top;
    const std::size_t keep = static_cast<std::size_t>(std::max(1, options.refine_starts));

    for (double a : alpha_values) {
        const std::vector<StrategyCase> cases = select_cases(a);
        std::vector<CaseGrid> grids;
        grids.reserve(cases.size());
        for (const StrategyCase& c : cases) grids.push_back(sample_case(c, grid));

        if (cases.size() == 1) {
            for (std::size_t i = 0; i < grids[0].scores.size(); ++i) {
                Candidate cand;
                cand.value = std::min(grids[0].scores[i].first, grids[0].scores[i].second);
                if (cases[0].angle_count == 1) cand.angles = {grids[0].angles[i]};
                cand.mix = {1.0};
                cand.alpha = a;
                if (top.empty() || cand.value > top.back().value ||
                    top.size() < keep) {
                    keep_top(top, std::move(cand), keep);
                }
            }
        } else if (cases.size() == 2) {
            const auto& g0 = grids[0];
            const auto& g1 = grids[1];
            const int workers =
                std::min<int>(worker_count(options.threads),
                              static_cast<int>(g0.scores.size()));
            std::vector<std::vector<Candidate>> local(
                static_cast<std::size_t>(std::max(1, workers)));
            const auto run_chunk = [&](int w) {
                auto& mine = local[static_cast<std::size_t>(w)];
                for (std::size_t i = static_cast<std::size_t>(w); i < g0.scores.size();
                     i += static_cast<std::size_t>(workers)) {
                    for (std::size_t j = 0; j < g1.scores.size(); ++j) {
                        const auto [value, p] = best_pair_mix(g0.scores[i], g1.scores[j]);
                        if (mine.size() >= keep && value < mine.back().value) continue;
                        Candidate cand;
                        cand.value = value;
                        if (cases[0].angle_count == 1) cand.angles.push_back(g0.angles[i]);
                        if (cases[1].angle_count == 1) cand.angles.push_back(g1.angles[j]);
                        cand.mix = {p, 1.0 - p};
                        cand.alpha = a;
                        keep_top(mine, std::move(cand), keep);
                    }
                }
            };
            if (workers <= 1) {
                run_chunk(0);
            } else {
                std::vector<std::thread> pool;
                for (int w = 0; w < workers; ++w) pool.emplace_back(run_chunk, w);
                for (auto& t : pool) t.join();
            }
            for (auto& chunk : local) {
                for (auto& cand : chunk) keep_top(top, std::move(cand), keep);
            }
        } else {
            // Patterns beyond two cases: coarse sweep over a reduced grid with
            // stick-breaking mixing weights, refined below like everything else.
            const int coarse = 60;
            std::vector<CaseGrid> cg;
            for (const StrategyCase& c : cases) cg.push_back(sample_case(c, coarse));
            std::vector<std::size_t> idx(cases.size(), 0);
            const auto advance = [&]() {
                for (std::size_t d = 0; d < idx.size(); ++d) {
                    if (++idx[d] < cg[d].scores.size()) return true;
                    idx[d] = 0;
                }
                return false;
            };
            do {
                // Pairwise-optimal weights per leading case, then a short
                // uniform scan over the remaining simplex direction.
                for (int u = 0; u <= 20; ++u) {
                    for (int v = 0; v <= 20 - u; ++v) {
                        std::vector<double> mix = {u / 20.0, v / 20.0,
                                                   1.0 - u / 20.0 - v / 20.0};
                        mix.resize(cases.size(), 0.0);
                        double s1 = 0.0, s2 = 0.0;
                        for (std::size_t d = 0; d < cases.size(); ++d) {
                            s1 += mix[d] * cg[d].scores[idx[d]].first;
                            s2 += mix[d] * cg[d].scores[idx[d]].second;
                        }
                        Candidate cand;
                        cand.value = std::min(s1, s2);
                        for (std::size_t d = 0; d < cases.size(); ++d) {
                            if (cases[d].angle_count == 1)
                                cand.angles.push_back(cg[d].angles[idx[d]]);
                        }
                        cand.mix = mix;
                        cand.alpha = a;
                        keep_top(top, std::move(cand), keep);
                    }
                }
            } while (advance());
        }
    }

    if (top.empty()) throw std::logic_error("optimize: empty search grid");

    // Refinement: simplex descent over (angles, mixing weights, alpha).
    const std::vector<StrategyCase> probe = select_cases(top.front().alpha);
    std::vector<std::size_t> angle_slots;
    for (std::size_t d = 0; d < probe.size(); ++d) {
        if (probe[d].angle_count == 1) angle_slots.push_back(d);
    }
    const std::size_t n_angles = angle_slots.size();
    const std::size_t n_mix = probe.size() - 1;

    const auto evaluate = [&](const std::vector<double>& params) {
        std::vector<double> angles(probe.size(), 0.0);
        for (std::size_t k = 0; k < n_angles; ++k) {
            angles[angle_slots[k]] =
                std::clamp(params[k], probe[angle_slots[k]].angle_min,
                           probe[angle_slots[k]].angle_max);
        }
        std::vector<double> mix(probe.size(), 1.0);
        double rest = 1.0;
        for (std::size_t k = 0; k < n_mix; ++k) {
            const double u = std::clamp(params[n_angles + k], 0.0, 1.0);
            mix[k] = rest * u;
            rest -= mix[k];
        }
        mix[probe.size() - 1] = std::max(0.0, rest);
        double a = top.front().alpha;
        if (free_alpha) a = std::clamp(params[n_angles + n_mix], 0.0, kPi / 2.0);
        const std::vector<StrategyCase> cases = select_cases(a);
        double s1 = 0.0, s2 = 0.0;
        for (std::size_t d = 0; d < cases.size(); ++d) {
            const auto sc = simulate_case(cases[d], angles[d]);
            s1 += mix[d] * sc.first;
            s2 += mix[d] * sc.second;
        }
        return std::tuple{std::min(s1, s2), s1, s2, angles, mix, a};
    };
    const auto objective = [&](const std::vector<double>& params) {
        return -std::get<0>(evaluate(params));
    };

    Candidate best;
    double best_s1 = 0.0, best_s2 = 0.0;
    std::vector<Candidate> finalists;
    std::vector<std::tuple<double, double>> finalist_scores;
    for (const Candidate& seed : top) {
        std::vector<double> x0;
        for (std::size_t k = 0; k < n_angles; ++k) x0.push_back(seed.angles[k]);
        double rest = 1.0;
        for (std::size_t k = 0; k < n_mix; ++k) {
            const double u = rest > 1e-15 ? seed.mix[k] / rest : 0.0;
            x0.push_back(std::clamp(u, 0.0, 1.0));
            rest -= seed.mix[k];
        }
        if (free_alpha) x0.push_back(seed.alpha);

        const auto [xbest, fbest] = nelder_mead(objective, x0, 0.02, options.tol, 900);
        const auto [value, s1, s2, angles, mix, a] = evaluate(xbest);
        (void)fbest;
        Candidate cand;
        cand.value = value;
        for (std::size_t k = 0; k < n_angles; ++k) cand.angles.push_back(angles[angle_slots[k]]);
        cand.mix = mix;
        cand.alpha = a;
        finalists.push_back(cand);
        finalist_scores.emplace_back(s1, s2);
    }
    std::size_t chosen = 0;
    for (std::size_t i = 1; i < finalists.size(); ++i) {
        if (finalists[i].value > finalists[chosen].value + options.tol ||
            (std::abs(finalists[i].value - finalists[chosen].value) <= options.tol &&
             lex_less(finalists[i], finalists[chosen]))) {
            chosen = i;
        }
    }
    best = finalists[chosen];
    best_s1 = std::get<0>(finalist_scores[chosen]);
    best_s2 = std::get<1>(finalist_scores[chosen]);

    ViolationOptimum out;
    out.value = best.value;
    out.s1 = best_s1;
    out.s2 = best_s2;
    out.pattern = pattern;
    const std::vector<StrategyCase> cases = select_cases(best.alpha);
    for (const StrategyCase& c : cases) {
        if (c.angle_count == 1) out.angle_names.push_back(c.angle_name);
    }
    out.angles = best.angles;
    out.mix = best.mix;
    out.alpha = best.alpha;
    out.alpha_optimized = free_alpha;
    return out;
}

ViolationOptimum optimize_pattern_tokens(ScenarioId scenario,
                                         const std::vector<std::string>& tokens,
                                         std::optional<double> alpha,
                                         const OptimizeOptions& options) {
    const double probe_alpha = alpha.value_or(kPi / 4.0);
    const std::vector<StrategyCase> catalog = case_catalog(scenario, probe_alpha);

    std::vector<std::vector<CaseId>> choices;  // per token
    for (const std::string& token : tokens) {
        std::vector<CaseId> ids;
        for (const StrategyCase& c : catalog) {
            if (to_string(c.id) == token ||
                (token == "3" && (c.id == CaseId::ThreeA || c.id == CaseId::ThreeB))) {
                ids.push_back(c.id);
            }
        }
        if (ids.empty()) {
            throw std::invalid_argument("unknown case label '" + token + "' for scenario " +
                                        to_string(scenario));
        }
        choices.push_back(ids);
    }

    std::optional<ViolationOptimum> best;
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        std::vector<CaseId> pattern;
        for (std::size_t i = 0; i < choices.size(); ++i) pattern.push_back(choices[i][pick[i]]);
        ViolationOptimum res = optimize_double_violation(scenario, pattern, alpha, options);
        if (!best || res.value > best->value) best = std::move(res);
        std::size_t d = 0;
        for (; d < pick.size(); ++d) {
            if (++pick[d] < choices[d].size()) break;
            pick[d] = 0;
        }
        if (d == pick.size()) break;
    }
    return *best;
}

}  // namespace steerlab
