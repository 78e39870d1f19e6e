#include "steerlab/weak.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "steerlab/states.hpp"

namespace steerlab {

namespace {

constexpr double kPi = std::numbers::pi;

struct WeakSettings {
    std::array<Observable, 2> alice;
    std::array<Observable, 2> bob;
    std::array<Observable, 2> charlie;
};

// Optimal angles per configuration; the partner setting of a "vertical pair"
// sits a quarter turn away.
WeakSettings settings_for(WeakConfig config) {
    WeakSettings s{};
    switch (config) {
        case WeakConfig::SteerAB_LL:
        case WeakConfig::SteerBC_LL:
            s.alice = {Observable::xz(0.0), Observable::xz(kPi / 2.0)};
            s.bob = {Observable::xz(0.0), Observable::xz(kPi / 2.0)};
            s.charlie = {Observable::xz(0.0), Observable::xz(kPi / 2.0)};
            break;
        case WeakConfig::Hybrid_CL:
            s.alice = {Observable::xz(0.0), Observable::xz(kPi / 2.0)};
            s.bob = {Observable::xz(kPi / 4.0), Observable::xz(-kPi / 4.0)};
            s.charlie = {Observable::xz(0.0), Observable::xz(kPi / 2.0)};
            break;
    }
    return s;
}

}  // namespace

std::string to_string(WeakConfig config) {
    switch (config) {
        case WeakConfig::SteerAB_LL: return "steer-ab-ll";
        case WeakConfig::Hybrid_CL: return "hybrid-cl";
        case WeakConfig::SteerBC_LL: return "steer-bc-ll";
    }
    return "?";
}

std::vector<WeakConfig> all_weak_configs() {
    return {WeakConfig::SteerAB_LL, WeakConfig::Hybrid_CL, WeakConfig::SteerBC_LL};
}

WeakScores weak_benchmark(const PointerModel& pointer, WeakConfig config) {
    const DensityMatrix rho = max_entangled();
    const WeakSettings st = settings_for(config);

    // Full joint distribution P(a, b, c | x, y, z).
    double p[2][2][2][2][2][2];
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const BobOperation bob = WeakMeasurement{st.bob[static_cast<std::size_t>(y)], pointer};
            for (int z = 0; z < 2; ++z) {
                for (int ai = 0; ai < 2; ++ai) {
                    for (int bi = 0; bi < 2; ++bi) {
                        for (int ci = 0; ci < 2; ++ci) {
                            p[x][y][z][ai][bi][ci] = joint_probability(
                                rho, st.alice[static_cast<std::size_t>(x)], bob,
                                st.charlie[static_cast<std::size_t>(z)], ai == 0 ? 1 : -1,
                                bi == 0 ? 1 : -1, ci == 0 ? 1 : -1);
                        }
                    }
                }
            }
        }
    }

    const auto sign = [](int i) { return i == 0 ? 1.0 : -1.0; };
    // <A_x B_y> from the Alice-Bob marginal (z-independent; use z = 0).
    const auto corr_ab = [&](int x, int y) {
        double e = 0.0;
        for (int ai = 0; ai < 2; ++ai)
            for (int bi = 0; bi < 2; ++bi)
                for (int ci = 0; ci < 2; ++ci)
                    e += sign(ai) * sign(bi) * p[x][y][0][ai][bi][ci];
        return e;
    };
    // <A_x C_z> from the Alice-Charlie marginal, averaged over the unbiased
    // intermediate setting.
    const auto corr_ac = [&](int x, int z) {
        double e = 0.0;
        for (int y = 0; y < 2; ++y)
            for (int ai = 0; ai < 2; ++ai)
                for (int bi = 0; bi < 2; ++bi)
                    for (int ci = 0; ci < 2; ++ci)
                        e += 0.5 * sign(ai) * sign(ci) * p[x][y][z][ai][bi][ci];
        return e;
    };

    WeakScores out;
    if (config == WeakConfig::Hybrid_CL) {
        out.s1 = 0.5 * (corr_ab(0, 0) + corr_ab(0, 1) + corr_ab(1, 0) - corr_ab(1, 1));
    } else {
        out.s1 = std::abs(corr_ab(0, 0) + corr_ab(1, 1)) / std::sqrt(2.0);
    }
    out.s2 = std::abs(corr_ac(0, 0) + corr_ac(1, 1)) / std::sqrt(2.0);
    return out;
}

}  // namespace steerlab
