#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "steerlab/channels.hpp"
#include "steerlab/states.hpp"
#include "steerlab/witnesses.hpp"

using namespace steerlab;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

DensityMatrix random_state(std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    CMatrix g(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g.at(i, j) = Complex(normal(rng), normal(rng));
    CMatrix rho = g * g.adjoint();
    return DensityMatrix(rho * (1.0 / rho.trace().real()));
}

}  // namespace

TEST_CASE("projector basics") {
    CHECK(projector(Observable::xz(kPi / 2.0), +1).approx_equal(CMatrix(2, {1, 0, 0, 0})));
    CHECK(projector(Observable::xz(0.0), +1).approx_equal(CMatrix(2, {0.5, 0.5, 0.5, 0.5})));
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uni(-kPi, kPi);
    for (int i = 0; i < 100; ++i) {
        const Observable o = Observable::xz(uni(rng));
        const CMatrix sum = projector(o, +1) + projector(o, -1);
        CHECK(sum.approx_equal(CMatrix::identity(2), 1e-14));
        const CMatrix p = projector(o, +1);
        CHECK((p * p).approx_equal(p, 1e-14));
    }
    CHECK_THROWS_AS(projector(Observable::xz(0.1), 0), std::invalid_argument);
}

TEST_CASE("identity channel leaves every state untouched") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 50; ++i) {
        const DensityMatrix rho = random_state(rng);
        const MeasurementAction id = MeasurementAction::identity();
        CHECK(bob_channel(rho, id, id).mat().max_abs_diff(rho.mat()) < 1e-14);
    }
}

TEST_CASE("double projective measurement dephases the maximal state") {
    const MeasurementAction proj_z = MeasurementAction::projective(Observable::xz(kPi / 2.0));
    const DensityMatrix out = bob_channel(max_entangled(), proj_z, proj_z);
    CMatrix expected(4);
    expected.at(0, 0) = 0.5;
    expected.at(3, 3) = 0.5;
    CHECK(out.mat().max_abs_diff(expected) < 1e-14);
}

TEST_CASE("channel is trace and positivity preserving on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> uni(-kPi, kPi);
    const auto random_action = [&]() {
        const CMatrix u = rot_y(uni(rng));
        if (rng() % 2 == 0) return MeasurementAction::identity(u);
        return MeasurementAction::projective(Observable::xz(uni(rng)), u);
    };
    for (int i = 0; i < 1000; ++i) {
        const DensityMatrix rho = random_state(rng);
        const DensityMatrix out = bob_channel(rho, random_action(), random_action());
        CHECK(std::abs(out.mat().trace().real() - 1.0) < 1e-10);
        CHECK(out.mat().min_eigenvalue() > -1e-10);
    }
}

TEST_CASE("pointer model validation") {
    const PointerModel sq = PointerModel::square(0.8);
    CHECK(sq.f == doctest::Approx(0.6).epsilon(1e-15));
    const PointerModel lin = PointerModel::linear(0.5);
    CHECK(lin.f == doctest::Approx(0.5));
    CHECK_THROWS_AS(PointerModel::square(1.5), std::invalid_argument);
    CHECK_THROWS_AS(PointerModel::make(PointerModel::Family::Square, 0.8, 0.8),
                    std::invalid_argument);
    CHECK_THROWS_AS(PointerModel::make(PointerModel::Family::Linear, 0.9, 0.9),
                    std::invalid_argument);
    CHECK_NOTHROW(PointerModel::make(PointerModel::Family::Linear, 0.4, 0.6));
}

TEST_CASE("weak channel limits") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> uni(-kPi, kPi);
    for (int i = 0; i < 100; ++i) {
        const DensityMatrix rho = random_state(rng);
        const Observable o = Observable::xz(uni(rng));

        // strong limit reproduces the projective collapse
        for (int outcome : {+1, -1}) {
            const CMatrix k = tensor(CMatrix::identity(2), projector(o, outcome));
            const CMatrix collapse = k * rho.mat() * k.adjoint();
            CHECK(weak_channel(rho, o, PointerModel::square(1.0), outcome)
                      .max_abs_diff(collapse) < 1e-12);
        }

        // no-measurement limit: rho / 2 per outcome
        const CMatrix half = rho.mat() * 0.5;
        CHECK(weak_channel(rho, o, PointerModel::square(0.0), +1).max_abs_diff(half) < 1e-14);
        CHECK(weak_channel(rho, o, PointerModel::linear(0.0), -1).max_abs_diff(half) < 1e-14);

        // outcome probabilities sum to one
        const PointerModel p = PointerModel::square(0.8);
        const double t = weak_channel(rho, o, p, +1).trace().real() +
                         weak_channel(rho, o, p, -1).trace().real();
        CHECK(t == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("weak channel outputs remain positive on the physical boundary") {
    const DensityMatrix bell = max_entangled();
    for (double g : {0.3, 0.6, 0.8, 0.95, 1.0}) {
        for (int outcome : {+1, -1}) {
            const CMatrix out =
                weak_channel(bell, Observable::xz(kPi / 2.0), PointerModel::square(g), outcome);
            CHECK(out.min_eigenvalue() > -1e-12);
        }
    }
}

TEST_CASE("joint probability: deterministic eigenstate") {
    const DensityMatrix ket00 = partial_entangled(0.0);
    const Observable z = Observable::xz(kPi / 2.0);
    const BobOperation bob = MeasurementAction::projective(z);
    CHECK(joint_probability(ket00, z, bob, z, +1, +1, +1) == doctest::Approx(1.0));
    CHECK(joint_probability(ket00, z, bob, z, -1, +1, +1) == doctest::Approx(0.0));
}

TEST_CASE("joint probability: perfect correlation of the maximal state") {
    const DensityMatrix bell = max_entangled();
    const Observable z = Observable::xz(kPi / 2.0);
    const BobOperation bob = MeasurementAction::projective(z);
    for (int c : {+1, -1}) {
        double p = joint_probability(bell, z, bob, z, +1, -1, c);
        CHECK(p == doctest::Approx(0.0).epsilon(1e-14));
    }
}

TEST_CASE("joint probability normalizes for random settings") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> uni(-kPi, kPi);
    for (int i = 0; i < 100; ++i) {
        const DensityMatrix rho = random_state(rng);
        const Observable alice = Observable::xz(uni(rng));
        const Observable charlie = Observable::xz(uni(rng));
        BobOperation bob = MeasurementAction::projective(Observable::xz(uni(rng)), rot_y(uni(rng)));
        if (i % 3 == 0) bob = MeasurementAction::identity(rot_y(uni(rng)));
        if (i % 3 == 1) bob = WeakMeasurement{Observable::xz(uni(rng)), PointerModel::square(0.7)};
        double total = 0.0;
        for (int a : {+1, -1})
            for (int b : {+1, -1})
                for (int c : {+1, -1}) {
                    const double p = joint_probability(rho, alice, bob, charlie, a, b, c);
                    total += p;
                }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("witness values on reference states") {
    const DensityMatrix bell = max_entangled();
    const SettingPair diag{Observable::xz(kPi / 4.0), Observable::xz(-kPi / 4.0)};
    CHECK(steering_parameter(bell, diag, diag).value == doctest::Approx(kSqrt2).epsilon(1e-14));

    // identity-action case on a partial state: (1 + sin 2a) / sqrt(2)
    const double alpha = 7.0 * kPi / 36.0;
    const SettingPair mirrored{Observable::xz(kPi / 4.0), Observable::xz(3.0 * kPi / 4.0)};
    CHECK(steering_parameter(partial_entangled(alpha), mirrored, mirrored).value ==
          doctest::Approx((1.0 + std::sin(2.0 * alpha)) / kSqrt2).epsilon(1e-12));

    // uncorrelated state scores zero
    CMatrix quarter = CMatrix::identity(4) * 0.25;
    const DensityMatrix mixed{quarter};
    CHECK(steering_parameter(mixed, diag, diag).value == doctest::Approx(0.0));

    // separable state obeys the classical CHSH bound
    const DensityMatrix ket00 = partial_entangled(0.0);
    const SettingPair zx{Observable::xz(kPi / 2.0), Observable::xz(0.0)};
    CHECK(chsh_parameter(ket00, zx, zx).value <= 1.0 + 1e-12);
}

TEST_CASE("witnesses stay below the quantum bound on random inputs") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> uni(-kPi, kPi);
    for (int i = 0; i < 1000; ++i) {
        const DensityMatrix rho = random_state(rng);
        const SettingPair a{Observable::xz(uni(rng)), Observable::xz(uni(rng))};
        const SettingPair b{Observable::xz(uni(rng)), Observable::xz(uni(rng))};
        CHECK(steering_parameter(rho, a, b).value <= kSqrt2 + 1e-10);
        const double chsh = chsh_parameter(rho, a, b).value;
        CHECK(chsh <= kSqrt2 + 1e-10);
        CHECK(chsh >= -kSqrt2 - 1e-10);
    }
}

TEST_CASE("mixed scores reproduce a published double violation") {
    // two-projective case at -pi/12 mixed with the two-identity case
    const double t = -kPi / 12.0;
    const std::vector<std::pair<double, double>> pairs = {
        {std::cos(t) - std::sin(t), std::cos(t)}, {0.0, kSqrt2}};
    const auto mixed = mixed_scores(pairs, {0.845, 0.155});
    CHECK(mixed.first == doctest::Approx(1.035).epsilon(2e-3));
    CHECK(mixed.second == doctest::Approx(1.035).epsilon(2e-3));
}

TEST_CASE("mixed_scores validation and affinity") {
    const std::vector<std::pair<double, double>> pairs = {{0.0, kSqrt2}, {kSqrt2, 0.0}};
    const auto mid = mixed_scores(pairs, {0.5, 0.5});
    CHECK(mid.first == doctest::Approx(kSqrt2 / 2.0));
    CHECK(mid.second == doctest::Approx(kSqrt2 / 2.0));

    const auto degenerate = mixed_scores(pairs, {1.0, 0.0});
    CHECK(degenerate.first == doctest::Approx(0.0));
    CHECK(degenerate.second == doctest::Approx(kSqrt2));

    CHECK_THROWS_AS(mixed_scores(pairs, {0.7, 0.7}), std::invalid_argument);
    CHECK_THROWS_AS(mixed_scores(pairs, {1.5, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(mixed_scores(pairs, {1.0}), std::invalid_argument);
}

TEST_CASE("second-pair state is setting independent under identity actions") {
    const DensityMatrix bell = max_entangled();
    const MeasurementAction id = MeasurementAction::identity();
    const DensityMatrix averaged = bob_channel(bell, id, id);
    // per-setting outcome-summed states agree with the average for every y
    CHECK(single_action_channel(bell, id).mat().max_abs_diff(averaged.mat()) < 1e-14);
}
