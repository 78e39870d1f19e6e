#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "steerlab/envelope.hpp"
#include "steerlab/optimize.hpp"
#include "steerlab/strategies.hpp"
#include "steerlab/verify.hpp"

using namespace steerlab;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

double worst_closed_form_gap(const StrategyCase& c, int grid = 200) {
    const DensityMatrix rho = partial_entangled(c.alpha);
    double worst = 0.0;
    for (int k = 0; k <= grid; ++k) {
        const double angle =
            c.angle_min + (c.angle_max - c.angle_min) * k / static_cast<double>(grid);
        const auto sim = simulate_case(c, angle, rho);
        const auto ana = closed_form_scores(c, angle);
        worst = std::max({worst, std::abs(sim.first - ana.first),
                          std::abs(sim.second - ana.second)});
    }
    return worst;
}
}  // namespace

TEST_CASE("catalog shape") {
    const auto catalog = case_catalog(ScenarioId::SteerAB_LL, kPi / 4.0);
    REQUIRE(catalog.size() == 3);
    CHECK(catalog[0].id == CaseId::One);
    CHECK(catalog[1].id == CaseId::Two);
    CHECK(catalog[1].angle_count == 0);
    CHECK(catalog[2].id == CaseId::Three);
    CHECK(catalog[0].family == SettingsFamily::MaximalForm);

    const auto partial = case_catalog(ScenarioId::SteerAB_LL, 0.5);
    CHECK(partial[0].family == SettingsFamily::GeneralForm);

    CHECK(case_catalog(ScenarioId::SteerBC_CL, kPi / 4.0).size() == 4);
    CHECK_THROWS_AS(case_catalog(ScenarioId::Weak_LL, kPi / 4.0), std::invalid_argument);
    CHECK_THROWS_AS(case_catalog(ScenarioId::SteerAB_LL, 2.0), std::invalid_argument);
}

TEST_CASE("printed closed forms match the simulation pipeline") {
    // maximal-state settings at the maximal state
    for (ScenarioId s : {ScenarioId::SteerAB_LL, ScenarioId::SteerAB_CL,
                         ScenarioId::SteerBC_LL_3a, ScenarioId::SteerBC_LL_3b}) {
        for (const StrategyCase& c : case_catalog(s, kPi / 4.0)) {
            REQUIRE(c.has_closed_form());
            INFO(to_string(s), " case ", to_string(c.id));
            CHECK(worst_closed_form_gap(c) < 1e-10);
        }
    }
    // general-alpha settings across the quadrant
    for (ScenarioId s : {ScenarioId::SteerAB_LL, ScenarioId::SteerAB_CL,
                         ScenarioId::SteerBC_LL_3a, ScenarioId::SteerBC_LL_3b}) {
        for (double alpha : {0.2, 7.0 * kPi / 36.0, 10.0 * kPi / 37.0}) {
            for (const StrategyCase& c : case_catalog(s, alpha)) {
                REQUIRE(c.has_closed_form());
                INFO(to_string(s), " case ", to_string(c.id), " alpha ", alpha);
                CHECK(worst_closed_form_gap(c) < 1e-10);
            }
        }
    }
}

TEST_CASE("spot values from the catalog") {
    const auto catalog = case_catalog(ScenarioId::SteerAB_LL, kPi / 4.0);
    // two-projective case at angle t: (|cos t - sin t|, |cos t|)
    const auto c1 = closed_form_scores(catalog[0], -kPi / 12.0);
    CHECK(c1.first == doctest::Approx(std::cos(kPi / 12) + std::sin(kPi / 12)).epsilon(1e-14));
    CHECK(c1.second == doctest::Approx(std::cos(kPi / 12)).epsilon(1e-14));
    // two-identity case reaches the quantum bound
    const auto c2 = closed_form_scores(catalog[1], 0.0);
    CHECK(c2.first == doctest::Approx(0.0));
    CHECK(c2.second == doctest::Approx(kSqrt2).epsilon(1e-14));

    const auto bc = case_catalog(ScenarioId::SteerBC_LL_3a, kPi / 4.0);
    const auto c3a = closed_form_scores(bc[2], kPi / 16.0);
    CHECK(c3a.first ==
          doctest::Approx(std::abs(std::sin(kPi / 16) + std::cos(kPi / 16)) / 2).epsilon(1e-14));
    CHECK(c3a.second ==
          doctest::Approx((9.0 + std::cos(kPi / 8)) / (4.0 * std::sqrt(5.0))).epsilon(1e-14));
}

TEST_CASE("no-violation scenarios carry no closed forms") {
    for (ScenarioId s : {ScenarioId::SteerAB_LC, ScenarioId::SteerBC_CL, ScenarioId::SteerBC_LC}) {
        for (const StrategyCase& c : case_catalog(s, kPi / 4.0)) {
            CHECK_FALSE(c.has_closed_form());
            const auto scores = simulate_case(c, 0.3);  // pipeline still works
            CHECK(std::isfinite(scores.first));
            CHECK(std::isfinite(scores.second));
        }
    }
}

TEST_CASE("envelope of the two-steering scenario") {
    const TradeoffEnvelope env = build_envelope(case_catalog(ScenarioId::SteerAB_LL, kPi / 4.0));
    CHECK(env.s1_min() == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(env.value_at(0.0) == doctest::Approx(kSqrt2).epsilon(1e-9));

    // first stretch has the tangent-line slope
    const double slope = (env.value_at(0.3) - env.value_at(0.1)) / 0.2;
    CHECK(slope == doctest::Approx(kSqrt2 - std::sqrt(3.5)).epsilon(1e-4));

    // the middle mixing line and its breakpoints
    REQUIRE(env.segments().size() == 3);
    CHECK(to_string(env.segments()[0].label) == "mix(2|3)");
    CHECK(to_string(env.segments()[1].label) == "mix(1|3)");
    CHECK(to_string(env.segments()[2].label) == "arc(1)");
    const auto bps = env.interior_breakpoints();
    REQUIRE(bps.size() == 2);
    CHECK(bps[0] == doctest::Approx(0.656).epsilon(5e-3));
    CHECK(bps[1] == doctest::Approx(1.180).epsilon(5e-3));

    // monotone decreasing and concave within segments
    double prev = env.value_at(0.0);
    for (int k = 1; k <= 200; ++k) {
        const double x = kSqrt2 * k / 200.0;
        const double y = env.value_at(x);
        CHECK(y <= prev + 1e-9);
        prev = y;
    }

    CHECK(env.diagonal_crossing() == doctest::Approx(1.021).epsilon(2e-3));
}

TEST_CASE("four-region envelope of the hybrid scenario") {
    const TradeoffEnvelope env = build_envelope(case_catalog(ScenarioId::SteerAB_CL, kPi / 4.0));
    REQUIRE(env.segments().size() == 4);
    CHECK(to_string(env.segments()[0].label) == "mix(2|3)");
    CHECK(to_string(env.segments()[1].label) == "arc(3)");
    CHECK(to_string(env.segments()[2].label) == "mix(1|3)");
    CHECK(to_string(env.segments()[3].label) == "arc(1)");
    const auto bps = env.interior_breakpoints();
    REQUIRE(bps.size() == 3);
    CHECK(bps[0] == doctest::Approx(std::sqrt(7.0 / 8.0)).epsilon(5e-3));
    CHECK(bps[1] == doctest::Approx(0.978).epsilon(5e-3));
    CHECK(bps[2] == doctest::Approx(1.254).epsilon(5e-3));
}

TEST_CASE("single-case envelope is the case arc") {
    const auto catalog = case_catalog(ScenarioId::SteerAB_LL, kPi / 4.0);
    const TradeoffEnvelope env = build_envelope({catalog[0]}, 4096);
    // the boundary spans the trade-off branch, from the arc peak rightward;
    // the upper branch of (|cos t - sin t|, |cos t|) is (x + sqrt(2 - x^2)) / 2
    CHECK(env.s1_min() == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(env.s1_max() == doctest::Approx(kSqrt2).epsilon(1e-6));
    for (double x : {1.0, 1.1, 1.2, 1.3, 1.4}) {
        CHECK(env.value_at(x) ==
              doctest::Approx(0.5 * (x + std::sqrt(2.0 - x * x))).epsilon(1e-5));
    }
    for (const EnvelopeSegment& s : env.segments()) CHECK(s.label.arc);
}

TEST_CASE("envelope rejects bad inputs") {
    CHECK_THROWS_AS(build_envelope({}, 4096), std::invalid_argument);
    const auto catalog = case_catalog(ScenarioId::SteerAB_LL, kPi / 4.0);
    CHECK_THROWS_AS(build_envelope(catalog, 10), std::invalid_argument);
}

TEST_CASE("coarse envelopes stay dominance consistent") {
    const auto catalog = case_catalog(ScenarioId::SteerAB_LL, kPi / 4.0);
    const TradeoffEnvelope coarse = build_envelope(catalog, 100);
    const TradeoffEnvelope fine = build_envelope(catalog, 4096);
    const double hi = std::min(coarse.s1_max(), fine.s1_max());
    for (int k = 0; k <= 50; ++k) {
        const double x = fine.s1_min() + (hi - fine.s1_min()) * k / 50.0;
        CHECK(coarse.value_at(x) <= fine.value_at(x) + 1e-4);
    }
}

TEST_CASE("optimizer reproduces the quick mixed optima") {
    // two-case mixing with one free angle: fast enough for a unit test
    const ViolationOptimum r =
        optimize_pattern_tokens(ScenarioId::SteerAB_LL, {"1", "2"}, kPi / 4.0);
    CHECK(r.value == doctest::Approx(1.035).epsilon(2e-3));
    CHECK(r.mix[0] == doctest::Approx(0.845).epsilon(0.02));
    CHECK(r.s1 == doctest::Approx(r.s2).epsilon(1e-6));

    const ViolationOptimum single =
        optimize_double_violation(ScenarioId::SteerAB_LL, {CaseId::Two}, kPi / 4.0);
    CHECK(single.value == doctest::Approx(0.0).epsilon(1e-9));

    CHECK_THROWS_AS(
        optimize_double_violation(ScenarioId::SteerAB_LL, {CaseId::ThreeA}, kPi / 4.0),
        std::invalid_argument);
    CHECK_THROWS_AS(optimize_double_violation(ScenarioId::SteerAB_LL, {}, kPi / 4.0),
                    std::invalid_argument);
}

TEST_CASE("optimizer is deterministic") {
    const ViolationOptimum a =
        optimize_pattern_tokens(ScenarioId::SteerAB_LL, {"1", "2"}, kPi / 4.0);
    const ViolationOptimum b =
        optimize_pattern_tokens(ScenarioId::SteerAB_LL, {"1", "2"}, kPi / 4.0);
    CHECK(a.value == b.value);
    CHECK(a.angles == b.angles);
    CHECK(a.mix == b.mix);
}

TEST_CASE("fault injection makes exactly the corrupted check fail") {
    VerifyOptions options;
    options.only = "cross";
    options.inject_fault = true;
    const auto results = run_verification(options);
    int failed = 0;
    for (const CheckResult& r : results) failed += r.pass ? 0 : 1;
    CHECK(failed == 1);

    options.inject_fault = false;
    for (const CheckResult& r : run_verification(options)) CHECK(r.pass);
}
