#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "steerlab/angles.hpp"
#include "steerlab/io.hpp"
#include "steerlab/weak.hpp"

using namespace steerlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("angle parsing") {
    CHECK(*parse_angle("pi") == doctest::Approx(kPi));
    CHECK(*parse_angle("7pi/36") == doctest::Approx(7.0 * kPi / 36.0));
    CHECK(*parse_angle("-pi/12") == doctest::Approx(-kPi / 12.0));
    CHECK(*parse_angle("2pi/9") == doctest::Approx(2.0 * kPi / 9.0));
    CHECK(*parse_angle("0.25") == doctest::Approx(0.25));
    CHECK(*parse_angle("-1.5e-1") == doctest::Approx(-0.15));
    CHECK_FALSE(parse_angle("pie").has_value());
    CHECK_FALSE(parse_angle("pi/0").has_value());
    CHECK_FALSE(parse_angle("7pi/").has_value());
    CHECK_FALSE(parse_angle("").has_value());
}

TEST_CASE("angle formatting picks rational multiples of pi") {
    CHECK(format_angle(kPi / 4.0) == "pi/4");
    CHECK(format_angle(-kPi / 12.0) == "-pi/12");
    CHECK(format_angle(7.0 * kPi / 36.0) == "7pi/36");
    CHECK(format_angle(10.0 * kPi / 37.0) == "10pi/37");
    CHECK(format_angle(0.0) == "0");
    CHECK(format_angle(kPi) == "pi");
    CHECK(format_angle(2.0 * kPi) == "2pi");
    // non-rational angles fall back to decimals that parse back
    const std::string text = format_angle(0.1234567);
    CHECK(*parse_angle(text) == doctest::Approx(0.1234567).epsilon(1e-9));
}

TEST_CASE("angle round trip") {
    for (int num = -12; num <= 12; ++num) {
        for (int den : {4, 9, 12, 36, 37, 47, 96}) {
            const double value = num * kPi / den;
            if (std::abs(value) > kPi) continue;
            const auto parsed = parse_angle(format_angle(value));
            REQUIRE(parsed.has_value());
            CHECK(*parsed == doctest::Approx(value).epsilon(1e-12));
        }
    }
}

TEST_CASE("tradeoff files round trip bit exact") {
    RunManifest manifest;
    manifest.command = "tradeoff";
    manifest.scenario = "steer-ab-ll";
    manifest.alpha = "pi/4";
    manifest.samples = 256;
    manifest.seed = 7;

    std::vector<TradeoffRow> rows;
    for (int k = 0; k < 64; ++k) {
        const double x = 1.4 * k / 63.0;
        rows.push_back({x, std::sqrt(2.0 - x * x), "envelope:mix(2|3)", "-"});
    }
    rows.push_back({1.0, 1.0, "classical_bound_s1", "-"});

    const std::string csv = tradeoff_csv(manifest, rows);
    const auto parsed_csv = parse_tradeoff_csv(csv);
    REQUIRE(parsed_csv.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed_csv[i].s1 == rows[i].s1);  // bit exact
        CHECK(parsed_csv[i].s2 == rows[i].s2);
        CHECK(parsed_csv[i].segment_label == rows[i].segment_label);
        CHECK(parsed_csv[i].case_lambda == rows[i].case_lambda);
    }

    const std::string json = tradeoff_json(manifest, rows);
    const auto parsed_json = parse_tradeoff_json(json);
    REQUIRE(parsed_json.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(parsed_json[i].s1 == rows[i].s1);
        CHECK(parsed_json[i].s2 == rows[i].s2);
    }

    // identical manifests produce identical bytes
    CHECK(tradeoff_csv(manifest, rows) == csv);
    CHECK(tradeoff_json(manifest, rows) == json);

    CHECK(csv.find("# manifest: command=tradeoff scenario=steer-ab-ll alpha=pi/4") !=
          std::string::npos);
}

TEST_CASE("weak benchmark closed forms across the pointer range") {
    for (double g : {0.0, 0.25, 0.5, 0.8, 1.0}) {
        const PointerModel p = PointerModel::square(g);
        for (WeakConfig config : all_weak_configs()) {
            const WeakScores scores = weak_benchmark(p, config);
            CHECK(scores.s1 == doctest::Approx(std::sqrt(2.0) * p.g).epsilon(1e-10));
            CHECK(scores.s2 == doctest::Approx((1.0 + p.f) / std::sqrt(2.0)).epsilon(1e-10));
        }
    }
    // linear pointer spot check
    const PointerModel lin = PointerModel::linear(0.5);
    const WeakScores scores = weak_benchmark(lin, WeakConfig::SteerAB_LL);
    CHECK(scores.s1 == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-10));
    CHECK(scores.s2 == doctest::Approx(1.5 / std::sqrt(2.0)).epsilon(1e-10));
}
