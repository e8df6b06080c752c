#include <gtest/gtest.h>

#include <map>
#include <set>

#include "sdr/globals.hpp"
#include "sdr/rng.hpp"
#include "sdr/scenario.hpp"

namespace {

using sdr::AblationFlags;
using sdr::default_scenario_table;
using sdr::GlobalRanges;
using sdr::make_stream;
using sdr::ParamRange;
using sdr::sample_globals;
using sdr::sample_scenario;
using sdr::ScenarioSpec;
using sdr::Setting;

TEST(ScenarioTable, HasTwentyValidDistinctEntries) {
    auto table = default_scenario_table();
    EXPECT_EQ(table.size(), 20u);
    std::set<std::string> names;
    for (const auto& s : table) {
        EXPECT_NO_THROW(s.validate());
        names.insert(s.name);
    }
    EXPECT_EQ(names.size(), 20u);
}

TEST(SampleScenario, EmptyTableIsConfigError) {
    auto rng = make_stream(1, 0, "scenario");
    std::vector<ScenarioSpec> empty;
    EXPECT_THROW(sample_scenario(rng, empty), sdr::ConfigError);
}

TEST(SampleScenario, SingleEntryAlwaysReturned) {
    auto rng = make_stream(1, 0, "scenario");
    std::vector<ScenarioSpec> one = {default_scenario_table()[0]};
    for (int i = 0; i < 50; ++i) EXPECT_EQ(sample_scenario(rng, one).name, one[0].name);
}

TEST(SampleScenario, UniformOverTwenty) {
    auto table = default_scenario_table();
    auto rng = make_stream(123, 0, "scenario");
    std::map<std::string, int> counts;
    const int n = 100000;
    for (int i = 0; i < n; ++i) counts[sample_scenario(rng, table).name]++;
    for (const auto& [name, c] : counts) {
        double freq = static_cast<double>(c) / n;
        EXPECT_GE(freq, 0.045) << name;
        EXPECT_LE(freq, 0.055) << name;
    }
    EXPECT_EQ(counts.size(), 20u);
}

TEST(SampleScenario, AllTwentySeenWithinTwoThousandDraws) {
    auto table = default_scenario_table();
    auto rng = make_stream(7, 0, "scenario");
    std::set<std::string> seen;
    for (int i = 0; i < 2000 && seen.size() < 20; ++i)
        seen.insert(sample_scenario(rng, table).name);
    EXPECT_EQ(seen.size(), 20u);
}

const ScenarioSpec& find_scenario(const std::vector<ScenarioSpec>& table,
                                  const std::string& name) {
    for (const auto& s : table)
        if (s.name == name) return s;
    throw std::runtime_error("scenario not found: " + name);
}

TEST(SampleGlobals, RuralTwoLaneStructure) {
    auto table = default_scenario_table();
    const auto& rural2 = find_scenario(table, "rural 2-lane road");
    auto rng = make_stream(5, 0, "globals");
    auto g = sample_globals(rng, rural2, GlobalRanges{}, AblationFlags{});
    EXPECT_EQ(g.lane_count, 2);
    EXPECT_FALSE(g.has_median);
}

TEST(SampleGlobals, AllFieldsWithinRanges) {
    auto table = default_scenario_table();
    GlobalRanges ranges;
    AblationFlags off;
    for (uint32_t f = 0; f < 10000; ++f) {
        auto srng = make_stream(99, f, "scenario");
        const auto& sc = sample_scenario(srng, table);
        auto grng = make_stream(99, f, "globals");
        auto g = sample_globals(grng, sc, ranges, off);
        ASSERT_GE(g.sun_azimuth, 0.0);
        ASSERT_LT(g.sun_azimuth, 360.0);
        ASSERT_GE(g.sun_elevation, -5.0);
        ASSERT_LE(g.sun_elevation, 90.0);
        ASSERT_GE(g.sun_color_temperature, 2500.0);
        ASSERT_LE(g.sun_color_temperature, 10000.0);
        ASSERT_GE(g.cloud_density, 0.0);
        ASSERT_LE(g.cloud_density, 1.0);
        ASSERT_GE(g.camera_fov_horizontal, 60.0);
        ASSERT_LE(g.camera_fov_horizontal, 100.0);
        ASSERT_GE(g.camera_height, 1.4);
        ASSERT_LE(g.camera_height, 1.9);
        ASSERT_GE(g.lane_count, 1);
        ASSERT_LE(g.lane_count, 6);
        ASSERT_GE(g.max_vehicles_per_lane, 0);
        ASSERT_GE(g.max_vehicles_total, g.max_vehicles_per_lane);
        ASSERT_GE(g.lane_width, 3.2);
        ASSERT_LE(g.lane_width, 3.8);
    }
}

TEST(SampleGlobals, FixedLightingUnderRandomLightAblation) {
    auto table = default_scenario_table();
    AblationFlags rl;
    rl.no_random_light = true;
    double first_elev = 0.0;
    for (uint32_t f = 0; f < 100; ++f) {
        auto srng = make_stream(4, f, "scenario");
        const auto& sc = sample_scenario(srng, table);
        auto grng = make_stream(4, f, "globals");
        auto g = sample_globals(grng, sc, GlobalRanges{}, rl);
        if (f == 0) first_elev = g.sun_elevation;
        ASSERT_EQ(g.sun_elevation, first_elev);
        ASSERT_EQ(g.sun_azimuth, 160.0);
        ASSERT_EQ(g.sun_intensity, 1.0);
    }
}

TEST(SampleGlobals, AzimuthCoversItsRange) {
    auto table = default_scenario_table();
    double lo = 360.0, hi = 0.0;
    for (uint32_t f = 0; f < 10000; ++f) {
        auto srng = make_stream(21, f, "scenario");
        const auto& sc = sample_scenario(srng, table);
        auto grng = make_stream(21, f, "globals");
        auto g = sample_globals(grng, sc, GlobalRanges{}, AblationFlags{});
        lo = std::min(lo, g.sun_azimuth);
        hi = std::max(hi, g.sun_azimuth);
    }
    EXPECT_LT(lo, 10.0);
    EXPECT_GT(hi, 350.0);
}

TEST(SampleGlobals, ScenarioOverridesApply) {
    ScenarioSpec s = default_scenario_table()[1];
    s.overrides["lane_width"] = ParamRange::fixed(3.0);
    auto rng = make_stream(6, 0, "globals");
    auto g = sample_globals(rng, s, GlobalRanges{}, AblationFlags{});
    EXPECT_EQ(g.lane_width, 3.0);
}

TEST(GlobalRanges, UnknownNameRejected) {
    GlobalRanges r;
    EXPECT_THROW(r.set("sped", ParamRange::fixed(1)), sdr::ConfigError);
    EXPECT_THROW(r.get("nope"), sdr::ConfigError);
}

TEST(ScenarioSpec, LaneCountLimitsPerSetting) {
    ScenarioSpec bad;
    bad.name = "rural 4-lane";
    bad.setting = Setting::Rural;
    bad.lane_count = ParamRange::fixed(4);
    EXPECT_THROW(bad.validate(), sdr::ConfigError);

    ScenarioSpec urban6;
    urban6.name = "urban 6";
    urban6.setting = Setting::Urban;
    urban6.lane_count = ParamRange::fixed(6);
    EXPECT_NO_THROW(urban6.validate());
}

}  // namespace
