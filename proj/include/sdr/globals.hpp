#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "sdr/color.hpp"
#include "sdr/error.hpp"
#include "sdr/param_range.hpp"
#include "sdr/scenario.hpp"

namespace sdr {

/// Generation switches. Each flag removes one randomization dimension:
/// no_context swaps structured scenes for random-background ones, the others
/// pin contrast / saturation / lighting / vehicle pose, and setting_only
/// restricts the scenario table to a single setting.
struct AblationFlags {
    bool no_context = false;          // C
    std::optional<Setting> setting_only;  // SR
    bool no_high_contrast = false;    // HC
    bool no_random_saturation = false;  // RS
    bool no_random_light = false;     // RL
    bool no_multiple_pose = false;    // MP
};

/// Sun/sky constants used when random lighting is ablated.
struct BroadDaylight {
    double sun_azimuth = 160.0;
    double sun_elevation = 65.0;
    double sun_color_temperature = 5800.0;
    double sun_intensity = 1.0;
    double sky_hue = 210.0;
    double sky_saturation = 0.35;
    double sky_value = 0.92;
};

/// All scene-wide draws for one frame.
struct GlobalParams {
    double sun_azimuth = 0.0;          // degrees [0,360)
    double sun_elevation = 0.0;        // degrees
    double sun_color_temperature = 0;  // kelvin
    double sun_intensity = 1.0;
    Color3 sky_color;
    double cloud_density = 0.0;  // [0,1]
    uint32_t cloud_seed = 0;
    double camera_yaw = 0.0;    // degrees, offset from road heading
    double camera_pitch = 0.0;  // degrees
    double camera_fov_horizontal = 90.0;
    double camera_height = 1.6;  // meters
    int lane_count = 2;
    bool has_median = false;
    bool has_sidewalk = false;
    int max_vehicles_per_lane = 0;
    int max_vehicles_total = 0;
    int turn_decision_period = 10;
    double lane_width = 3.5;
    double median_width = 3.0;
    double sidewalk_width = 2.0;
    double gutter_width = 0.4;
    double side_stretch_width = 20.0;
};

/// Named library of the ranges behind GlobalParams. Scenario overrides and the
/// config file address entries by the same names.
struct GlobalRanges {
    std::map<std::string, ParamRange> ranges;

    GlobalRanges() {
        ranges = {
            {"sun_azimuth", ParamRange::uniform(0.0, 360.0)},
            {"sun_elevation", ParamRange::uniform(-5.0, 90.0)},
            {"sun_color_temperature", ParamRange::uniform(2500.0, 10000.0)},
            {"sun_intensity", ParamRange::uniform(0.6, 1.3)},
            {"sky_hue", ParamRange::uniform(185.0, 245.0)},
            {"sky_saturation", ParamRange::uniform(0.08, 0.65)},
            {"sky_value", ParamRange::uniform(0.55, 1.0)},
            {"cloud_density", ParamRange::uniform(0.0, 1.0)},
            {"camera_yaw", ParamRange::uniform(-10.0, 10.0)},
            {"camera_pitch", ParamRange::uniform(-5.0, 5.0)},
            {"camera_fov_horizontal", ParamRange::uniform(60.0, 100.0)},
            {"camera_height", ParamRange::uniform(1.4, 1.9)},
            {"max_vehicles_per_lane", ParamRange::uniform_int(1, 6)},
            {"max_vehicles_total", ParamRange::uniform_int(4, 20)},
            {"turn_decision_period", ParamRange::fixed(10)},
            {"lane_width", ParamRange::uniform(3.2, 3.8)},
            {"median_width", ParamRange::uniform(2.0, 6.0)},
            {"sidewalk_width", ParamRange::uniform(1.5, 2.5)},
            {"gutter_width", ParamRange::uniform(0.3, 0.6)},
            {"side_stretch_width", ParamRange::uniform(10.0, 30.0)},
        };
    }

    const ParamRange& get(const std::string& name) const {
        auto it = ranges.find(name);
        if (it == ranges.end()) throw ConfigError("unknown global range '" + name + "'");
        return it->second;
    }

    void set(const std::string& name, const ParamRange& r) {
        auto it = ranges.find(name);
        if (it == ranges.end()) throw ConfigError("unknown global range '" + name + "'");
        r.validate("global range '" + name + "'");
        it->second = r;
    }

    /// Returns this library with the scenario's overrides applied.
    GlobalRanges resolved_for(const ScenarioSpec& scenario) const {
        GlobalRanges out = *this;
        for (const auto& [name, range] : scenario.overrides) out.set(name, range);
        return out;
    }

    void validate() const {
        for (const auto& [name, range] : ranges) range.validate("global range '" + name + "'");
    }
};

/// Draw every scene-wide parameter from its scenario-resolved range.
/// With random lighting ablated the sun and sky are pinned to `daylight`.
inline GlobalParams sample_globals(RngStream& rng, const ScenarioSpec& scenario,
                                   const GlobalRanges& base_ranges, const AblationFlags& ablation,
                                   const BroadDaylight& daylight = {}) {
    scenario.validate();
    GlobalRanges r = base_ranges.resolved_for(scenario);

    GlobalParams g;
    // Draw order is fixed; all draws come from this one substream.
    g.sun_azimuth = r.get("sun_azimuth").sample_scalar(rng);
    g.sun_elevation = r.get("sun_elevation").sample_scalar(rng);
    g.sun_color_temperature = r.get("sun_color_temperature").sample_scalar(rng);
    g.sun_intensity = r.get("sun_intensity").sample_scalar(rng);
    double hue = r.get("sky_hue").sample_scalar(rng);
    double sat = r.get("sky_saturation").sample_scalar(rng);
    double val = r.get("sky_value").sample_scalar(rng);
    g.cloud_density = r.get("cloud_density").sample_scalar(rng);
    g.cloud_seed = rng.next_u32();
    if (ablation.no_random_light) {
        g.sun_azimuth = daylight.sun_azimuth;
        g.sun_elevation = daylight.sun_elevation;
        g.sun_color_temperature = daylight.sun_color_temperature;
        g.sun_intensity = daylight.sun_intensity;
        hue = daylight.sky_hue;
        sat = daylight.sky_saturation;
        val = daylight.sky_value;
    }
    g.sky_color = hsv_to_rgb(hue, sat, val);

    g.camera_yaw = r.get("camera_yaw").sample_scalar(rng);
    g.camera_pitch = r.get("camera_pitch").sample_scalar(rng);
    g.camera_fov_horizontal = r.get("camera_fov_horizontal").sample_scalar(rng);
    g.camera_height = r.get("camera_height").sample_scalar(rng);

    g.lane_count = static_cast<int>(scenario.lane_count.sample_scalar(rng));
    g.has_median = scenario.has_median;
    g.has_sidewalk = scenario.has_sidewalk;

    g.max_vehicles_per_lane = static_cast<int>(r.get("max_vehicles_per_lane").sample_scalar(rng));
    g.max_vehicles_total = static_cast<int>(r.get("max_vehicles_total").sample_scalar(rng));
    if (g.max_vehicles_total < g.max_vehicles_per_lane)
        g.max_vehicles_total = g.max_vehicles_per_lane;

    g.turn_decision_period =
        std::max(1, static_cast<int>(r.get("turn_decision_period").sample_scalar(rng)));
    g.lane_width = r.get("lane_width").sample_scalar(rng);
    g.median_width = r.get("median_width").sample_scalar(rng);
    g.sidewalk_width = r.get("sidewalk_width").sample_scalar(rng);
    g.gutter_width = r.get("gutter_width").sample_scalar(rng);
    g.side_stretch_width = r.get("side_stretch_width").sample_scalar(rng);
    return g;
}

}  // namespace sdr
