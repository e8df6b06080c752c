#pragma once

#include <map>
#include <string>
#include <vector>

#include "sdr/error.hpp"
#include "sdr/param_range.hpp"
#include "sdr/rng.hpp"

namespace sdr {

enum class Setting { Rural, Suburban, Urban };

inline const char* to_string(Setting s) {
    switch (s) {
        case Setting::Rural: return "rural";
        case Setting::Suburban: return "suburban";
        case Setting::Urban: return "urban";
    }
    return "?";
}

inline Setting setting_from_string(const std::string& s) {
    if (s == "rural") return Setting::Rural;
    if (s == "suburban") return Setting::Suburban;
    if (s == "urban") return Setting::Urban;
    throw ConfigError("unknown setting '" + s + "'");
}

enum class SideStretchStyle { Fields, Houses, Buildings };

inline const char* to_string(SideStretchStyle s) {
    switch (s) {
        case SideStretchStyle::Fields: return "fields";
        case SideStretchStyle::Houses: return "houses";
        case SideStretchStyle::Buildings: return "buildings";
    }
    return "?";
}

inline SideStretchStyle side_stretch_style_from_string(const std::string& s) {
    if (s == "fields") return SideStretchStyle::Fields;
    if (s == "houses") return SideStretchStyle::Houses;
    if (s == "buildings") return SideStretchStyle::Buildings;
    throw ConfigError("unknown side_stretch_style '" + s + "'");
}

/// One named scene archetype: structural facts plus optional overrides of the
/// global parameter ranges (keyed by range name, see GlobalRanges).
struct ScenarioSpec {
    std::string name;
    Setting setting = Setting::Rural;
    ParamRange lane_count = ParamRange::fixed(2);
    bool has_median = false;
    bool has_sidewalk = false;
    SideStretchStyle side_stretch_style = SideStretchStyle::Fields;
    std::map<std::string, ParamRange> overrides;

    void validate() const {
        lane_count.validate("scenario '" + name + "' lane_count");
        if (!lane_count.is_scalar())
            throw ConfigError("scenario '" + name + "': lane_count must be scalar");
        int max_lanes = setting == Setting::Rural ? 2 : (setting == Setting::Suburban ? 4 : 6);
        if (lane_count.low < 1.0 || lane_count.high > max_lanes)
            throw ConfigError("scenario '" + name + "': lane_count outside [1, " +
                              std::to_string(max_lanes) + "] for " + to_string(setting));
    }
};

/// Built-in table of 20 archetypes spanning rural/suburban/urban, lane counts
/// {1..6}, median and sidewalk presence. Fully replaceable from the config file.
inline std::vector<ScenarioSpec> default_scenario_table() {
    auto mk = [](std::string name, Setting set, int lanes, bool median, bool sidewalk,
                 SideStretchStyle style) {
        ScenarioSpec s;
        s.name = std::move(name);
        s.setting = set;
        s.lane_count = ParamRange::fixed(lanes);
        s.has_median = median;
        s.has_sidewalk = sidewalk;
        s.side_stretch_style = style;
        return s;
    };
    using S = SideStretchStyle;
    return {
        mk("rural 1-lane track", Setting::Rural, 1, false, false, S::Fields),
        mk("rural 2-lane road", Setting::Rural, 2, false, false, S::Fields),
        mk("rural 2-lane tree-lined road", Setting::Rural, 2, false, false, S::Fields),
        mk("rural 2-lane road with farmhouses", Setting::Rural, 2, false, false, S::Houses),
        mk("rural 2-lane road with a grassy median", Setting::Rural, 2, true, false, S::Fields),
        mk("suburban 2-lane street", Setting::Suburban, 2, false, false, S::Houses),
        mk("suburban 2-lane street with a sidewalk", Setting::Suburban, 2, false, true, S::Houses),
        mk("suburban 4-lane road", Setting::Suburban, 4, false, false, S::Houses),
        mk("suburban 4-lane road with a sidewalk", Setting::Suburban, 4, false, true, S::Houses),
        mk("suburban 4-lane road with a grassy median", Setting::Suburban, 4, true, false,
           S::Houses),
        mk("suburban 4-lane road with a median and a sidewalk", Setting::Suburban, 4, true, true,
           S::Houses),
        mk("urban 2-lane street with a sidewalk", Setting::Urban, 2, false, true, S::Buildings),
        mk("urban 2-lane street with a median and a sidewalk", Setting::Urban, 2, true, true,
           S::Buildings),
        mk("urban 4-lane road", Setting::Urban, 4, false, false, S::Buildings),
        mk("urban 4-lane road with a sidewalk", Setting::Urban, 4, false, true, S::Buildings),
        mk("urban 4-lane road with a median and a sidewalk", Setting::Urban, 4, true, true,
           S::Buildings),
        mk("urban 6-lane road", Setting::Urban, 6, false, false, S::Buildings),
        mk("urban 6-lane road with a sidewalk", Setting::Urban, 6, false, true, S::Buildings),
        mk("urban 6-lane road with a grassy median", Setting::Urban, 6, true, false, S::Buildings),
        mk("urban 6-lane road with a grassy median and a sidewalk", Setting::Urban, 6, true, true,
           S::Buildings),
    };
}

/// Uniform draw over the scenario table.
inline const ScenarioSpec& sample_scenario(RngStream& rng,
                                           const std::vector<ScenarioSpec>& table) {
    if (table.empty()) throw ConfigError("scenario table is empty");
    auto idx = static_cast<size_t>(rng.uniform_int(0, static_cast<int64_t>(table.size()) - 1));
    return table[idx];
}

}  // namespace sdr
