#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdr/assets.hpp"
#include "sdr/camera.hpp"
#include "sdr/globals.hpp"
#include "sdr/road.hpp"
#include "sdr/rng.hpp"

namespace sdr {

enum class SceneMode { SDR, DR };

inline const char* to_string(SceneMode m) { return m == SceneMode::SDR ? "sdr" : "dr"; }

struct ObjectInstance {
    AssetDescriptor asset;
    Material material;
    Vec3 position;        // mesh origin (base center) in world
    double yaw_deg = 0.0;
    int owning_spline = -1;  // index into SceneGraph::splines, -1 in DR mode
    double station = 0.0;    // strip arclength, meters
    double lateral = 0.0;    // meters from strip center
    uint16_t instance_id = 0;  // unique per frame, >= 1; 0 is background
};

struct EgoPose {
    int lane_spline_index = -1;
    double station = 0.0;
    Vec3 position;       // camera mount position (includes camera height)
    double yaw_deg = 0.0;  // camera yaw (road heading + offset)
    double pitch_deg = 0.0;
};

struct PostParams {
    double contrast_percent = 150.0;
    double saturation = 1.0;
};

/// DR-mode background plane: procedural noise by default, optionally an image.
struct Backdrop {
    Color3 color_a{0.5f, 0.5f, 0.5f};
    Color3 color_b{0.2f, 0.2f, 0.2f};
    double noise_scale = 1.0;
    double depth = 120.0;
    std::shared_ptr<const struct RasterImage> image;  // optional, see image_io.hpp
};

struct SceneGraph {
    ScenarioSpec scenario;
    GlobalParams globals;
    SceneMode mode = SceneMode::SDR;
    std::shared_ptr<const CenterlineSpline> centerline;  // null in DR mode
    std::vector<ContextSpline> splines;
    std::vector<ObjectInstance> objects;
    EgoPose ego;
    PostParams post;
    std::optional<Backdrop> backdrop;
};

struct PlacementConfig {
    double vehicle_station_min = 5.0;    // ahead of the ego camera
    double vehicle_station_max = 150.0;
    double min_vehicle_offset = 8.0;     // same-lane separation
    int rejection_retries = 100;
    double truck_share = 0.15;
    double vehicle_lateral_jitter = 0.3;
    double vehicle_yaw_jitter_deg = 5.0;
    double parked_probability = 0.2;       // multiple-pose extras
    double parked_yaw_jitter_deg = 20.0;
    double random_yaw_probability = 0.05;
    double side_station_back = 20.0;
    double side_station_ahead = 250.0;
    double ego_station_min = 30.0;
    double ego_station_max = 80.0;
    ParamRange pedestrians_per_sidewalk = ParamRange::uniform_int(0, 8);
    ParamRange cyclists_per_sidewalk = ParamRange::uniform_int(0, 2);
    ParamRange buildings_per_stretch = ParamRange::uniform_int(3, 9);
    ParamRange houses_per_stretch = ParamRange::uniform_int(3, 10);
    ParamRange trees_per_stretch = ParamRange::uniform_int(2, 10);
    ParamRange signs_per_stretch = ParamRange::uniform_int(1, 4);
    ParamRange furniture_per_stretch = ParamRange::uniform_int(0, 6);
    ParamRange trees_per_median = ParamRange::uniform_int(0, 4);
    ParamRange signs_per_median = ParamRange::uniform_int(0, 2);
    double pedestrian_spacing = 1.0;
    double cyclist_spacing = 2.0;
    double tree_spacing = 3.0;
    double sign_spacing = 10.0;
    double building_gap = 2.0;  // edge-to-edge along the strip
    double furniture_spacing = 5.0;
};

struct DrConfig {
    double depth_min = 5.0;
    double depth_max = 80.0;
    double frustum_margin = 0.06;  // normalized pixel inset for object centers
    ParamRange vehicle_count = ParamRange::uniform_int(4, 12);
    ParamRange distractor_count = ParamRange::uniform_int(5, 15);
    double backdrop_depth = 120.0;
    std::string background_image_dir;  // empty = procedural noise
};

struct PostConfig {
    double contrast_percent = 150.0;
    ParamRange saturation = ParamRange::uniform(0.5, 1.5);
};

/// Everything scene assembly needs, independent of dataset/file concerns.
struct AssemblyConfig {
    std::vector<ScenarioSpec> scenarios = default_scenario_table();
    GlobalRanges ranges;
    AblationFlags ablation;
    BroadDaylight daylight;
    RoadParams road;
    PlacementConfig placement;
    DrConfig dr;
    PostConfig post;
    std::vector<PaintColor> palette = vehicle_paint_palette();
    int image_width = 1248;
    int image_height = 384;
};

/// Permission table: which strip kinds may host which asset classes.
inline bool class_permitted_on(StripKind kind, AssetClass cls) {
    switch (kind) {
        case StripKind::Lane:
            return cls == AssetClass::Car || cls == AssetClass::Truck;
        case StripKind::Sidewalk:
            return cls == AssetClass::Pedestrian || cls == AssetClass::Cyclist;
        case StripKind::Median:
            return cls == AssetClass::Tree || cls == AssetClass::RoadSign;
        case StripKind::SideStretch:
            return cls != AssetClass::Car && cls != AssetClass::Truck &&
                   cls != AssetClass::Pedestrian && cls != AssetClass::Cyclist &&
                   cls != AssetClass::Bicycle;
        case StripKind::Gutter:
            return false;
    }
    return false;
}

namespace detail {

inline std::string lane_stream_label(int lane_index) {
    return std::string("vehicles/lane/") + (lane_index > 0 ? "+" : "") +
           std::to_string(lane_index);
}

inline ObjectInstance make_strip_object(const AssetLibrary& assets, AssetClass cls, int variant,
                                        Material material, const ContextSpline& strip,
                                        int strip_index, double station, double lateral,
                                        double yaw_deg) {
    ObjectInstance obj;
    obj.asset = assets.descriptor(cls, variant);
    obj.material = material;
    obj.owning_spline = strip_index;
    obj.station = station;
    obj.lateral = lateral;
    obj.yaw_deg = yaw_deg;
    auto f = frame_at(strip, station, lateral);
    obj.position = f.position;
    return obj;
}

}  // namespace detail

/// Fill lanes with cars and trucks. Per lane: draw a cap, then place vehicles
/// at random stations ahead of the ego camera, rejecting draws closer than
/// min_vehicle_offset to an already-placed vehicle in that lane. A slot whose
/// retries run out is skipped. Lanes are visited in a randomized order and
/// placement stops when the scene-wide cap is reached.
inline std::vector<ObjectInstance> place_vehicles(const FrameRng& frng,
                                                  const std::vector<ContextSpline>& splines,
                                                  const GlobalParams& globals,
                                                  const PlacementConfig& cfg,
                                                  const AssetLibrary& assets,
                                                  const AblationFlags& ablation,
                                                  double ego_param) {
    std::vector<int> lane_indices;
    for (size_t i = 0; i < splines.size(); ++i)
        if (splines[i].kind == StripKind::Lane) lane_indices.push_back(static_cast<int>(i));
    if (lane_indices.empty()) return {};

    auto order_rng = frng.stream("vehicles/order");
    order_rng.shuffle(lane_indices);

    const bool multi_pose = !ablation.no_multiple_pose;
    std::vector<ObjectInstance> out;
    int total = 0;

    for (int strip_index : lane_indices) {
        const auto& lane = splines[static_cast<size_t>(strip_index)];
        auto rng = frng.stream(detail::lane_stream_label(lane.lane_index));

        int per_lane = static_cast<int>(rng.uniform_int(0, globals.max_vehicles_per_lane));
        double base = lane.arclength_at_param(ego_param);
        double smin = base + cfg.vehicle_station_min;
        double smax = std::min(base + cfg.vehicle_station_max, lane.arclength());
        if (smin >= smax) continue;

        std::vector<double> stations;
        for (int slot = 0; slot < per_lane && total < globals.max_vehicles_total; ++slot) {
            std::optional<double> station;
            for (int attempt = 0; attempt < cfg.rejection_retries; ++attempt) {
                double s = rng.uniform(smin, smax);
                bool clear = true;
                for (double other : stations)
                    clear = clear && std::fabs(s - other) >= cfg.min_vehicle_offset;
                if (clear) {
                    station = s;
                    break;
                }
            }
            if (!station) continue;  // lane is effectively full

            AssetClass cls = rng.bernoulli(cfg.truck_share) ? AssetClass::Truck : AssetClass::Car;
            int variant = static_cast<int>(
                rng.uniform_int(0, assets.variant_count(cls) - 1));
            Material mat = sample_material(rng, MaterialClass::Vehicle);

            double lateral =
                rng.uniform(-cfg.vehicle_lateral_jitter, cfg.vehicle_lateral_jitter);
            auto f = frame_at(lane, *station, 0.0);
            double road_heading = f.heading_deg();
            if (lane.lane_index < 0) road_heading += 180.0;
            double yaw =
                road_heading + rng.uniform(-cfg.vehicle_yaw_jitter_deg, cfg.vehicle_yaw_jitter_deg);

            if (multi_pose) {
                double x = rng.uniform01();
                const auto& dims = assets.descriptor(cls, variant).nominal_dims;
                if (x < cfg.parked_probability) {
                    // Parked near the lane's outer edge.
                    double outer_sign = lane.lateral_offset_center < 0.0 ? -1.0 : 1.0;
                    double max_shift = std::max(0.0, lane.width / 2.0 - dims.y / 2.0 - 0.05);
                    double shift = clamp(max_shift - rng.uniform(0.0, 0.2), 0.0, max_shift);
                    lateral = outer_sign * shift;
                    yaw = road_heading +
                          rng.uniform(-cfg.parked_yaw_jitter_deg, cfg.parked_yaw_jitter_deg);
                } else if (x < cfg.parked_probability + cfg.random_yaw_probability) {
                    yaw = rng.uniform(0.0, 360.0);  // side-street stand-in
                }
            }

            stations.push_back(*station);
            out.push_back(detail::make_strip_object(assets, cls, variant, mat, lane, strip_index,
                                                    *station, lateral, yaw));
            total++;
        }
        if (total >= globals.max_vehicles_total) break;
    }
    return out;
}

namespace detail {

struct SpacingGroup {
    std::vector<double> stations;
    std::vector<double> footprints;  // along-strip length per placed object

    bool fits(double s, double footprint, double gap, bool edge_gap) const {
        for (size_t i = 0; i < stations.size(); ++i) {
            double need = edge_gap ? (footprint + footprints[i]) / 2.0 + gap : gap;
            if (std::fabs(s - stations[i]) < need) return false;
        }
        return true;
    }
    void add(double s, double footprint) {
        stations.push_back(s);
        footprints.push_back(footprint);
    }
};

/// Place `count` objects of one class group on a strip with rejection-sampled
/// stations; yaw_mode: 0 = uniform, 1 = road-aligned, 2 = face jitter only.
inline void scatter_on_strip(RngStream& rng, const AssetLibrary& assets,
                             const std::vector<AssetClass>& classes, int count,
                             const ContextSpline& strip, int strip_index, double smin,
                             double smax, double gap, bool edge_gap, int yaw_mode,
                             bool near_road_edge, int retries,
                             std::vector<ObjectInstance>& out) {
    if (smin >= smax || count <= 0) return;
    SpacingGroup group;
    for (int i = 0; i < count; ++i) {
        AssetClass cls =
            classes[static_cast<size_t>(rng.uniform_int(0, static_cast<int64_t>(classes.size()) - 1))];
        int variant = static_cast<int>(rng.uniform_int(0, assets.variant_count(cls) - 1));
        const auto& dims = assets.descriptor(cls, variant).nominal_dims;

        std::optional<double> station;
        for (int attempt = 0; attempt < retries; ++attempt) {
            double s = rng.uniform(smin, smax);
            if (group.fits(s, dims.x, gap, edge_gap)) {
                station = s;
                break;
            }
        }
        if (!station) continue;

        double u_limit = std::max(0.0, strip.width / 2.0 - dims.y / 2.0);
        double lateral;
        if (near_road_edge) {
            double inner_sign = strip.lateral_offset_center < 0.0 ? 1.0 : -1.0;
            lateral = inner_sign * (strip.width / 2.0 - rng.uniform(0.5, 1.5));
            lateral = clamp(lateral, -u_limit, u_limit);
        } else {
            lateral = rng.uniform(-u_limit, u_limit);
        }

        double yaw = 0.0;
        auto f = frame_at(strip, *station, 0.0);
        switch (yaw_mode) {
            case 0: yaw = rng.uniform(0.0, 360.0); break;
            case 1: {
                yaw = f.heading_deg() + (rng.bernoulli(0.5) ? 0.0 : 180.0) +
                      rng.uniform(-15.0, 15.0);
                break;
            }
            default: yaw = f.heading_deg() + rng.uniform(-3.0, 3.0); break;
        }

        Material mat = sample_material(rng, material_class_for(cls));
        group.add(*station, dims.x);
        out.push_back(make_strip_object(assets, cls, variant, mat, strip, strip_index, *station,
                                        lateral, yaw));
    }
}

}  // namespace detail

/// Populate sidewalks, medians, and side stretches. Each strip draws from its
/// own substream so strips are independent of one another.
inline std::vector<ObjectInstance> place_side_objects(const FrameRng& frng,
                                                      const std::vector<ContextSpline>& splines,
                                                      const ScenarioSpec& scenario,
                                                      const PlacementConfig& cfg,
                                                      const AssetLibrary& assets,
                                                      double ego_param) {
    std::vector<ObjectInstance> out;
    for (size_t i = 0; i < splines.size(); ++i) {
        const auto& strip = splines[i];
        if (strip.kind == StripKind::Lane || strip.kind == StripKind::Gutter) continue;

        auto rng = frng.stream("objects/strip/" + std::to_string(i));
        double base = strip.arclength_at_param(ego_param);
        double smin = std::max(0.0, base - cfg.side_station_back);
        double smax = std::min(strip.arclength(), base + cfg.side_station_ahead);
        int idx = static_cast<int>(i);

        switch (strip.kind) {
            case StripKind::Sidewalk: {
                int peds = static_cast<int>(cfg.pedestrians_per_sidewalk.sample_scalar(rng));
                detail::scatter_on_strip(rng, assets, {AssetClass::Pedestrian}, peds, strip, idx,
                                         smin, smax, cfg.pedestrian_spacing, false, 0, false,
                                         cfg.rejection_retries, out);
                int cyc = static_cast<int>(cfg.cyclists_per_sidewalk.sample_scalar(rng));
                detail::scatter_on_strip(rng, assets, {AssetClass::Cyclist}, cyc, strip, idx,
                                         smin, smax, cfg.cyclist_spacing, false, 1, false,
                                         cfg.rejection_retries, out);
                break;
            }
            case StripKind::Median: {
                int trees = static_cast<int>(cfg.trees_per_median.sample_scalar(rng));
                detail::scatter_on_strip(rng, assets, {AssetClass::Tree}, trees, strip, idx, smin,
                                         smax, cfg.tree_spacing, false, 0, false,
                                         cfg.rejection_retries, out);
                int signs = static_cast<int>(cfg.signs_per_median.sample_scalar(rng));
                detail::scatter_on_strip(rng, assets, {AssetClass::RoadSign}, signs, strip, idx,
                                         smin, smax, cfg.sign_spacing, false, 2, false,
                                         cfg.rejection_retries, out);
                break;
            }
            case StripKind::SideStretch: {
                using AC = AssetClass;
                switch (scenario.side_stretch_style) {
                    case SideStretchStyle::Fields: {
                        int trees = static_cast<int>(cfg.trees_per_stretch.sample_scalar(rng));
                        detail::scatter_on_strip(rng, assets, {AC::Tree}, trees, strip, idx, smin,
                                                 smax, cfg.tree_spacing, false, 0, false,
                                                 cfg.rejection_retries, out);
                        int fences = static_cast<int>(
                            cfg.furniture_per_stretch.sample_scalar(rng));
                        detail::scatter_on_strip(rng, assets,
                                                 {AC::Fence, AC::TelephonePole, AC::Wall}, fences,
                                                 strip, idx, smin, smax, cfg.furniture_spacing,
                                                 true, 2, false, cfg.rejection_retries, out);
                        break;
                    }
                    case SideStretchStyle::Houses: {
                        int houses = static_cast<int>(cfg.houses_per_stretch.sample_scalar(rng));
                        detail::scatter_on_strip(rng, assets, {AC::House}, houses, strip, idx,
                                                 smin, smax, cfg.building_gap, true, 2, false,
                                                 cfg.rejection_retries, out);
                        int trees = static_cast<int>(cfg.trees_per_stretch.sample_scalar(rng));
                        detail::scatter_on_strip(rng, assets, {AC::Tree}, trees, strip, idx, smin,
                                                 smax, cfg.tree_spacing, false, 0, false,
                                                 cfg.rejection_retries, out);
                        int furn = static_cast<int>(cfg.furniture_per_stretch.sample_scalar(rng));
                        detail::scatter_on_strip(
                            rng, assets,
                            {AC::StreetLight, AC::FireHydrant, AC::RecyclingBin,
                             AC::TelephonePole, AC::Fence},
                            furn, strip, idx, smin, smax, cfg.furniture_spacing, false, 2, false,
                            cfg.rejection_retries, out);
                        break;
                    }
                    case SideStretchStyle::Buildings: {
                        int bld = static_cast<int>(cfg.buildings_per_stretch.sample_scalar(rng));
                        detail::scatter_on_strip(rng, assets, {AC::Building}, bld, strip, idx,
                                                 smin, smax, cfg.building_gap, true, 2, false,
                                                 cfg.rejection_retries, out);
                        int furn = static_cast<int>(cfg.furniture_per_stretch.sample_scalar(rng));
                        detail::scatter_on_strip(
                            rng, assets,
                            {AC::StreetLight, AC::TrafficLight, AC::UtilityBox, AC::FireHydrant,
                             AC::RecyclingBin},
                            furn, strip, idx, smin, smax, cfg.furniture_spacing, false, 2, false,
                            cfg.rejection_retries, out);
                        int trees = static_cast<int>(cfg.trees_per_stretch.sample_scalar(rng));
                        detail::scatter_on_strip(rng, assets, {AC::Tree}, trees / 2, strip, idx,
                                                 smin, smax, cfg.tree_spacing, false, 0, false,
                                                 cfg.rejection_retries, out);
                        break;
                    }
                }
                int signs = static_cast<int>(cfg.signs_per_stretch.sample_scalar(rng));
                detail::scatter_on_strip(rng, assets, {AssetClass::RoadSign}, signs, strip, idx,
                                         smin, smax, cfg.sign_spacing, false, 2, true,
                                         cfg.rejection_retries, out);
                break;
            }
            default: break;
        }
    }
    return out;
}

inline SceneGraph assemble_dr_scene(const FrameRng& frng, const AssemblyConfig& cfg,
                                    const AssetLibrary& assets);

/// Run the full structured sampling chain for one frame:
/// scenario -> globals -> centerline -> strips -> ego -> vehicles -> side objects.
/// Each stage draws from its own substream. With the no-context ablation the
/// frame falls through to the DR assembler.
inline SceneGraph assemble_scene(const FrameRng& frng, const AssemblyConfig& cfg,
                                 const AssetLibrary& assets) {
    if (cfg.ablation.no_context) return assemble_dr_scene(frng, cfg, assets);

    SceneGraph scene;
    scene.mode = SceneMode::SDR;

    std::vector<ScenarioSpec> table;
    if (cfg.ablation.setting_only) {
        for (const auto& s : cfg.scenarios)
            if (s.setting == *cfg.ablation.setting_only) table.push_back(s);
        if (table.empty())
            throw ConfigError("scenario restriction leaves an empty table");
    } else {
        table = cfg.scenarios;
    }

    {
        auto rng = frng.stream("scenario");
        scene.scenario = sample_scenario(rng, table);
    }
    {
        auto rng = frng.stream("globals");
        scene.globals =
            sample_globals(rng, scene.scenario, cfg.ranges, cfg.ablation, cfg.daylight);
    }
    {
        auto rng = frng.stream("centerline");
        scene.centerline = std::make_shared<CenterlineSpline>(
            generate_centerline(rng, scene.globals, cfg.road));
    }
    {
        auto rng = frng.stream("splines");
        scene.splines = build_context_splines(scene.centerline, scene.globals, rng,
                                              scene.scenario.side_stretch_style, cfg.road);
    }

    double ego_param = 0.0;
    {
        auto rng = frng.stream("ego");
        std::vector<int> ego_lanes;
        for (size_t i = 0; i < scene.splines.size(); ++i)
            if (scene.splines[i].kind == StripKind::Lane && scene.splines[i].lane_index > 0)
                ego_lanes.push_back(static_cast<int>(i));
        int lane_idx = ego_lanes[static_cast<size_t>(
            rng.uniform_int(0, static_cast<int64_t>(ego_lanes.size()) - 1))];
        const auto& lane = scene.splines[static_cast<size_t>(lane_idx)];
        double station = clamp(rng.uniform(cfg.placement.ego_station_min,
                                           cfg.placement.ego_station_max),
                               0.0, lane.arclength());
        double lateral = rng.uniform(-0.2, 0.2);
        auto f = frame_at(lane, station, lateral);
        scene.ego.lane_spline_index = lane_idx;
        scene.ego.station = station;
        scene.ego.position = f.position + Vec3{0.0, 0.0, scene.globals.camera_height};
        scene.ego.yaw_deg = f.heading_deg() + scene.globals.camera_yaw;
        scene.ego.pitch_deg = scene.globals.camera_pitch;
        ego_param = lane.param_at_arclength(station);
    }

    auto vehicles = place_vehicles(frng, scene.splines, scene.globals, cfg.placement, assets,
                                   cfg.ablation, ego_param);
    auto side = place_side_objects(frng, scene.splines, scene.scenario, cfg.placement, assets,
                                   ego_param);
    scene.objects = std::move(vehicles);
    scene.objects.insert(scene.objects.end(), side.begin(), side.end());
    for (size_t i = 0; i < scene.objects.size(); ++i)
        scene.objects[i].instance_id = static_cast<uint16_t>(i + 1);

    {
        auto rng = frng.stream("post");
        scene.post.contrast_percent =
            cfg.ablation.no_high_contrast ? 100.0 : cfg.post.contrast_percent;
        double sat = cfg.post.saturation.sample_scalar(rng);
        scene.post.saturation = cfg.ablation.no_random_saturation ? 1.0 : sat;
    }
    return scene;
}

/// Context-free baseline: random backdrop, vehicles and distractors at uniform
/// random poses inside the viewing frustum.
inline SceneGraph assemble_dr_scene(const FrameRng& frng, const AssemblyConfig& cfg,
                                    const AssetLibrary& assets) {
    SceneGraph scene;
    scene.mode = SceneMode::DR;
    scene.scenario.name = "dr-background";
    scene.scenario.setting = Setting::Urban;
    scene.scenario.lane_count = ParamRange::fixed(1);

    {
        auto rng = frng.stream("globals");
        scene.globals =
            sample_globals(rng, scene.scenario, cfg.ranges, cfg.ablation, cfg.daylight);
    }

    scene.ego.position = {0.0, 0.0, scene.globals.camera_height};
    scene.ego.yaw_deg = scene.globals.camera_yaw;
    scene.ego.pitch_deg = scene.globals.camera_pitch;

    Camera cam(scene.ego.position, scene.ego.yaw_deg, scene.ego.pitch_deg,
               scene.globals.camera_fov_horizontal, cfg.image_width, cfg.image_height);

    {
        auto rng = frng.stream("backdrop");
        Backdrop b;
        b.depth = cfg.dr.backdrop_depth;
        b.color_a = hsv_to_rgb(rng.uniform(0.0, 360.0), rng.uniform(0.1, 0.9),
                               rng.uniform(0.25, 0.95));
        b.color_b = hsv_to_rgb(rng.uniform(0.0, 360.0), rng.uniform(0.1, 0.9),
                               rng.uniform(0.1, 0.8));
        b.noise_scale = rng.uniform(2.0, 14.0);
        scene.backdrop = b;
    }

    auto place = [&](RngStream& rng, AssetClass cls) {
        int variant = static_cast<int>(rng.uniform_int(0, assets.variant_count(cls) - 1));
        double m = cfg.dr.frustum_margin;
        double px = rng.uniform(m, 1.0 - m) * cfg.image_width;
        double py = rng.uniform(m, 1.0 - m) * cfg.image_height;
        double depth = rng.uniform(cfg.dr.depth_min, cfg.dr.depth_max);
        Vec3 center = cam.unproject(px, py, depth);
        double yaw = rng.uniform(0.0, 360.0);

        const auto& mesh = assets.mesh(cls, variant);
        Vec3 local_center = mesh.bounds().center();
        double yr = deg2rad(yaw);
        Vec3 rotated{local_center.x * std::cos(yr) - local_center.y * std::sin(yr),
                     local_center.x * std::sin(yr) + local_center.y * std::cos(yr),
                     local_center.z};

        ObjectInstance obj;
        obj.asset = assets.descriptor(cls, variant);
        obj.material = sample_material(rng, material_class_for(cls));
        obj.material.texture_class = TextureClass::NoiseTexture;
        obj.yaw_deg = yaw;
        obj.position = center - rotated;
        obj.owning_spline = -1;
        scene.objects.push_back(obj);
    };

    {
        auto rng = frng.stream("dr/vehicles");
        int n = static_cast<int>(cfg.dr.vehicle_count.sample_scalar(rng));
        for (int i = 0; i < n; ++i) place(rng, AssetClass::Car);
    }
    {
        auto rng = frng.stream("dr/distractors");
        static const AssetClass kDistractors[] = {
            AssetClass::Truck, AssetClass::Bicycle, AssetClass::Cyclist, AssetClass::Pedestrian,
            AssetClass::Building, AssetClass::House, AssetClass::Tree, AssetClass::RoadSign,
            AssetClass::StreetLight, AssetClass::Wall, AssetClass::Fence,
            AssetClass::FireHydrant, AssetClass::RecyclingBin, AssetClass::TelephonePole,
            AssetClass::TrafficLight, AssetClass::UtilityBox,
        };
        int n = static_cast<int>(cfg.dr.distractor_count.sample_scalar(rng));
        for (int i = 0; i < n; ++i)
            place(rng, kDistractors[rng.uniform_int(0, 15)]);
    }
    for (size_t i = 0; i < scene.objects.size(); ++i)
        scene.objects[i].instance_id = static_cast<uint16_t>(i + 1);

    {
        auto rng = frng.stream("post");
        scene.post.contrast_percent =
            cfg.ablation.no_high_contrast ? 100.0 : cfg.post.contrast_percent;
        double sat = cfg.post.saturation.sample_scalar(rng);
        scene.post.saturation = cfg.ablation.no_random_saturation ? 1.0 : sat;
    }
    return scene;
}

/// Camera for a scene's ego pose at the configured resolution.
inline Camera scene_camera(const SceneGraph& scene, int width, int height) {
    return Camera(scene.ego.position, scene.ego.yaw_deg, scene.ego.pitch_deg,
                  scene.globals.camera_fov_horizontal, width, height);
}

}  // namespace sdr
