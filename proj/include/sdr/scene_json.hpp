#pragma once

#include <json.hpp>

#include "sdr/scene.hpp"

namespace sdr {

/// Canonical JSON dump of a scene graph (geometry, appearance, objects).
/// Used by determinism and independence checks; not a file format.
inline nlohmann::json scene_to_json(const SceneGraph& scene) {
    using nlohmann::json;
    json j;
    j["mode"] = to_string(scene.mode);
    j["scenario"] = scene.scenario.name;
    json g;
    g["sun_azimuth"] = scene.globals.sun_azimuth;
    g["sun_elevation"] = scene.globals.sun_elevation;
    g["sun_color_temperature"] = scene.globals.sun_color_temperature;
    g["sun_intensity"] = scene.globals.sun_intensity;
    g["sky_color"] = {scene.globals.sky_color.r, scene.globals.sky_color.g,
                      scene.globals.sky_color.b};
    g["cloud_density"] = scene.globals.cloud_density;
    g["cloud_seed"] = scene.globals.cloud_seed;
    g["camera"] = {scene.globals.camera_yaw, scene.globals.camera_pitch,
                   scene.globals.camera_fov_horizontal, scene.globals.camera_height};
    g["lane_count"] = scene.globals.lane_count;
    g["widths"] = {scene.globals.lane_width, scene.globals.median_width,
                   scene.globals.sidewalk_width, scene.globals.gutter_width,
                   scene.globals.side_stretch_width};
    j["globals"] = g;

    j["ego"] = {{"lane", scene.ego.lane_spline_index},
                {"station", scene.ego.station},
                {"position", {scene.ego.position.x, scene.ego.position.y, scene.ego.position.z}},
                {"yaw", scene.ego.yaw_deg},
                {"pitch", scene.ego.pitch_deg}};
    j["post"] = {{"contrast", scene.post.contrast_percent},
                 {"saturation", scene.post.saturation}};

    j["splines"] = json::array();
    for (const auto& s : scene.splines) {
        json js;
        js["kind"] = to_string(s.kind);
        js["lane_index"] = s.lane_index;
        js["offset"] = s.lateral_offset_center;
        js["width"] = s.width;
        js["surface"] = {{"texture", static_cast<int>(s.surface.texture)},
                         {"color", {s.surface.base_color.r, s.surface.base_color.g,
                                    s.surface.base_color.b}},
                         {"darkness", s.surface.darkness},
                         {"roughness", s.surface.roughness}};
        js["imperfections"] = json::array();
        for (const auto& imp : s.imperfections)
            js["imperfections"].push_back({{"kind", to_string(imp.kind)},
                                           {"station", imp.station},
                                           {"lateral", imp.lateral},
                                           {"extent", imp.extent},
                                           {"intensity", imp.intensity}});
        j["splines"].push_back(js);
    }

    j["objects"] = json::array();
    for (const auto& o : scene.objects) {
        json jo;
        jo["id"] = o.instance_id;
        jo["class"] = to_string(o.asset.cls);
        jo["variant"] = o.asset.variant_id;
        jo["position"] = {o.position.x, o.position.y, o.position.z};
        jo["yaw"] = o.yaw_deg;
        jo["spline"] = o.owning_spline;
        jo["station"] = o.station;
        jo["lateral"] = o.lateral;
        jo["material"] = {{"color", {o.material.base_color.r, o.material.base_color.g,
                                     o.material.base_color.b}},
                          {"lightness_delta", o.material.lightness_delta},
                          {"roughness", o.material.roughness},
                          {"metallic", o.material.metallic},
                          {"texture", static_cast<int>(o.material.texture_class)}};
        j["objects"].push_back(jo);
    }
    return j;
}

}  // namespace sdr
