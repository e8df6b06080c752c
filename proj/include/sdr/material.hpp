#pragma once

#include <string>
#include <vector>

#include "sdr/color.hpp"
#include "sdr/rng.hpp"

namespace sdr {

/// How the shader derives per-pixel albedo from a surface's uv attributes.
enum class TextureClass {
    Flat,           // constant albedo
    Asphalt,        // uv = (station, lateral) meters
    Grass,
    Concrete,
    Dirt,
    FacadeWindows,  // uv = (along-wall, up-wall) meters; window grid
    CarPaint,       // uv.x zone id: 0 body, 1 glass, 2 tire
    SignPlate,      // uv.x zone id: 0 pole, 1 plate
    TreeZones,      // uv.x zone id: 0 trunk, 1 canopy
    NoiseTexture,   // multi-octave noise, used by the DR mode
    ImageTexture,   // uv in [0,1]^2 over a raster image (DR backdrop)
};

struct Material {
    Color3 base_color{0.5f, 0.5f, 0.5f};
    float lightness_delta = 0.0f;  // [-0.2, 0.2], applied multiplicatively
    float roughness = 0.8f;
    float metallic = 0.0f;
    TextureClass texture_class = TextureClass::Flat;

    /// Base color with the lightness variation applied.
    Color3 effective_base() const {
        return (base_color * (1.0f + lightness_delta)).clamped();
    }
};

struct PaintColor {
    std::string name;
    Color3 rgb;
};

/// The nine standard vehicle paint colors; lightness variation is layered on top.
inline const std::vector<PaintColor>& vehicle_paint_palette() {
    static const std::vector<PaintColor> palette = {
        {"white", {0.91f, 0.91f, 0.89f}},  {"black", {0.04f, 0.04f, 0.045f}},
        {"silver", {0.72f, 0.73f, 0.75f}}, {"gray", {0.42f, 0.43f, 0.44f}},
        {"red", {0.62f, 0.05f, 0.06f}},    {"blue", {0.06f, 0.16f, 0.52f}},
        {"green", {0.06f, 0.32f, 0.12f}},  {"beige", {0.74f, 0.68f, 0.54f}},
        {"yellow", {0.83f, 0.68f, 0.07f}},
    };
    return palette;
}

enum class MaterialClass { Vehicle, Pedestrian, Foliage, Structure, SignPlate, Furniture };

/// Draw a randomized material for an asset class. Vehicles pick from the
/// 9-color palette; everything else draws free-form colors.
inline Material sample_material(RngStream& rng, MaterialClass cls,
                                const std::vector<PaintColor>& palette = vehicle_paint_palette()) {
    Material m;
    switch (cls) {
        case MaterialClass::Vehicle: {
            auto idx = static_cast<size_t>(
                rng.uniform_int(0, static_cast<int64_t>(palette.size()) - 1));
            m.base_color = palette[idx].rgb;
            m.lightness_delta = static_cast<float>(rng.uniform(-0.2, 0.2));
            m.roughness = static_cast<float>(rng.uniform(0.15, 0.6));
            m.metallic = static_cast<float>(rng.uniform(0.3, 0.9));
            m.texture_class = TextureClass::CarPaint;
            break;
        }
        case MaterialClass::Pedestrian: {
            m.base_color = hsv_to_rgb(rng.uniform(0.0, 360.0), rng.uniform(0.2, 0.9),
                                      rng.uniform(0.15, 0.85));
            m.lightness_delta = static_cast<float>(rng.uniform(-0.2, 0.2));
            m.roughness = static_cast<float>(rng.uniform(0.7, 1.0));
            m.metallic = 0.0f;
            m.texture_class = TextureClass::Flat;
            break;
        }
        case MaterialClass::Foliage: {
            m.base_color = hsv_to_rgb(rng.uniform(70.0, 140.0), rng.uniform(0.45, 0.8),
                                      rng.uniform(0.2, 0.5));
            m.lightness_delta = static_cast<float>(rng.uniform(-0.15, 0.15));
            m.roughness = 1.0f;
            m.metallic = 0.0f;
            m.texture_class = TextureClass::TreeZones;
            break;
        }
        case MaterialClass::Structure: {
            // Facade tints: off-whites, tans, brick reds, grays.
            double h = rng.bernoulli(0.4) ? rng.uniform(10.0, 45.0) : rng.uniform(0.0, 360.0);
            m.base_color = hsv_to_rgb(h, rng.uniform(0.02, 0.45), rng.uniform(0.35, 0.9));
            m.lightness_delta = static_cast<float>(rng.uniform(-0.15, 0.15));
            m.roughness = static_cast<float>(rng.uniform(0.75, 1.0));
            m.metallic = 0.0f;
            m.texture_class = TextureClass::FacadeWindows;
            break;
        }
        case MaterialClass::SignPlate: {
            static const Color3 plate_colors[] = {
                {0.75f, 0.08f, 0.08f}, {0.08f, 0.2f, 0.6f},  {0.85f, 0.7f, 0.05f},
                {0.88f, 0.88f, 0.88f}, {0.05f, 0.45f, 0.2f},
            };
            m.base_color = plate_colors[rng.uniform_int(0, 4)];
            m.lightness_delta = static_cast<float>(rng.uniform(-0.1, 0.1));
            m.roughness = static_cast<float>(rng.uniform(0.25, 0.6));
            m.metallic = static_cast<float>(rng.uniform(0.0, 0.4));
            m.texture_class = TextureClass::SignPlate;
            break;
        }
        case MaterialClass::Furniture: {
            m.base_color = hsv_to_rgb(rng.uniform(0.0, 360.0), rng.uniform(0.0, 0.5),
                                      rng.uniform(0.15, 0.75));
            m.lightness_delta = static_cast<float>(rng.uniform(-0.15, 0.15));
            m.roughness = static_cast<float>(rng.uniform(0.4, 0.95));
            m.metallic = static_cast<float>(rng.uniform(0.0, 0.6));
            m.texture_class = TextureClass::Flat;
            break;
        }
    }
    return m;
}

}  // namespace sdr
