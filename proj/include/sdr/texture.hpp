#pragma once

#include <cmath>

#include "sdr/image_io.hpp"
#include "sdr/material.hpp"
#include "sdr/noise.hpp"
#include "sdr/road.hpp"

namespace sdr {

namespace texdetail {

inline float fract(float x) { return x - std::floor(x); }

inline float imperfection_darkening(const std::vector<Imperfection>& imps, double s, double u) {
    float factor = 1.0f;
    for (const auto& imp : imps) {
        double ds = s - imp.station;
        if (std::fabs(ds) > imp.extent) continue;
        double du = u - imp.lateral;
        switch (imp.kind) {
            case Imperfection::Kind::Pothole: {
                double rx = imp.extent / 2.0, ry = imp.extent / 2.5;
                double d = (ds / rx) * (ds / rx) + (du / ry) * (du / ry);
                if (d < 1.0)
                    factor *= 1.0f - static_cast<float>(0.75 * imp.intensity * (1.0 - d));
                break;
            }
            case Imperfection::Kind::Crack: {
                double half = imp.extent / 2.0;
                if (std::fabs(ds) > half) break;
                double wobble =
                    (value_noise(static_cast<float>(s * 1.7), 0.0f,
                                 static_cast<uint32_t>(imp.station * 37.0)) - 0.5) *
                    0.3 * imp.extent;
                double width = 0.04 + 0.02 * imp.extent;
                if (std::fabs(du - wobble) < width)
                    factor *= 1.0f - static_cast<float>(0.8 * imp.intensity);
                break;
            }
            case Imperfection::Kind::OilSpill: {
                double r = imp.extent / 2.0;
                double d = (ds * ds + du * du) / (r * r);
                if (d < 1.0)
                    factor *= 1.0f - static_cast<float>(0.55 * imp.intensity * (1.0 - d * d));
                break;
            }
        }
    }
    return factor;
}

}  // namespace texdetail

/// Per-pixel albedo of a road strip at (station s, lateral u from strip center).
inline Color3 strip_albedo(const ContextSpline& strip, double s, double u) {
    const auto& surf = strip.surface;
    auto sf = static_cast<float>(s);
    auto uf = static_cast<float>(u);
    Color3 c = surf.base_color;
    switch (surf.texture) {
        case TextureClass::Asphalt: {
            float coarse = value_noise(sf * 0.33f, uf * 0.33f, 11u);
            float fine = value_noise(sf * 5.1f, uf * 5.1f, 12u);
            c = c * (0.86f + 0.22f * coarse) * (0.94f + 0.12f * fine);
            if (strip.kind == StripKind::Lane) {
                // Edge markings: dashed white bands near the strip borders.
                double edge = strip.width / 2.0 - 0.25;
                if (std::fabs(u) > edge && std::fmod(s, 4.0) < 2.6) {
                    float wear = 0.55f + 0.35f * value_noise(sf * 1.3f, uf * 8.0f, 13u);
                    c = lerp(c, Color3{0.85f, 0.85f, 0.82f}, wear);
                }
            }
            break;
        }
        case TextureClass::Grass: {
            float patches = fbm(sf * 0.17f, uf * 0.17f, 21u, 2);
            float blades = value_noise(sf * 7.0f, uf * 7.0f, 22u);
            c = c * (0.72f + 0.5f * patches) * (0.9f + 0.2f * blades);
            break;
        }
        case TextureClass::Concrete: {
            float n = value_noise(sf * 1.1f, uf * 1.1f, 31u);
            c = c * (0.9f + 0.18f * n);
            if (texdetail::fract(sf / 2.5f) < 0.025f) c = c * 0.8f;  // expansion joints
            break;
        }
        case TextureClass::Dirt: {
            float n = fbm(sf * 0.6f, uf * 0.6f, 41u, 3);
            c = c * (0.78f + 0.4f * n);
            break;
        }
        default:
            break;
    }
    if (!strip.imperfections.empty())
        c = c * texdetail::imperfection_darkening(strip.imperfections, s, u);
    return c;
}

/// Per-pixel albedo of an object. uv semantics depend on the texture class;
/// `world` supplies spatial variation for noise textures.
inline Color3 object_albedo(const Material& mat, double u, double v, Vec3 world) {
    Color3 base = mat.effective_base();
    switch (mat.texture_class) {
        case TextureClass::Flat:
            return base;
        case TextureClass::CarPaint:
            if (u >= 1.5) return {0.035f, 0.035f, 0.04f};           // tires
            if (u >= 0.5) return {0.10f, 0.12f, 0.16f};             // glass
            return base;
        case TextureClass::SignPlate:
            if (u < 0.5) return {0.45f, 0.46f, 0.48f};              // pole
            return base;
        case TextureClass::TreeZones:
            if (u < 0.5) return {0.23f, 0.16f, 0.10f};              // trunk
            return base;
        case TextureClass::FacadeWindows: {
            if (v < -0.5) return base * 0.38f;  // roof
            auto fu = texdetail::fract(static_cast<float>(u) / 2.2f);
            auto fv = texdetail::fract(static_cast<float>(v) / 3.0f);
            auto cell_u = static_cast<int32_t>(std::floor(u / 2.2));
            auto cell_v = static_cast<int32_t>(std::floor(v / 3.0));
            if (fu > 0.28f && fu < 0.72f && fv > 0.3f && fv < 0.78f) {
                float g = 0.7f + 0.6f * lattice_hash(cell_u, cell_v, 77u);
                return Color3{0.09f, 0.11f, 0.15f} * g;
            }
            float walln = value_noise(static_cast<float>(u) * 0.9f,
                                      static_cast<float>(v) * 0.9f, 78u);
            return base * (0.92f + 0.16f * walln);
        }
        case TextureClass::NoiseTexture: {
            float scale = 0.15f + luma(base) * 0.55f;  // per-object frequency variety
            float n = fbm(static_cast<float>(world.x + 1.7 * world.z) * scale,
                          static_cast<float>(world.y - 0.9 * world.z) * scale, 91u, 3);
            Color3 other{1.0f - base.r * 0.85f, 1.0f - base.g * 0.85f, 1.0f - base.b * 0.85f};
            return lerp(base, other, n);
        }
        case TextureClass::ImageTexture:
            return base;  // image-backed surfaces are sampled by the rasterizer
        default:
            return base;
    }
}

}  // namespace sdr
