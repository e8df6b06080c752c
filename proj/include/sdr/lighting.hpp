#pragma once

#include <cmath>

#include "sdr/color.hpp"
#include "sdr/globals.hpp"
#include "sdr/math.hpp"
#include "sdr/noise.hpp"

namespace sdr {

struct Lighting {
    Vec3 to_sun{0.0, 0.0, 1.0};   // unit vector toward the sun
    Vec3 sun_direction{0.0, 0.0, -1.0};  // light travel direction
    Color3 sun_rgb{1.0f, 1.0f, 1.0f};
    Color3 ambient_rgb{0.3f, 0.3f, 0.3f};
    Color3 sky_color{0.5f, 0.7f, 0.9f};
    double cloud_density = 0.0;
    uint32_t cloud_seed = 0;
};

inline Lighting make_lighting(const GlobalParams& g, double ambient_strength = 0.45) {
    Lighting l;
    double az = deg2rad(g.sun_azimuth), el = deg2rad(g.sun_elevation);
    l.to_sun = {std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
    l.sun_direction = -l.to_sun;
    // Below-horizon sun only leaves ambient light.
    double horizon = clamp(std::sin(el) * 8.0 + 0.15, 0.0, 1.0);
    l.sun_rgb = kelvin_to_rgb(g.sun_color_temperature) *
                static_cast<float>(g.sun_intensity * horizon);
    l.ambient_rgb = g.sky_color * static_cast<float>(ambient_strength);
    l.sky_color = g.sky_color;
    l.cloud_density = g.cloud_density;
    l.cloud_seed = g.cloud_seed;
    return l;
}

/// One-lobe shading: Lambert diffuse plus a Blinn-Phong specular whose
/// exponent comes from roughness and whose tint comes from metallic.
/// Two-sided: the normal is flipped toward the viewer.
inline Color3 shade(Vec3 normal, Color3 albedo, float roughness, float metallic,
                    const Lighting& light, Vec3 view_dir) {
    if (normal.dot(view_dir) < 0.0) normal = -normal;
    double diff = std::max(0.0, normal.dot(light.to_sun));
    Color3 c = albedo * (light.ambient_rgb + light.sun_rgb * static_cast<float>(diff));

    float ks = (0.04f + 0.96f * metallic) * (1.0f - roughness);
    if (ks > 0.0f && diff > 0.0) {
        Vec3 h = (light.to_sun + view_dir).normalized();
        double nh = std::max(0.0, normal.dot(h));
        double shininess = std::exp2(1.0 + 7.0 * (1.0 - roughness));
        auto spec = static_cast<float>(std::pow(nh, shininess));
        Color3 tint = lerp(Color3{1.0f, 1.0f, 1.0f}, albedo, metallic);
        c += tint * light.sun_rgb * (ks * spec);
    }
    return c;
}

/// Sky radiance along a world-space ray: vertical gradient, cloud field from
/// seeded value noise, and a small sun glow.
inline Color3 sky_radiance(Vec3 dir, const Lighting& light) {
    Color3 horizon = lerp(light.sky_color, Color3{0.92f, 0.93f, 0.95f}, 0.55f);
    double t = clamp(dir.z, 0.0, 1.0);
    Color3 c = lerp(horizon, light.sky_color, static_cast<float>(std::pow(t, 0.45)));
    if (dir.z < 0.0) c = horizon * 0.85f;

    if (dir.z > 0.015 && light.cloud_density > 0.0) {
        auto px = static_cast<float>(dir.x / (dir.z + 0.18));
        auto py = static_cast<float>(dir.y / (dir.z + 0.18));
        float n = fbm(px * 0.5f, py * 0.5f, light.cloud_seed, 3);
        auto cover_lo = static_cast<float>(1.05 - 1.1 * light.cloud_density);
        float cover = clamp((n - cover_lo) / 0.22f, 0.0f, 1.0f);
        cover *= clamp(static_cast<float>(dir.z * 7.0), 0.0f, 1.0f);
        Color3 cloud = lerp(Color3{0.94f, 0.94f, 0.95f}, light.sun_rgb, 0.15f);
        c = lerp(c, cloud, cover);
    }
    double glow = std::pow(std::max(0.0, dir.dot(light.to_sun)), 220.0);
    c += light.sun_rgb * static_cast<float>(glow * 0.7);
    return c;
}

}  // namespace sdr
