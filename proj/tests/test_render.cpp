#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "sdr/rasterizer.hpp"
#include "sdr/scene.hpp"

namespace {

using sdr::Camera;
using sdr::Color3;
using sdr::DrawStyle;
using sdr::Lighting;
using sdr::PixelRect;
using sdr::RasterTarget;
using sdr::RenderBuffers;
using sdr::shade;
using sdr::SurfaceKind;
using sdr::TriangleMesh;
using sdr::Vec3;

TEST(Projection, PrincipalPoint) {
    Camera cam({0, 0, 0}, 0.0, 0.0, 90.0, 640, 480);
    // Forward axis point at 10 m lands on the image center.
    auto p = cam.project({10.0, 0.0, 0.0});
    ASSERT_TRUE(p.has_value());
    EXPECT_NEAR(p->x, cam.cx(), 1e-9);
    EXPECT_NEAR(p->y, cam.cy(), 1e-9);
    EXPECT_NEAR(p->depth, 10.0, 1e-12);
}

TEST(Projection, OffAxisPointMatchesFormula) {
    // fx = 500 requires fov with tan(fov/2) = 320/500.
    double fov = 2.0 * sdr::rad2deg(std::atan2(320.0, 500.0));
    Camera cam({0, 0, 0}, 0.0, 0.0, fov, 640, 480);
    ASSERT_NEAR(cam.fx(), 500.0, 1e-9);
    auto p = cam.project_cam({1.0, 0.0, 10.0});
    ASSERT_TRUE(p.has_value());
    EXPECT_NEAR(p->x, 370.0, 1e-9);  // 320 + 500 * (1/10)
    EXPECT_NEAR(p->y, 240.0, 1e-9);
    EXPECT_NEAR(p->depth, 10.0, 1e-12);
}

TEST(Projection, BehindCameraNotProjectable) {
    Camera cam({0, 0, 0}, 0.0, 0.0, 90.0, 640, 480);
    EXPECT_FALSE(cam.project_cam({0.0, 0.0, -1.0}).has_value());
    EXPECT_FALSE(cam.project_cam({0.0, 0.0, 0.05}).has_value());  // inside near plane
}

TEST(Projection, UnprojectRoundTrip) {
    Camera cam({3.0, -2.0, 1.6}, 25.0, -3.0, 80.0, 1248, 384);
    auto rng = sdr::make_stream(5, 0, "proj");
    for (int i = 0; i < 1000; ++i) {
        Vec3 c{rng.uniform(-20, 20), rng.uniform(-10, 10), rng.uniform(0.2, 120)};
        Vec3 world = cam.cam_to_world(c);
        auto p = cam.project(world);
        ASSERT_TRUE(p.has_value());
        Vec3 back = cam.unproject(p->x, p->y, p->depth);
        ASSERT_NEAR((back - world).norm(), 0.0, 1e-6);
    }
}

Lighting plain_sun(Vec3 to_sun, Color3 sun = {1, 1, 1}, Color3 ambient = {0, 0, 0}) {
    Lighting l;
    l.to_sun = to_sun.normalized();
    l.sun_direction = -l.to_sun;
    l.sun_rgb = sun;
    l.ambient_rgb = ambient;
    return l;
}

TEST(Shade, PerpendicularSunGivesBlack) {
    auto l = plain_sun({1, 0, 0});
    Color3 c = shade({0, 0, 1}, {0.5f, 0.5f, 0.5f}, 1.0f, 0.0f, l, {0, 0, 1});
    EXPECT_EQ(c.r, 0.0f);
    EXPECT_EQ(c.g, 0.0f);
    EXPECT_EQ(c.b, 0.0f);
}

TEST(Shade, FullCosineReturnsAlbedo) {
    // Normal pointing straight at the sun, unit white sun, no ambient/specular.
    auto l = plain_sun({0, 0, 1});
    Color3 c = shade({0, 0, 1}, {0.5f, 0.5f, 0.5f}, 1.0f, 0.0f, l, {0, 0, 1});
    EXPECT_NEAR(c.r, 0.5f, 1e-7);
    EXPECT_NEAR(c.g, 0.5f, 1e-7);
    EXPECT_NEAR(c.b, 0.5f, 1e-7);
}

TEST(Shade, CosineFalloffAt45Degrees) {
    auto l = plain_sun({1, 0, 1});
    Color3 c = shade({0, 0, 1}, {0.8f, 0.4f, 0.2f}, 1.0f, 0.0f, l, {0, 0, 1});
    float k = static_cast<float>(std::sqrt(2.0) / 2.0);
    EXPECT_NEAR(c.r, 0.8f * k, 1e-6);
    EXPECT_NEAR(c.g, 0.4f * k, 1e-6);
    EXPECT_NEAR(c.b, 0.2f * k, 1e-6);
}

TEST(Shade, EnergyBound) {
    auto rng = sdr::make_stream(8, 0, "shade");
    for (int i = 0; i < 2000; ++i) {
        Vec3 n = Vec3{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)}.normalized();
        Vec3 v = Vec3{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)}.normalized();
        auto l = plain_sun({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(0.1, 1)},
                           {1, 1, 1}, {0.2f, 0.2f, 0.2f});
        Color3 albedo{static_cast<float>(rng.uniform01()), static_cast<float>(rng.uniform01()),
                      static_cast<float>(rng.uniform01())};
        auto rough = static_cast<float>(rng.uniform01());
        auto metal = static_cast<float>(rng.uniform01());
        Color3 c = shade(n, albedo, rough, metal, l, v);
        float ks = (0.04f + 0.96f * metal) * (1.0f - rough);
        ASSERT_GE(c.r, 0.0f);
        ASSERT_LE(c.r, albedo.r * (0.2f + 1.0f) + ks + 1e-5f);
        ASSERT_LE(c.g, albedo.g * 1.2f + ks + 1e-5f);
        ASSERT_LE(c.b, albedo.b * 1.2f + ks + 1e-5f);
    }
}

TEST(ApplyPost, MidGrayIsContrastFixedPoint) {
    std::vector<Color3> px = {{0.5f, 0.5f, 0.5f}};
    sdr::apply_post(px, {321.0, 1.0});
    EXPECT_NEAR(px[0].r, 0.5f, 1e-7);
    EXPECT_NEAR(px[0].g, 0.5f, 1e-7);
}

TEST(ApplyPost, ContrastFormula) {
    std::vector<Color3> px = {{0.7f, 0.7f, 0.7f}};
    sdr::apply_post(px, {150.0, 1.0});
    EXPECT_NEAR(px[0].r, 0.8f, 1e-6);  // 0.5 + 0.2 * 1.5
}

TEST(ApplyPost, ZeroSaturationIsGrayscale) {
    std::vector<Color3> px = {{0.8f, 0.3f, 0.1f}, {0.2f, 0.9f, 0.5f}};
    sdr::apply_post(px, {100.0, 0.0});
    for (const auto& c : px) {
        EXPECT_EQ(c.r, c.g);
        EXPECT_EQ(c.g, c.b);
    }
}

TEST(ApplyPost, ClampsToUnitRange) {
    std::vector<Color3> px = {{0.95f, 0.02f, 0.5f}};
    sdr::apply_post(px, {400.0, 3.0});
    EXPECT_GE(px[0].r, 0.0f);
    EXPECT_LE(px[0].r, 1.0f);
    EXPECT_GE(px[0].g, 0.0f);
    EXPECT_LE(px[0].g, 1.0f);
}

// Screen-space quad as two camera-space triangles at a given depth.
TriangleMesh quad_mesh(const Camera& cam, double px0, double py0, double px1, double py1,
                       double depth) {
    TriangleMesh m;
    Vec3 a = cam.unproject(px0, py0, depth);
    Vec3 b = cam.unproject(px1, py0, depth);
    Vec3 c = cam.unproject(px1, py1, depth);
    Vec3 d = cam.unproject(px0, py1, depth);
    sdr::meshgen::add_quad(m, a, b, c, d);
    return m;
}

RenderBuffers raster_meshes(const Camera& cam,
                            const std::vector<std::pair<TriangleMesh, uint16_t>>& meshes) {
    RenderBuffers buf;
    buf.reset(cam.width(), cam.height());
    auto target = RasterTarget::of(buf);
    Lighting l = plain_sun({0.3, 0.2, 1.0}, {1, 1, 1}, {0.3f, 0.3f, 0.3f});
    for (const auto& [mesh, id] : meshes) {
        DrawStyle style;
        style.kind = SurfaceKind::Object;
        style.material.base_color = {0.5f, 0.5f, 0.5f};
        style.instance = id;
        sdr::render_mesh(target, cam, l, mesh, sdr::ObjectTransform{}, style,
                         PixelRect::full(buf.width, buf.height));
    }
    return buf;
}

TEST(Raster, SharedEdgePartition) {
    // Both triangles of a quad at one depth: every interior pixel covered by
    // exactly one triangle, so no pixel stays background and no depth fights.
    Camera cam({0, 0, 0}, 0.0, 0.0, 90.0, 160, 120);
    for (double jitter : {0.0, 0.25, 0.37}) {
        auto mesh = quad_mesh(cam, 20.0 + jitter, 15.0 + jitter, 100.0 + jitter, 90.0 + jitter,
                              10.0);
        auto buf = raster_meshes(cam, {{mesh, 7}});
        for (int y = 20; y < 85; ++y)
            for (int x = 25; x < 95; ++x)
                ASSERT_EQ(buf.instance[buf.idx(x, y)], 7) << x << "," << y;
    }
}

TEST(Raster, DiagonalSharedEdgeNoHoles) {
    Camera cam({0, 0, 0}, 0.0, 0.0, 90.0, 160, 120);
    // Rotated quads: split diagonals must not leak background pixels.
    for (int rot = 0; rot < 8; ++rot) {
        TriangleMesh m;
        double a = rot * 0.7;
        double cx = 80, cy = 60, r = 40;
        Vec3 p[4];
        for (int k = 0; k < 4; ++k) {
            double ang = a + k * sdr::kPi / 2.0;
            p[k] = cam.unproject(cx + r * std::cos(ang), cy + r * std::sin(ang), 12.0);
        }
        sdr::meshgen::add_quad(m, p[0], p[1], p[2], p[3]);
        auto buf = raster_meshes(cam, {{m, 3}});
        // The quad center region is robustly interior for any rotation.
        for (int y = 45; y < 75; ++y)
            for (int x = 65; x < 95; ++x)
                ASSERT_EQ(buf.instance[buf.idx(x, y)], 3) << "rot " << rot;
    }
}

TEST(Raster, ZBufferResolvesOverlap) {
    Camera cam({0, 0, 0}, 0.0, 0.0, 90.0, 200, 150);
    auto near_sq = quad_mesh(cam, 60, 40, 120, 100, 8.0);
    auto far_sq = quad_mesh(cam, 90, 70, 170, 140, 20.0);
    auto buf = raster_meshes(cam, {{near_sq, 1}, {far_sq, 2}});
    // Overlap region: near square must win everywhere.
    for (int y = 72; y < 98; ++y)
        for (int x = 92; x < 118; ++x)
            ASSERT_EQ(buf.instance[buf.idx(x, y)], 1);
    // Far square alone.
    EXPECT_EQ(buf.instance[buf.idx(150, 120)], 2);
    EXPECT_NEAR(buf.depth[buf.idx(150, 120)], 20.0, 1e-3);
    EXPECT_NEAR(buf.depth[buf.idx(70, 50)], 8.0, 1e-3);
    // Draw order must not matter.
    auto buf2 = raster_meshes(cam, {{far_sq, 2}, {near_sq, 1}});
    EXPECT_EQ(buf.instance, buf2.instance);
}

TEST(Raster, NearPlaneClipping) {
    Camera cam({0, 0, 0}, 0.0, 0.0, 90.0, 160, 120);
    TriangleMesh m;
    // Triangle straddling the near plane.
    sdr::meshgen::add_triangle(m, Vec3{5.0, -2.0, -1.0}, Vec3{5.0, 2.0, -1.0},
                               Vec3{-0.5, 0.0, 0.5});
    auto buf = raster_meshes(cam, {{m, 4}});
    int covered = 0;
    for (auto v : buf.instance) covered += v == 4 ? 1 : 0;
    EXPECT_GT(covered, 0);
}

const sdr::AssetLibrary& shared_assets() {
    static sdr::AssetLibrary lib;
    return lib;
}

sdr::AssemblyConfig tiny_config() {
    sdr::AssemblyConfig cfg;
    cfg.image_width = 312;
    cfg.image_height = 96;
    return cfg;
}

TEST(Render, EmptySceneIsAllSky) {
    auto cfg = tiny_config();
    sdr::SceneGraph scene;
    scene.mode = sdr::SceneMode::DR;
    scene.globals.camera_fov_horizontal = 90.0;
    scene.globals.sky_color = {0.4f, 0.6f, 0.9f};
    scene.globals.sun_elevation = 40.0;
    scene.globals.sun_color_temperature = 5800.0;
    scene.ego.position = {0, 0, 1.6};
    scene.post = {100.0, 1.0};
    // No backdrop, no objects.
    Camera cam = scene_camera(scene, cfg.image_width, cfg.image_height);
    auto light = make_lighting(scene.globals);
    RenderBuffers buf;
    sdr::render(scene, cam, light, shared_assets(), buf);
    auto d16 = sdr::depth_to_u16(buf);
    for (size_t i = 0; i < buf.instance.size(); ++i) {
        ASSERT_EQ(buf.instance[i], 0);
        ASSERT_TRUE(std::isinf(buf.depth[i]));
        ASSERT_EQ(d16[i], 65535);
    }
}

TEST(Render, SingleCarSceneHasExactlyTwoIds) {
    auto cfg = tiny_config();
    cfg.ranges.set("max_vehicles_per_lane", sdr::ParamRange::fixed(1));
    cfg.ranges.set("max_vehicles_total", sdr::ParamRange::fixed(1));
    cfg.placement.vehicle_station_max = 30.0;  // keep it close and visible
    cfg.placement.pedestrians_per_sidewalk = sdr::ParamRange::fixed(0);
    cfg.placement.cyclists_per_sidewalk = sdr::ParamRange::fixed(0);
    cfg.placement.buildings_per_stretch = sdr::ParamRange::fixed(0);
    cfg.placement.houses_per_stretch = sdr::ParamRange::fixed(0);
    cfg.placement.trees_per_stretch = sdr::ParamRange::fixed(0);
    cfg.placement.signs_per_stretch = sdr::ParamRange::fixed(0);
    cfg.placement.furniture_per_stretch = sdr::ParamRange::fixed(0);
    cfg.placement.trees_per_median = sdr::ParamRange::fixed(0);
    cfg.placement.signs_per_median = sdr::ParamRange::fixed(0);
    cfg.ablation.no_multiple_pose = true;

    int frames_with_car = 0;
    for (uint32_t f = 0; f < 5 && frames_with_car == 0; ++f) {
        auto scene = assemble_scene(sdr::FrameRng{77, f}, cfg, shared_assets());
        if (scene.objects.empty()) continue;
        Camera cam = scene_camera(scene, cfg.image_width, cfg.image_height);
        auto light = make_lighting(scene.globals);
        RenderBuffers buf;
        sdr::render(scene, cam, light, shared_assets(), buf);
        std::set<uint16_t> ids(buf.instance.begin(), buf.instance.end());
        if (ids.count(1)) {
            frames_with_car++;
            EXPECT_EQ(ids.size(), 2u);  // background + the car
        }
    }
    EXPECT_GT(frames_with_car, 0);
}

TEST(Render, DeterministicBuffers) {
    auto cfg = tiny_config();
    auto scene = assemble_scene(sdr::FrameRng{123, 4}, cfg, shared_assets());
    Camera cam = scene_camera(scene, cfg.image_width, cfg.image_height);
    auto light = make_lighting(scene.globals);
    RenderBuffers a, b;
    sdr::render(scene, cam, light, shared_assets(), a);
    sdr::render(scene, cam, light, shared_assets(), b);
    ASSERT_EQ(a.depth.size(), b.depth.size());
    for (size_t i = 0; i < a.depth.size(); ++i) {
        ASSERT_EQ(a.instance[i], b.instance[i]);
        if (!std::isinf(a.depth[i]) || !std::isinf(b.depth[i])) {
            ASSERT_EQ(a.depth[i], b.depth[i]);
        }
        ASSERT_EQ(a.color[i].r, b.color[i].r);
        ASSERT_EQ(a.color[i].g, b.color[i].g);
        ASSERT_EQ(a.color[i].b, b.color[i].b);
    }
}

TEST(Render, InstancePixelsHaveFiniteDepth) {
    auto cfg = tiny_config();
    for (uint32_t f = 0; f < 5; ++f) {
        auto scene = assemble_scene(sdr::FrameRng{55, f}, cfg, shared_assets());
        Camera cam = scene_camera(scene, cfg.image_width, cfg.image_height);
        auto light = make_lighting(scene.globals);
        RenderBuffers buf;
        sdr::render(scene, cam, light, shared_assets(), buf);
        for (size_t i = 0; i < buf.instance.size(); ++i) {
            if (buf.instance[i] > 0) {
                ASSERT_FALSE(std::isinf(buf.depth[i]));
            }
        }
    }
}

TEST(Render, DrSceneBackdropCoversFrame) {
    auto cfg = tiny_config();
    auto scene = assemble_dr_scene(sdr::FrameRng{31, 0}, cfg, shared_assets());
    Camera cam = scene_camera(scene, cfg.image_width, cfg.image_height);
    auto light = make_lighting(scene.globals);
    RenderBuffers buf;
    sdr::render(scene, cam, light, shared_assets(), buf);
    for (size_t i = 0; i < buf.depth.size(); ++i)
        ASSERT_FALSE(std::isinf(buf.depth[i]));  // backdrop or object everywhere
}

TEST(Lighting, KelvinMapSanity) {
    auto warm = sdr::kelvin_to_rgb(2700.0);
    auto day = sdr::kelvin_to_rgb(6600.0);
    auto cool = sdr::kelvin_to_rgb(12000.0);
    EXPECT_GT(warm.r, warm.b);          // incandescent leans red
    EXPECT_NEAR(day.r, 1.0f, 0.02f);    // daylight is near white
    EXPECT_NEAR(day.g, 1.0f, 0.05f);
    EXPECT_NEAR(day.b, 1.0f, 0.05f);
    EXPECT_LT(cool.r, cool.b + 0.05f);  // blue sky leaning
}

}  // namespace
