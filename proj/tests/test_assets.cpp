#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

#include "sdr/assets.hpp"
#include "sdr/material.hpp"

namespace {

using sdr::AssetClass;
using sdr::AssetLibrary;
using sdr::instantiate_asset;
using sdr::make_descriptor;
using sdr::make_stream;
using sdr::MaterialClass;
using sdr::sample_material;

TEST(Assets, BoundingBoxMatchesNominalDims) {
    for (AssetClass cls : sdr::kAllAssetClasses) {
        int n = std::min(sdr::default_variant_count(cls), 10);
        for (int v = 0; v < n; ++v) {
            auto d = make_descriptor(cls, v);
            auto mesh = instantiate_asset(d);
            auto b = mesh.bounds();
            auto ext = b.extent();
            EXPECT_LE(std::fabs(ext.x - d.nominal_dims.x), 0.01 * d.nominal_dims.x + 1e-9)
                << sdr::to_string(cls) << " v" << v;
            EXPECT_LE(std::fabs(ext.y - d.nominal_dims.y), 0.01 * d.nominal_dims.y + 1e-9)
                << sdr::to_string(cls) << " v" << v;
            EXPECT_LE(std::fabs(ext.z - d.nominal_dims.z), 0.01 * d.nominal_dims.z + 1e-9)
                << sdr::to_string(cls) << " v" << v;
            EXPECT_NEAR(b.lo.z, 0.0, 1e-9) << "meshes sit on the ground plane";
        }
    }
}

TEST(Assets, DeterministicAcrossCalls) {
    for (AssetClass cls : {AssetClass::Car, AssetClass::Tree, AssetClass::Pedestrian}) {
        auto a = instantiate_asset(make_descriptor(cls, 3));
        auto b = instantiate_asset(make_descriptor(cls, 3));
        ASSERT_EQ(a.vertices.size(), b.vertices.size());
        ASSERT_EQ(a.triangles, b.triangles);
        for (size_t i = 0; i < a.vertices.size(); ++i) {
            ASSERT_EQ(a.vertices[i].position.x, b.vertices[i].position.x);
            ASSERT_EQ(a.vertices[i].position.y, b.vertices[i].position.y);
            ASSERT_EQ(a.vertices[i].position.z, b.vertices[i].position.z);
        }
    }
}

TEST(Assets, AllCarVariantsAreDistinct) {
    std::set<std::array<long, 3>> dims;
    for (int v = 0; v < 74; ++v) {
        auto d = make_descriptor(AssetClass::Car, v);
        dims.insert({std::lround(d.nominal_dims.x * 1e6), std::lround(d.nominal_dims.y * 1e6),
                     std::lround(d.nominal_dims.z * 1e6)});
    }
    EXPECT_EQ(dims.size(), 74u);
}

TEST(Assets, TriangleBudgetAndValidNormals) {
    for (AssetClass cls : sdr::kAllAssetClasses) {
        int n = std::min(sdr::default_variant_count(cls), 5);
        for (int v = 0; v < n; ++v) {
            auto mesh = instantiate_asset(make_descriptor(cls, v));
            EXPECT_GT(mesh.triangles.size(), 0u);
            EXPECT_LT(mesh.triangles.size(), 2000u) << sdr::to_string(cls);
            for (const auto& vert : mesh.vertices)
                ASSERT_NEAR(vert.normal.norm(), 1.0, 1e-6) << sdr::to_string(cls);
            for (const auto& t : mesh.triangles)
                for (uint32_t idx : t) ASSERT_LT(idx, mesh.vertices.size());
        }
    }
}

TEST(AssetLibrary, DefaultCountsMirrorCatalog) {
    AssetLibrary lib;
    EXPECT_EQ(lib.variant_count(AssetClass::Car), 74);
    EXPECT_EQ(lib.variant_count(AssetClass::Truck), 13);
    EXPECT_EQ(lib.variant_count(AssetClass::Bicycle), 5);
    EXPECT_EQ(lib.variant_count(AssetClass::Building), 41);
    EXPECT_EQ(lib.variant_count(AssetClass::House), 87);
    EXPECT_EQ(lib.variant_count(AssetClass::Tree), 24);
    EXPECT_EQ(lib.variant_count(AssetClass::Pedestrian), 20);
    EXPECT_EQ(lib.variant_count(AssetClass::RoadSign), 100);
    EXPECT_EQ(lib.mesh(AssetClass::Car, 0).triangles.size(),
              instantiate_asset(make_descriptor(AssetClass::Car, 0)).triangles.size());
}

TEST(AssetLibrary, CountOverridesApply) {
    AssetLibrary lib({{AssetClass::Car, 5}});
    EXPECT_EQ(lib.variant_count(AssetClass::Car), 5);
    EXPECT_THROW(AssetLibrary({{AssetClass::Car, 0}}), sdr::ConfigError);
}

TEST(Materials, VehiclePaletteFrequencies) {
    auto rng = make_stream(10, 0, "materials");
    std::map<std::string, int> counts;
    const auto& palette = sdr::vehicle_paint_palette();
    const int n = 9000;
    for (int i = 0; i < n; ++i) {
        auto m = sample_material(rng, MaterialClass::Vehicle);
        for (const auto& p : palette) {
            if (p.rgb.r == m.base_color.r && p.rgb.g == m.base_color.g &&
                p.rgb.b == m.base_color.b) {
                counts[p.name]++;
                break;
            }
        }
    }
    ASSERT_EQ(counts.size(), 9u);
    for (const auto& [name, c] : counts) {
        double freq = static_cast<double>(c) / n;
        EXPECT_GE(freq, 0.098) << name;
        EXPECT_LE(freq, 0.124) << name;
    }
}

TEST(Materials, ZeroLightnessDeltaKeepsBaseColor) {
    auto rng = make_stream(11, 0, "materials");
    auto m = sample_material(rng, MaterialClass::Vehicle);
    m.lightness_delta = 0.0f;
    auto eff = m.effective_base();
    EXPECT_EQ(eff.r, m.base_color.r);
    EXPECT_EQ(eff.g, m.base_color.g);
    EXPECT_EQ(eff.b, m.base_color.b);
}

TEST(Materials, PedestrianColorsNotLimitedToPalette) {
    auto rng = make_stream(12, 0, "materials");
    const auto& palette = sdr::vehicle_paint_palette();
    int off_palette = 0;
    for (int i = 0; i < 100; ++i) {
        auto m = sample_material(rng, MaterialClass::Pedestrian);
        bool on = false;
        for (const auto& p : palette)
            on = on || (p.rgb.r == m.base_color.r && p.rgb.g == m.base_color.g &&
                        p.rgb.b == m.base_color.b);
        if (!on) off_palette++;
    }
    EXPECT_GT(off_palette, 90);
}

TEST(Materials, LightnessDeltaWithinRange) {
    auto rng = make_stream(13, 0, "materials");
    for (int i = 0; i < 1000; ++i) {
        auto m = sample_material(rng, MaterialClass::Vehicle);
        ASSERT_GE(m.lightness_delta, -0.2f);
        ASSERT_LE(m.lightness_delta, 0.2f);
        ASSERT_GE(m.roughness, 0.0f);
        ASSERT_LE(m.roughness, 1.0f);
        ASSERT_GE(m.metallic, 0.0f);
        ASSERT_LE(m.metallic, 1.0f);
    }
}

}  // namespace
