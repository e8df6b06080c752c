#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sdr/error.hpp"
#include "sdr/material.hpp"
#include "sdr/mesh.hpp"
#include "sdr/rng.hpp"

namespace sdr {

enum class AssetClass {
    Car, Truck, Bicycle, Cyclist, Pedestrian, Building, House, Tree, RoadSign,
    StreetLight, Wall, Fence, FireHydrant, RecyclingBin, TelephonePole, TrafficLight,
    UtilityBox,
};

inline constexpr AssetClass kAllAssetClasses[] = {
    AssetClass::Car, AssetClass::Truck, AssetClass::Bicycle, AssetClass::Cyclist,
    AssetClass::Pedestrian, AssetClass::Building, AssetClass::House, AssetClass::Tree,
    AssetClass::RoadSign, AssetClass::StreetLight, AssetClass::Wall, AssetClass::Fence,
    AssetClass::FireHydrant, AssetClass::RecyclingBin, AssetClass::TelephonePole,
    AssetClass::TrafficLight, AssetClass::UtilityBox,
};

inline const char* to_string(AssetClass c) {
    switch (c) {
        case AssetClass::Car: return "car";
        case AssetClass::Truck: return "truck";
        case AssetClass::Bicycle: return "bicycle";
        case AssetClass::Cyclist: return "cyclist";
        case AssetClass::Pedestrian: return "pedestrian";
        case AssetClass::Building: return "building";
        case AssetClass::House: return "house";
        case AssetClass::Tree: return "tree";
        case AssetClass::RoadSign: return "road_sign";
        case AssetClass::StreetLight: return "street_light";
        case AssetClass::Wall: return "wall";
        case AssetClass::Fence: return "fence";
        case AssetClass::FireHydrant: return "fire_hydrant";
        case AssetClass::RecyclingBin: return "recycling_bin";
        case AssetClass::TelephonePole: return "telephone_pole";
        case AssetClass::TrafficLight: return "traffic_light";
        case AssetClass::UtilityBox: return "utility_box";
    }
    return "?";
}

/// Label-file type string (KITTI style, CamelCase).
inline const char* label_type_name(AssetClass c) {
    switch (c) {
        case AssetClass::Car: return "Car";
        case AssetClass::Truck: return "Truck";
        case AssetClass::Bicycle: return "Bicycle";
        case AssetClass::Cyclist: return "Cyclist";
        case AssetClass::Pedestrian: return "Pedestrian";
        case AssetClass::Building: return "Building";
        case AssetClass::House: return "House";
        case AssetClass::Tree: return "Tree";
        case AssetClass::RoadSign: return "RoadSign";
        case AssetClass::StreetLight: return "StreetLight";
        case AssetClass::Wall: return "Wall";
        case AssetClass::Fence: return "Fence";
        case AssetClass::FireHydrant: return "FireHydrant";
        case AssetClass::RecyclingBin: return "RecyclingBin";
        case AssetClass::TelephonePole: return "TelephonePole";
        case AssetClass::TrafficLight: return "TrafficLight";
        case AssetClass::UtilityBox: return "UtilityBox";
    }
    return "?";
}

inline MaterialClass material_class_for(AssetClass c) {
    switch (c) {
        case AssetClass::Car:
        case AssetClass::Truck: return MaterialClass::Vehicle;
        case AssetClass::Bicycle:
        case AssetClass::Cyclist:
        case AssetClass::Pedestrian: return MaterialClass::Pedestrian;
        case AssetClass::Tree: return MaterialClass::Foliage;
        case AssetClass::Building:
        case AssetClass::House: return MaterialClass::Structure;
        case AssetClass::RoadSign: return MaterialClass::SignPlate;
        default: return MaterialClass::Furniture;
    }
}

/// Default variant counts per class (model-library sizes).
inline int default_variant_count(AssetClass c) {
    switch (c) {
        case AssetClass::Car: return 74;
        case AssetClass::Truck: return 13;
        case AssetClass::Bicycle: return 5;
        case AssetClass::Cyclist: return 5;
        case AssetClass::Pedestrian: return 20;
        case AssetClass::Building: return 41;
        case AssetClass::House: return 87;
        case AssetClass::Tree: return 24;
        case AssetClass::RoadSign: return 100;
        case AssetClass::StreetLight: return 2;
        case AssetClass::Wall: return 2;
        case AssetClass::Fence: return 2;
        case AssetClass::FireHydrant: return 1;
        case AssetClass::RecyclingBin: return 2;
        case AssetClass::TelephonePole: return 1;
        case AssetClass::TrafficLight: return 2;
        case AssetClass::UtilityBox: return 3;
    }
    return 1;
}

/// A concrete model: class, variant, target bounding dims and the shape
/// parameters the mesh builder consumes. Deterministic in (class, variant).
struct AssetDescriptor {
    AssetClass cls = AssetClass::Car;
    int variant_id = 0;
    Vec3 nominal_dims;  // (length x, width y, height z), meters
    std::array<double, 8> mesh_params = {};
};

namespace detail {

// Variant streams hang off a fixed seed so the model library is the same for
// every dataset, like a fixed asset catalog.
inline constexpr uint64_t kAssetSeed = 0x5d7a55e7;

inline RngStream variant_stream(AssetClass cls, int variant) {
    return make_stream(kAssetSeed, static_cast<uint32_t>(variant),
                       std::string("asset/") + to_string(cls));
}

}  // namespace detail

inline AssetDescriptor make_descriptor(AssetClass cls, int variant) {
    auto rng = detail::variant_stream(cls, variant);
    AssetDescriptor d;
    d.cls = cls;
    d.variant_id = variant;
    auto& p = d.mesh_params;
    switch (cls) {
        case AssetClass::Car:
            d.nominal_dims = {rng.uniform(3.8, 5.2), rng.uniform(1.68, 2.0),
                              rng.uniform(1.3, 1.8)};
            p[0] = rng.uniform(0.52, 0.62);  // body top fraction of height
            p[1] = rng.uniform(0.02, 0.18);  // cabin front fraction of length
            p[2] = rng.uniform(0.22, 0.40);  // cabin rear fraction
            p[3] = rng.uniform(0.18, 0.23);  // wheel radius fraction of height
            p[4] = rng.uniform(0.10, 0.22);  // windshield slant fraction
            break;
        case AssetClass::Truck:
            d.nominal_dims = {rng.uniform(6.0, 12.0), rng.uniform(2.2, 2.6),
                              rng.uniform(2.6, 4.0)};
            p[0] = rng.uniform(0.18, 0.28);  // cab length fraction
            p[1] = rng.uniform(0.6, 0.8);    // cab height fraction
            p[2] = rng.uniform(0.12, 0.16);  // wheel radius fraction of height
            break;
        case AssetClass::Bicycle:
            d.nominal_dims = {rng.uniform(1.6, 1.9), rng.uniform(0.5, 0.65),
                              rng.uniform(0.95, 1.15)};
            p[0] = rng.uniform(0.3, 0.37);  // wheel radius, meters
            break;
        case AssetClass::Cyclist:
            d.nominal_dims = {rng.uniform(1.6, 1.9), rng.uniform(0.5, 0.65),
                              rng.uniform(1.45, 1.75)};
            p[0] = rng.uniform(0.3, 0.36);  // wheel radius
            break;
        case AssetClass::Pedestrian:
            d.nominal_dims = {rng.uniform(0.3, 0.42), rng.uniform(0.45, 0.62),
                              rng.uniform(1.5, 1.95)};
            p[0] = rng.uniform(0.0, 0.6);  // stride phase
            break;
        case AssetClass::Building:
            d.nominal_dims = {rng.uniform(9.0, 22.0), rng.uniform(8.0, 16.0),
                              rng.uniform(7.0, 36.0)};
            p[0] = rng.uniform(0.0, 1.0);  // parapet presence
            break;
        case AssetClass::House:
            d.nominal_dims = {rng.uniform(8.0, 14.0), rng.uniform(7.0, 11.0),
                              rng.uniform(4.5, 9.0)};
            p[0] = rng.uniform(0.25, 0.45);  // roof height fraction
            break;
        case AssetClass::Tree: {
            double canopy_d = rng.uniform(2.0, 7.0);
            d.nominal_dims = {canopy_d, canopy_d, rng.uniform(4.0, 12.0)};
            p[0] = rng.bernoulli(0.4) ? 1.0 : 0.0;  // conifer?
            p[1] = rng.uniform(0.3, 0.45);          // trunk height fraction
            p[2] = rng.uniform(0.0, 1.0);           // blob spread
            break;
        }
        case AssetClass::RoadSign: {
            double plate = rng.uniform(0.55, 0.95);
            d.nominal_dims = {0.08, plate, rng.uniform(2.2, 3.2)};
            p[0] = static_cast<double>(variant % 5);  // plate shape
            p[1] = plate;
            break;
        }
        case AssetClass::StreetLight:
            d.nominal_dims = {rng.uniform(1.6, 2.4), 0.25, rng.uniform(6.0, 8.5)};
            break;
        case AssetClass::Wall:
            d.nominal_dims = {rng.uniform(5.0, 10.0), 0.3, rng.uniform(1.5, 2.5)};
            break;
        case AssetClass::Fence:
            d.nominal_dims = {rng.uniform(4.0, 6.0), 0.12, rng.uniform(1.0, 1.6)};
            break;
        case AssetClass::FireHydrant:
            d.nominal_dims = {0.35, 0.26, rng.uniform(0.7, 0.85)};
            break;
        case AssetClass::RecyclingBin:
            d.nominal_dims = {rng.uniform(0.6, 0.9), rng.uniform(0.6, 0.8),
                              rng.uniform(1.0, 1.3)};
            break;
        case AssetClass::TelephonePole:
            d.nominal_dims = {2.0, 0.28, rng.uniform(8.0, 10.0)};
            break;
        case AssetClass::TrafficLight:
            d.nominal_dims = {0.25, 0.3, rng.uniform(3.8, 4.6)};
            break;
        case AssetClass::UtilityBox:
            d.nominal_dims = {rng.uniform(0.7, 1.2), rng.uniform(0.5, 0.8),
                              rng.uniform(1.0, 1.6)};
            break;
    }
    return d;
}

namespace detail {

using namespace meshgen;

// Material zones used by zoned texture classes: 0 = primary, 1 = secondary
// (glass / canopy / plate), 2 = tire / dark accent.
inline TriangleMesh build_car(const AssetDescriptor& d) {
    const double L = d.nominal_dims.x, W = d.nominal_dims.y, H = d.nominal_dims.z;
    const double body_top = d.mesh_params[0] * H;
    const double cab_front = L / 2.0 - d.mesh_params[1] * L - d.mesh_params[4] * L;
    const double cab_rear = -L / 2.0 + d.mesh_params[2] * L * 0.55;
    const double wheel_r = d.mesh_params[3] * H + 0.12;
    const double slant = d.mesh_params[4] * L;
    const double ground_clear = wheel_r * 0.55;
    const double cab_w = W * 0.88;

    TriangleMesh m;
    add_box(m, {0.0, 0.0, (body_top + ground_clear) / 2.0},
            {L, W, body_top - ground_clear}, 0.0);

    // Cabin: slanted front/rear glass, painted roof.
    {
        double zb = body_top, zt = H;
        double fb = cab_front + slant, rb = cab_rear;  // base x-range
        double ft = cab_front, rt = cab_rear + slant * 0.5;
        ft = fb - slant;
        Vec3 b0{rb, -cab_w / 2, zb}, b1{fb, -cab_w / 2, zb}, b2{fb, cab_w / 2, zb},
            b3{rb, cab_w / 2, zb};
        Vec3 t0{rt, -cab_w * 0.44, zt}, t1{ft, -cab_w * 0.44, zt}, t2{ft, cab_w * 0.44, zt},
            t3{rt, cab_w * 0.44, zt};
        add_quad(m, b1, b2, t2, t1, 1.0);  // windshield
        add_quad(m, b3, b0, t0, t3, 1.0);  // rear glass
        add_quad(m, b0, b1, t1, t0, 1.0);  // left windows
        add_quad(m, b2, b3, t3, t2, 1.0);  // right windows
        add_quad(m, t0, t1, t2, t3, 0.0);  // roof
    }

    const double ax = L * 0.32;
    const double wheel_w = std::min(0.26, W * 0.14);
    const double ay = W / 2.0 - wheel_w / 2.0 - 0.02;
    for (double sx : {-1.0, 1.0})
        for (double sy : {-1.0, 1.0})
            add_wheel(m, {sx * ax, sy * ay, wheel_r}, wheel_r, wheel_w, 12, 2.0);
    return m;
}

inline TriangleMesh build_truck(const AssetDescriptor& d) {
    const double L = d.nominal_dims.x, W = d.nominal_dims.y, H = d.nominal_dims.z;
    const double cab_len = d.mesh_params[0] * L;
    const double cab_h = d.mesh_params[1] * H;
    const double wheel_r = d.mesh_params[2] * H + 0.15;
    const double clear = wheel_r * 0.7;

    TriangleMesh m;
    // Cab at the front (+x), slanted windshield band.
    add_box(m, {L / 2.0 - cab_len / 2.0, 0.0, (cab_h + clear) / 2.0},
            {cab_len, W * 0.96, cab_h - clear}, 0.0);
    {
        double zb = cab_h * 0.55, zt = cab_h * 0.92;
        double x = L / 2.0 - cab_len * 0.02;
        Vec3 b0{x, -W * 0.42, zb}, b1{x, W * 0.42, zb};
        Vec3 t0{x - cab_len * 0.18, -W * 0.40, zt}, t1{x - cab_len * 0.18, W * 0.40, zt};
        add_quad(m, b0, b1, t1, t0, 1.0);
    }
    // Cargo box behind the cab.
    double cargo_len = L - cab_len - 0.2;
    add_box(m, {-L / 2.0 + cargo_len / 2.0, 0.0, (H + clear * 0.8) / 2.0},
            {cargo_len, W, H - clear * 0.8}, 0.0);

    const double wheel_w = std::min(0.3, W * 0.13);
    const double ay = W / 2.0 - wheel_w / 2.0 - 0.02;
    for (double sx : {-0.38, 0.0, 0.38})
        for (double sy : {-1.0, 1.0})
            add_wheel(m, {sx * L, sy * ay, wheel_r}, wheel_r, wheel_w, 12, 2.0);
    return m;
}

inline void add_bicycle_frame(TriangleMesh& m, double L, double W, double wheel_r,
                              double seat_h, double bar_h) {
    double wb = L - 2.0 * wheel_r;  // wheelbase
    Vec3 rear{-wb / 2.0, 0.0, wheel_r};
    Vec3 front{wb / 2.0, 0.0, wheel_r};
    Vec3 crank{0.0, 0.0, wheel_r * 0.9};
    Vec3 seat{-wb * 0.18, 0.0, seat_h};
    Vec3 bars{wb * 0.38, 0.0, bar_h - 0.0175};
    add_wheel(m, rear, wheel_r, 0.045, 12, 2.0);
    add_wheel(m, front, wheel_r, 0.045, 12, 2.0);
    add_tube(m, rear, seat, 0.04);
    add_tube(m, rear, crank, 0.04);
    add_tube(m, crank, seat, 0.04);
    add_tube(m, crank, bars, 0.04);
    add_tube(m, seat, bars, 0.04);
    add_tube(m, front, bars, 0.04);
    add_tube(m, {bars.x, -W / 2.0, bars.z}, {bars.x, W / 2.0, bars.z}, 0.035);  // handlebar
    add_box(m, {seat.x, 0.0, seat.z + 0.02}, {0.25, 0.18, 0.06});        // saddle
}

inline TriangleMesh build_bicycle(const AssetDescriptor& d) {
    TriangleMesh m;
    double H = d.nominal_dims.z;
    add_bicycle_frame(m, d.nominal_dims.x, d.nominal_dims.y, d.mesh_params[0], H * 0.82, H);
    return m;
}

inline void add_person(TriangleMesh& m, Vec3 base, double height, double depth, double width,
                       double stride) {
    double leg_r = std::min(0.09, depth * 0.22);
    double hip = height * 0.5;
    double sx = std::min(stride * 0.18, depth / 2.0 - leg_r);
    add_capsule(m, {base.x + sx, base.y - width * 0.14, base.z}, leg_r, hip + leg_r, 8, 2);
    add_capsule(m, {base.x - sx, base.y + width * 0.14, base.z}, leg_r, hip + leg_r, 8, 2);
    double torso_r = depth / 2.0;
    add_capsule(m, {base.x, base.y, base.z + hip - torso_r},
                torso_r, height * 0.85 - hip + torso_r, 12, 3);
    double arm_r = leg_r * 0.8;
    double ay = width / 2.0 - arm_r;
    add_capsule(m, {base.x, base.y - ay, base.z + height * 0.45}, arm_r, height * 0.33, 8, 2);
    add_capsule(m, {base.x, base.y + ay, base.z + height * 0.45}, arm_r, height * 0.33, 8, 2);
    double head_r = height * 0.065;
    add_ellipsoid(m, {base.x, base.y, base.z + height - head_r},
                  {head_r, head_r, head_r});
}

inline TriangleMesh build_pedestrian(const AssetDescriptor& d) {
    TriangleMesh m;
    add_person(m, {0, 0, 0}, d.nominal_dims.z, d.nominal_dims.x, d.nominal_dims.y,
               d.mesh_params[0]);
    return m;
}

inline TriangleMesh build_cyclist(const AssetDescriptor& d) {
    TriangleMesh m;
    double bike_h = d.nominal_dims.z * 0.62;
    add_bicycle_frame(m, d.nominal_dims.x, d.nominal_dims.y, d.mesh_params[0],
                      bike_h * 0.8, bike_h);
    // Rider: torso above the saddle, head at nominal height.
    double saddle_z = bike_h * 0.8;
    double torso_h = d.nominal_dims.z - saddle_z;
    add_capsule(m, {-d.nominal_dims.x * 0.09, 0.0, saddle_z}, 0.14, torso_h * 0.9, 12, 3);
    double head_r = 0.1;
    add_ellipsoid(m, {-d.nominal_dims.x * 0.05, 0.0, d.nominal_dims.z - head_r},
                  {head_r, head_r, head_r});
    return m;
}

inline TriangleMesh build_building(const AssetDescriptor& d) {
    const double L = d.nominal_dims.x, W = d.nominal_dims.y, H = d.nominal_dims.z;
    TriangleMesh m;
    bool parapet = d.mesh_params[0] > 0.5;
    double wall_h = parapet ? H - 0.6 : H;
    add_box(m, {0, 0, wall_h / 2.0}, {L, W, wall_h}, 0.0, true);
    if (parapet) {
        // Parapet ring drawn as a slightly inset slab with roof uv.
        TriangleMesh slab;
        add_box(slab, {0, 0, H - 0.3}, {L, W, 0.6}, 0.0, false);
        for (auto& v : slab.vertices) { v.u = 0.0; v.v = -1.0; }  // roof zone
        m.append(slab);
    }
    return m;
}

inline TriangleMesh build_house(const AssetDescriptor& d) {
    const double L = d.nominal_dims.x, W = d.nominal_dims.y, H = d.nominal_dims.z;
    const double roof_h = d.mesh_params[0] * H;
    const double wall_h = H - roof_h;
    TriangleMesh m;
    add_box(m, {0, 0, wall_h / 2.0}, {L, W, wall_h}, 0.0, true);
    // Gable roof, ridge along x; roof faces get v = -1 (roof zone).
    Vec3 r0{-L / 2, 0, H}, r1{L / 2, 0, H};
    Vec3 e00{-L / 2, -W / 2, wall_h}, e01{L / 2, -W / 2, wall_h};
    Vec3 e10{-L / 2, W / 2, wall_h}, e11{L / 2, W / 2, wall_h};
    TriangleMesh roof;
    add_quad(roof, e00, e01, r1, r0);
    add_quad(roof, e11, e10, r0, r1);
    for (auto& v : roof.vertices) { v.u = 0.0; v.v = -1.0; }
    m.append(roof);
    // Gable end walls keep facade uv.
    TriangleMesh gables;
    add_triangle(gables, e01, e11, r1);
    add_triangle(gables, e10, e00, r0);
    for (auto& v : gables.vertices) { v.u = v.position.y; v.v = v.position.z; }
    m.append(gables);
    return m;
}

inline TriangleMesh build_tree(const AssetDescriptor& d) {
    const double H = d.nominal_dims.z;
    const double R = d.nominal_dims.x / 2.0;
    bool conifer = d.mesh_params[0] > 0.5;
    double trunk_h = d.mesh_params[1] * H;
    double trunk_r = clamp(H * 0.025, 0.06, 0.3);
    TriangleMesh m;
    add_cylinder(m, {0, 0, 0}, trunk_r, conifer ? trunk_h * 0.6 : trunk_h, 8, 0.0);
    if (conifer) {
        double z = trunk_h * 0.5;
        double span = H - z;
        add_cone(m, {0, 0, z}, R, span * 0.55, 12, 1.0);
        add_cone(m, {0, 0, z + span * 0.35}, R * 0.75, span * 0.45, 12, 1.0);
        add_cone(m, {0, 0, z + span * 0.65}, R * 0.5, span * 0.35, 12, 1.0);
    } else {
        double cz = trunk_h + (H - trunk_h) / 2.0;
        add_ellipsoid(m, {0, 0, cz}, {R, R, (H - trunk_h) / 2.0}, 1.0);
        double spread = d.mesh_params[2];
        if (spread > 0.35)
            add_ellipsoid(m, {R * 0.3, R * 0.25, cz - (H - trunk_h) * 0.18},
                          {R * 0.6, R * 0.6, (H - trunk_h) * 0.32}, 1.0);
    }
    return m;
}

inline TriangleMesh build_road_sign(const AssetDescriptor& d) {
    const double H = d.nominal_dims.z;
    const double plate = d.mesh_params[1];
    int shape = static_cast<int>(d.mesh_params[0]);
    TriangleMesh m;
    add_cylinder(m, {0, 0, 0}, d.nominal_dims.x / 2.0, H - plate / 2.0, 8, 0.0);
    std::vector<Vec2> poly;
    double r = plate / 2.0;
    switch (shape) {
        case 0:  // disc
            for (int i = 0; i < 16; ++i) {
                double a = 2.0 * kPi * i / 16;
                poly.push_back({r * std::cos(a), r * std::sin(a)});
            }
            break;
        case 1:  // triangle
            poly = {{-r, -r * 0.85}, {r, -r * 0.85}, {0.0, r}};
            break;
        case 2:  // rectangle
            poly = {{-r * 0.8, -r}, {r * 0.8, -r}, {r * 0.8, r}, {-r * 0.8, r}};
            break;
        case 3:  // diamond
            poly = {{0.0, -r}, {r, 0.0}, {0.0, r}, {-r, 0.0}};
            break;
        default:  // octagon
            for (int i = 0; i < 8; ++i) {
                double a = 2.0 * kPi * (i + 0.5) / 8;
                poly.push_back({r * std::cos(a), r * std::sin(a)});
            }
            break;
    }
    // Normalize the outline so every shape spans exactly [-r, r] on both axes.
    Vec2 lo{1e9, 1e9}, hi{-1e9, -1e9};
    for (auto p : poly) {
        lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y);
    }
    for (auto& p : poly) {
        p.x = -r + 2.0 * r * (p.x - lo.x) / (hi.x - lo.x);
        p.y = -r + 2.0 * r * (p.y - lo.y) / (hi.y - lo.y);
    }
    add_plate(m, {0.0, 0.0, H - plate / 2.0}, poly, 0.04, 1.0);
    return m;
}

inline TriangleMesh build_street_light(const AssetDescriptor& d) {
    const double H = d.nominal_dims.z;
    const double arm = d.nominal_dims.x - 0.34;
    TriangleMesh m;
    add_cylinder(m, {0, 0, 0}, 0.09, H - 0.1, 8, 0.0);
    add_tube(m, {0, 0, H - 0.2}, {arm, 0, H - 0.12}, 0.08);
    add_box(m, {arm, 0, H - 0.075}, {0.5, 0.25, 0.15}, 1.0);
    return m;
}

inline TriangleMesh build_wall(const AssetDescriptor& d) {
    TriangleMesh m;
    add_box(m, {0, 0, d.nominal_dims.z / 2.0}, d.nominal_dims, 0.0);
    return m;
}

inline TriangleMesh build_fence(const AssetDescriptor& d) {
    const double L = d.nominal_dims.x, H = d.nominal_dims.z;
    TriangleMesh m;
    const int posts = 5;
    for (int i = 0; i < posts; ++i) {
        double x = -L / 2.0 + 0.05 + (L - 0.1) * i / (posts - 1);
        add_box(m, {x, 0, H / 2.0}, {0.1, 0.12, H}, 0.0);
    }
    add_tube(m, {-L / 2, 0, H * 0.85}, {L / 2, 0, H * 0.85}, 0.08);
    add_tube(m, {-L / 2, 0, H * 0.45}, {L / 2, 0, H * 0.45}, 0.08);
    return m;
}

inline TriangleMesh build_fire_hydrant(const AssetDescriptor& d) {
    const double H = d.nominal_dims.z;
    TriangleMesh m;
    add_cylinder(m, {0, 0, 0}, 0.13, H * 0.75, 12, 0.0);
    add_cylinder(m, {0, 0, H * 0.75}, 0.09, H * 0.25, 12, 0.0, true, 0.04);
    add_tube(m, {-0.175, 0, H * 0.55}, {0.175, 0, H * 0.55}, 0.1);
    return m;
}

inline TriangleMesh build_recycling_bin(const AssetDescriptor& d) {
    TriangleMesh m;
    const double H = d.nominal_dims.z;
    add_box(m, {0, 0, (H - 0.08) / 2.0},
            {d.nominal_dims.x, d.nominal_dims.y, H - 0.08}, 0.0);
    add_box(m, {0, 0, H - 0.04}, {d.nominal_dims.x * 1.0, d.nominal_dims.y, 0.08}, 1.0);
    return m;
}

inline TriangleMesh build_telephone_pole(const AssetDescriptor& d) {
    const double H = d.nominal_dims.z;
    TriangleMesh m;
    add_cylinder(m, {0, 0, 0}, 0.14, H, 8, 0.0, true, 0.1);
    add_box(m, {0, 0, H - 0.5}, {d.nominal_dims.x, 0.12, 0.12}, 0.0);
    return m;
}

inline TriangleMesh build_traffic_light(const AssetDescriptor& d) {
    const double H = d.nominal_dims.z;
    TriangleMesh m;
    add_cylinder(m, {0, 0, 0}, 0.07, H - 1.0, 8, 0.0);
    add_box(m, {0, 0, H - 0.5}, {0.25, 0.3, 1.0}, 1.0);
    return m;
}

inline TriangleMesh build_utility_box(const AssetDescriptor& d) {
    TriangleMesh m;
    add_box(m, {0, 0, d.nominal_dims.z / 2.0}, d.nominal_dims, 0.0);
    return m;
}

}  // namespace detail

/// Build the low-poly mesh for a descriptor. Deterministic in (class, variant);
/// meshes sit on z = 0 with +x forward.
inline TriangleMesh instantiate_asset(const AssetDescriptor& d) {
    switch (d.cls) {
        case AssetClass::Car: return detail::build_car(d);
        case AssetClass::Truck: return detail::build_truck(d);
        case AssetClass::Bicycle: return detail::build_bicycle(d);
        case AssetClass::Cyclist: return detail::build_cyclist(d);
        case AssetClass::Pedestrian: return detail::build_pedestrian(d);
        case AssetClass::Building: return detail::build_building(d);
        case AssetClass::House: return detail::build_house(d);
        case AssetClass::Tree: return detail::build_tree(d);
        case AssetClass::RoadSign: return detail::build_road_sign(d);
        case AssetClass::StreetLight: return detail::build_street_light(d);
        case AssetClass::Wall: return detail::build_wall(d);
        case AssetClass::Fence: return detail::build_fence(d);
        case AssetClass::FireHydrant: return detail::build_fire_hydrant(d);
        case AssetClass::RecyclingBin: return detail::build_recycling_bin(d);
        case AssetClass::TelephonePole: return detail::build_telephone_pole(d);
        case AssetClass::TrafficLight: return detail::build_traffic_light(d);
        case AssetClass::UtilityBox: return detail::build_utility_box(d);
    }
    throw ConfigError("unknown asset class");
}

/// Immutable catalog of descriptors and meshes, precomputed so lookups are
/// lock-free across worker threads.
class AssetLibrary {
public:
    explicit AssetLibrary(std::map<AssetClass, int> variant_counts = {}) {
        for (AssetClass cls : kAllAssetClasses) {
            int count = default_variant_count(cls);
            if (auto it = variant_counts.find(cls); it != variant_counts.end()) {
                if (it->second < 1) throw ConfigError("variant count must be >= 1");
                count = it->second;
            }
            auto& entry = classes_[cls];
            entry.reserve(static_cast<size_t>(count));
            for (int v = 0; v < count; ++v) {
                auto desc = make_descriptor(cls, v);
                entry.push_back({desc, instantiate_asset(desc)});
            }
        }
    }

    int variant_count(AssetClass cls) const {
        return static_cast<int>(classes_.at(cls).size());
    }
    const AssetDescriptor& descriptor(AssetClass cls, int variant) const {
        return classes_.at(cls).at(static_cast<size_t>(variant)).first;
    }
    const TriangleMesh& mesh(AssetClass cls, int variant) const {
        return classes_.at(cls).at(static_cast<size_t>(variant)).second;
    }

private:
    std::map<AssetClass, std::vector<std::pair<AssetDescriptor, TriangleMesh>>> classes_;
};

}  // namespace sdr
