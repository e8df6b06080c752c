#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "sdr/math.hpp"

namespace sdr {

struct MeshVertex {
    Vec3 position;
    Vec3 normal;
    // Texture attribute; meaning depends on the material's texture class
    // (meters for surface patterns, a zone id in x for zoned materials).
    double u = 0.0, v = 0.0;
};

struct TriangleMesh {
    std::vector<MeshVertex> vertices;
    std::vector<std::array<uint32_t, 3>> triangles;

    Aabb3 bounds() const {
        Aabb3 b;
        for (const auto& vtx : vertices) b.extend(vtx.position);
        return b;
    }

    void append(const TriangleMesh& other) {
        auto base = static_cast<uint32_t>(vertices.size());
        vertices.insert(vertices.end(), other.vertices.begin(), other.vertices.end());
        for (auto t : other.triangles)
            triangles.push_back({t[0] + base, t[1] + base, t[2] + base});
    }
};

namespace meshgen {

inline void add_triangle(TriangleMesh& m, Vec3 a, Vec3 b, Vec3 c, double zone = 0.0) {
    Vec3 n = (b - a).cross(c - a);
    double len = n.norm();
    if (len < 1e-12) return;
    n = n / len;
    auto base = static_cast<uint32_t>(m.vertices.size());
    m.vertices.push_back({a, n, zone, 0.0});
    m.vertices.push_back({b, n, zone, 0.0});
    m.vertices.push_back({c, n, zone, 0.0});
    m.triangles.push_back({base, base + 1, base + 2});
}

inline void add_quad(TriangleMesh& m, Vec3 a, Vec3 b, Vec3 c, Vec3 d, double zone = 0.0) {
    add_triangle(m, a, b, c, zone);
    add_triangle(m, a, c, d, zone);
}

/// Axis-aligned box, flat normals. Wall uv runs in meters (u along the face,
/// v upward) so facade patterns can tile.
inline void add_box(TriangleMesh& m, Vec3 center, Vec3 dims, double zone = 0.0,
                    bool metric_uv = false) {
    Vec3 h = dims * 0.5;
    double x0 = center.x - h.x, x1 = center.x + h.x;
    double y0 = center.y - h.y, y1 = center.y + h.y;
    double z0 = center.z - h.z, z1 = center.z + h.z;

    auto face = [&](Vec3 a, Vec3 b, Vec3 c, Vec3 d, Vec3 n, double u0, double v0, double u1,
                    double v1) {
        auto base = static_cast<uint32_t>(m.vertices.size());
        if (metric_uv) {
            m.vertices.push_back({a, n, u0, v0});
            m.vertices.push_back({b, n, u1, v0});
            m.vertices.push_back({c, n, u1, v1});
            m.vertices.push_back({d, n, u0, v1});
        } else {
            for (Vec3 p : {a, b, c, d}) m.vertices.push_back({p, n, zone, 0.0});
        }
        m.triangles.push_back({base, base + 1, base + 2});
        m.triangles.push_back({base, base + 2, base + 3});
    };

    face({x0, y0, z0}, {x1, y0, z0}, {x1, y0, z1}, {x0, y0, z1}, {0, -1, 0}, x0, z0, x1, z1);
    face({x1, y1, z0}, {x0, y1, z0}, {x0, y1, z1}, {x1, y1, z1}, {0, 1, 0}, -x1, z0, -x0, z1);
    face({x1, y0, z0}, {x1, y1, z0}, {x1, y1, z1}, {x1, y0, z1}, {1, 0, 0}, y0, z0, y1, z1);
    face({x0, y1, z0}, {x0, y0, z0}, {x0, y0, z1}, {x0, y1, z1}, {-1, 0, 0}, -y1, z0, -y0, z1);
    face({x0, y0, z1}, {x1, y0, z1}, {x1, y1, z1}, {x0, y1, z1}, {0, 0, 1}, x0, y0, x1, y1);
    face({x0, y1, z0}, {x1, y1, z0}, {x1, y0, z0}, {x0, y0, z0}, {0, 0, -1}, x0, y0, x1, y1);
}

/// Cylinder along +z from z0 to z1, optionally capped. Smooth side normals.
inline void add_cylinder(TriangleMesh& m, Vec3 base_center, double radius, double height,
                         int segments, double zone = 0.0, bool caps = true,
                         double top_radius = -1.0) {
    if (top_radius < 0.0) top_radius = radius;
    double z0 = base_center.z, z1 = base_center.z + height;
    auto ring_base = static_cast<uint32_t>(m.vertices.size());
    for (int i = 0; i < segments; ++i) {
        double a = 2.0 * kPi * i / segments;
        Vec3 dir{std::cos(a), std::sin(a), 0.0};
        Vec3 p0 = base_center + dir * radius;
        Vec3 p1{base_center.x + dir.x * top_radius, base_center.y + dir.y * top_radius, z1};
        p0.z = z0;
        m.vertices.push_back({p0, dir, zone, 0.0});
        m.vertices.push_back({p1, dir, zone, 0.0});
    }
    for (int i = 0; i < segments; ++i) {
        uint32_t a0 = ring_base + 2 * i;
        uint32_t a1 = a0 + 1;
        uint32_t b0 = ring_base + 2 * ((i + 1) % segments);
        uint32_t b1 = b0 + 1;
        m.triangles.push_back({a0, b0, b1});
        m.triangles.push_back({a0, b1, a1});
    }
    if (caps) {
        for (int cap = 0; cap < 2; ++cap) {
            double z = cap ? z1 : z0;
            double r = cap ? top_radius : radius;
            Vec3 n{0.0, 0.0, cap ? 1.0 : -1.0};
            auto center_idx = static_cast<uint32_t>(m.vertices.size());
            m.vertices.push_back({{base_center.x, base_center.y, z}, n, zone, 0.0});
            for (int i = 0; i < segments; ++i) {
                double a = 2.0 * kPi * i / segments;
                m.vertices.push_back(
                    {{base_center.x + r * std::cos(a), base_center.y + r * std::sin(a), z},
                     n, zone, 0.0});
            }
            for (int i = 0; i < segments; ++i) {
                uint32_t v0 = center_idx + 1 + i;
                uint32_t v1 = center_idx + 1 + (i + 1) % segments;
                if (cap)
                    m.triangles.push_back({center_idx, v0, v1});
                else
                    m.triangles.push_back({center_idx, v1, v0});
            }
        }
    }
}

/// Capsule along +z: cylinder with hemispherical ends. Smooth normals.
inline void add_capsule(TriangleMesh& m, Vec3 base_center, double radius, double height,
                        int segments, int rings = 3, double zone = 0.0) {
    double cyl_h = std::max(0.0, height - 2.0 * radius);
    double zc0 = base_center.z + radius;
    double zc1 = zc0 + cyl_h;

    std::vector<uint32_t> prev_ring;
    auto emit_ring = [&](double z, double r, double nz) {
        std::vector<uint32_t> ring;
        for (int i = 0; i < segments; ++i) {
            double a = 2.0 * kPi * i / segments;
            Vec3 dir{std::cos(a), std::sin(a), 0.0};
            Vec3 p{base_center.x + dir.x * r, base_center.y + dir.y * r, z};
            Vec3 n = Vec3{dir.x * std::sqrt(std::max(0.0, 1.0 - nz * nz)),
                          dir.y * std::sqrt(std::max(0.0, 1.0 - nz * nz)), nz}
                         .normalized();
            ring.push_back(static_cast<uint32_t>(m.vertices.size()));
            m.vertices.push_back({p, n, zone, 0.0});
        }
        return ring;
    };
    auto stitch = [&](const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        for (int i = 0; i < segments; ++i) {
            int j = (i + 1) % segments;
            m.triangles.push_back({a[i], a[j], b[j]});
            m.triangles.push_back({a[i], b[j], b[i]});
        }
    };

    // Bottom pole to top pole.
    auto bottom_pole = static_cast<uint32_t>(m.vertices.size());
    m.vertices.push_back({{base_center.x, base_center.y, base_center.z}, {0, 0, -1}, zone, 0.0});
    for (int k = rings; k >= 1; --k) {
        double phi = (kPi / 2.0) * k / (rings + 1);
        auto ring = emit_ring(zc0 - radius * std::sin(phi), radius * std::cos(phi),
                              -std::sin(phi));
        if (prev_ring.empty()) {
            for (int i = 0; i < segments; ++i)
                m.triangles.push_back({bottom_pole, ring[(i + 1) % segments], ring[i]});
        } else {
            stitch(prev_ring, ring);
        }
        prev_ring = ring;
    }
    auto low = emit_ring(zc0, radius, 0.0);
    stitch(prev_ring, low);
    auto high = emit_ring(zc1, radius, 0.0);
    stitch(low, high);
    prev_ring = high;
    for (int k = 1; k <= rings; ++k) {
        double phi = (kPi / 2.0) * k / (rings + 1);
        auto ring =
            emit_ring(zc1 + radius * std::sin(phi), radius * std::cos(phi), std::sin(phi));
        stitch(prev_ring, ring);
        prev_ring = ring;
    }
    auto top_pole = static_cast<uint32_t>(m.vertices.size());
    m.vertices.push_back(
        {{base_center.x, base_center.y, base_center.z + height}, {0, 0, 1}, zone, 0.0});
    for (int i = 0; i < segments; ++i)
        m.triangles.push_back({top_pole, prev_ring[i], prev_ring[(i + 1) % segments]});
}

/// Cone along +z (smooth side normals plus a base cap).
inline void add_cone(TriangleMesh& m, Vec3 base_center, double radius, double height,
                     int segments, double zone = 0.0) {
    add_cylinder(m, base_center, radius, height, segments, zone, true, radius * 0.02);
}

/// Ellipsoid from an octahedron subdivided twice; normals radial.
inline void add_ellipsoid(TriangleMesh& m, Vec3 center, Vec3 radii, double zone = 0.0) {
    std::vector<Vec3> verts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    std::vector<std::array<int, 3>> tris = {{4, 0, 2}, {4, 2, 1}, {4, 1, 3}, {4, 3, 0},
                                            {5, 2, 0}, {5, 1, 2}, {5, 3, 1}, {5, 0, 3}};
    for (int pass = 0; pass < 2; ++pass) {
        std::vector<std::array<int, 3>> next;
        for (auto t : tris) {
            Vec3 a = verts[t[0]], b = verts[t[1]], c = verts[t[2]];
            auto mid = [&](Vec3 p, Vec3 q) {
                verts.push_back(((p + q) * 0.5).normalized());
                return static_cast<int>(verts.size()) - 1;
            };
            int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
            next.push_back({t[0], ab, ca});
            next.push_back({ab, t[1], bc});
            next.push_back({ca, bc, t[2]});
            next.push_back({ab, bc, ca});
        }
        tris = std::move(next);
    }
    auto base = static_cast<uint32_t>(m.vertices.size());
    for (Vec3 v : verts) {
        Vec3 p{center.x + v.x * radii.x, center.y + v.y * radii.y, center.z + v.z * radii.z};
        // Normal of an ellipsoid: gradient, component-wise divide by radii.
        Vec3 n = Vec3{v.x / radii.x, v.y / radii.y, v.z / radii.z}.normalized();
        m.vertices.push_back({p, n, zone, 0.0});
    }
    for (auto t : tris)
        m.triangles.push_back({base + static_cast<uint32_t>(t[0]),
                               base + static_cast<uint32_t>(t[1]),
                               base + static_cast<uint32_t>(t[2])});
}

/// Thin square-section tube from a to b (frame tubes, railings).
inline void add_tube(TriangleMesh& m, Vec3 a, Vec3 b, double thickness, double zone = 0.0) {
    Vec3 axis = b - a;
    double len = axis.norm();
    if (len < 1e-9) return;
    axis = axis / len;
    Vec3 ref = std::fabs(axis.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0};
    Vec3 s = axis.cross(ref).normalized() * (thickness * 0.5);
    Vec3 t = axis.cross(s).normalized() * (thickness * 0.5);
    Vec3 c[8] = {a - s - t, a + s - t, a + s + t, a - s + t,
                 b - s - t, b + s - t, b + s + t, b - s + t};
    add_quad(m, c[0], c[1], c[5], c[4], zone);
    add_quad(m, c[1], c[2], c[6], c[5], zone);
    add_quad(m, c[2], c[3], c[7], c[6], zone);
    add_quad(m, c[3], c[0], c[4], c[7], zone);
    add_quad(m, c[3], c[2], c[1], c[0], zone);
    add_quad(m, c[4], c[5], c[6], c[7], zone);
}

/// Wheel: cylinder with its axis along +y. The ring starts at -90 degrees so a
/// vertex touches the ground exactly; use a multiple of 4 segments for exact
/// x extents too.
inline void add_wheel(TriangleMesh& m, Vec3 center, double radius, double width, int segments,
                      double zone = 2.0) {
    auto base = static_cast<uint32_t>(m.vertices.size());
    double y0 = center.y - width / 2.0, y1 = center.y + width / 2.0;
    for (int i = 0; i < segments; ++i) {
        double a = 2.0 * kPi * i / segments - kPi / 2.0;
        Vec3 dir{std::cos(a), 0.0, std::sin(a)};
        m.vertices.push_back({{center.x + dir.x * radius, y0, center.z + dir.z * radius},
                              dir, zone, 0.0});
        m.vertices.push_back({{center.x + dir.x * radius, y1, center.z + dir.z * radius},
                              dir, zone, 0.0});
    }
    for (int i = 0; i < segments; ++i) {
        uint32_t a0 = base + 2 * i, a1 = a0 + 1;
        uint32_t b0 = base + 2 * ((i + 1) % segments), b1 = b0 + 1;
        m.triangles.push_back({a0, b1, b0});
        m.triangles.push_back({a0, a1, b1});
    }
    for (int side = 0; side < 2; ++side) {
        double y = side ? y1 : y0;
        Vec3 n{0.0, side ? 1.0 : -1.0, 0.0};
        auto ci = static_cast<uint32_t>(m.vertices.size());
        m.vertices.push_back({{center.x, y, center.z}, n, zone, 0.0});
        for (int i = 0; i < segments; ++i) {
            double a = 2.0 * kPi * i / segments - kPi / 2.0;
            m.vertices.push_back(
                {{center.x + radius * std::cos(a), y, center.z + radius * std::sin(a)},
                 n, zone, 0.0});
        }
        for (int i = 0; i < segments; ++i) {
            uint32_t v0 = ci + 1 + i, v1 = ci + 1 + (i + 1) % segments;
            if (side)
                m.triangles.push_back({ci, v0, v1});
            else
                m.triangles.push_back({ci, v1, v0});
        }
    }
}

/// Extruded convex polygon facing +-x (sign plates). Points are (y, z) pairs.
inline void add_plate(TriangleMesh& m, Vec3 center, const std::vector<Vec2>& poly,
                      double thickness, double zone = 1.0) {
    double x0 = center.x - thickness / 2.0, x1 = center.x + thickness / 2.0;
    auto at = [&](double x, Vec2 p) { return Vec3{x, center.y + p.x, center.z + p.y}; };
    for (size_t i = 1; i + 1 < poly.size(); ++i) {
        add_triangle(m, at(x1, poly[0]), at(x1, poly[i]), at(x1, poly[i + 1]), zone);
        add_triangle(m, at(x0, poly[0]), at(x0, poly[i + 1]), at(x0, poly[i]), zone);
    }
    for (size_t i = 0; i < poly.size(); ++i) {
        size_t j = (i + 1) % poly.size();
        add_quad(m, at(x0, poly[i]), at(x0, poly[j]), at(x1, poly[j]), at(x1, poly[i]), zone);
    }
}

}  // namespace meshgen

}  // namespace sdr
