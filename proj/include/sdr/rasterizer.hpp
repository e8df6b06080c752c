#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "sdr/assets.hpp"
#include "sdr/camera.hpp"
#include "sdr/lighting.hpp"
#include "sdr/scene.hpp"
#include "sdr/texture.hpp"

namespace sdr {

struct RenderBuffers {
    int width = 0, height = 0;
    std::vector<float> depth;      // camera-space Z in meters; +inf = sky
    std::vector<uint16_t> instance;  // 0 = background / strips
    std::vector<Color3> color;     // linear until tonemap, then display-referred

    void reset(int w, int h) {
        width = w;
        height = h;
        depth.assign(static_cast<size_t>(w) * h, std::numeric_limits<float>::infinity());
        instance.assign(static_cast<size_t>(w) * h, 0);
        color.assign(static_cast<size_t>(w) * h, Color3{});
    }
    size_t idx(int x, int y) const { return static_cast<size_t>(y) * width + x; }
};

struct PixelRect {
    int x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // half-open

    static PixelRect full(int w, int h) { return {0, 0, w, h}; }
    PixelRect intersect(const PixelRect& o) const {
        return {std::max(x0, o.x0), std::max(y0, o.y0), std::min(x1, o.x1), std::min(y1, o.y1)};
    }
    bool empty() const { return x0 >= x1 || y0 >= y1; }
};

/// Raster output views; color may be null for id/depth-only passes.
struct RasterTarget {
    int width = 0, height = 0;
    float* depth = nullptr;
    uint16_t* instance = nullptr;
    Color3* color = nullptr;

    static RasterTarget of(RenderBuffers& b) {
        return {b.width, b.height, b.depth.data(), b.instance.data(), b.color.data()};
    }
};

enum class SurfaceKind { Strip, Object, Unlit };

struct DrawStyle {
    SurfaceKind kind = SurfaceKind::Object;
    const ContextSpline* strip = nullptr;  // Strip: uv = (station, lateral)
    Material material;                     // Object
    const Backdrop* backdrop = nullptr;    // Unlit: uv in [0,1]^2
    uint16_t instance = 0;
};

struct RenderConfig {
    double ambient_strength = 0.45;
    double gamma = 2.2;
    int strip_stride = 8;        // centerline grid samples per ground quad (8 = 2 m)
    double terrain_drop = 0.5;   // backdrop ground plane sits this far below the road
    double terrain_extent = 2000.0;
};

namespace raster {

struct ClipVertex {
    Vec3 cam;     // camera space (X right, Y down, Z forward)
    Vec3 normal;  // world space
    double u = 0.0, v = 0.0;
};

inline ClipVertex lerp_cv(const ClipVertex& a, const ClipVertex& b, double t) {
    return {a.cam + (b.cam - a.cam) * t, a.normal + (b.normal - a.normal) * t,
            a.u + (b.u - a.u) * t, a.v + (b.v - a.v) * t};
}

/// Rasterize one camera-space triangle (already in front of the near plane).
/// Top-left fill rule on double-precision edge functions, pixel-center samples,
/// perspective-correct attributes, strict-less z test.
inline void raster_clipped(const RasterTarget& t, const Camera& cam, const Lighting& light,
                           ClipVertex v0, ClipVertex v1, ClipVertex v2, const DrawStyle& style,
                           const PixelRect& scissor) {
    auto p0 = cam.project_cam(v0.cam), p1 = cam.project_cam(v1.cam), p2 = cam.project_cam(v2.cam);
    if (!p0 || !p1 || !p2) return;

    double area2 = (p1->x - p0->x) * (p2->y - p0->y) - (p1->y - p0->y) * (p2->x - p0->x);
    if (area2 == 0.0) return;
    if (area2 < 0.0) {
        std::swap(v1, v2);
        std::swap(p1, p2);
        area2 = -area2;
    }

    const double x0 = p0->x, y0 = p0->y, x1 = p1->x, y1 = p1->y, x2 = p2->x, y2 = p2->y;
    // Edge functions are anchored at the lexicographically smaller endpoint so
    // that the two triangles sharing an edge compute bit-identical magnitudes;
    // with the top-left zero rule every boundary pixel lands in exactly one.
    struct Edge {
        double ox, oy, dx, dy;  // canonical anchor and direction
        double sign;
        bool accept_zero;
        double eval(double px, double py) const {
            return sign * ((py - oy) * dx - (px - ox) * dy);
        }
    };
    auto mk_edge = [](double ax, double ay, double bx, double by) {
        bool a_first = ax < bx || (ax == bx && ay <= by);
        double ox = a_first ? ax : bx, oy = a_first ? ay : by;
        double dx = a_first ? bx - ax : ax - bx;
        double dy = a_first ? by - ay : ay - by;
        double sign = a_first ? 1.0 : -1.0;
        double edy = sign * dy, edx = sign * dx;  // actual a->b direction
        bool accept = edy < 0.0 || (edy == 0.0 && edx > 0.0);
        return Edge{ox, oy, dx, dy, sign, accept};
    };
    Edge e0 = mk_edge(x0, y0, x1, y1);  // opposite v2
    Edge e1 = mk_edge(x1, y1, x2, y2);  // opposite v0
    Edge e2 = mk_edge(x2, y2, x0, y0);  // opposite v1

    double minx = std::min({x0, x1, x2}), maxx = std::max({x0, x1, x2});
    double miny = std::min({y0, y1, y2}), maxy = std::max({y0, y1, y2});
    int ix0 = std::max(scissor.x0, static_cast<int>(std::ceil(minx - 0.5)));
    int ix1 = std::min(scissor.x1 - 1, static_cast<int>(std::floor(maxx - 0.5)));
    int iy0 = std::max(scissor.y0, static_cast<int>(std::ceil(miny - 0.5)));
    int iy1 = std::min(scissor.y1 - 1, static_cast<int>(std::floor(maxy - 0.5)));
    if (ix0 > ix1 || iy0 > iy1) return;

    const double inv_area = 1.0 / area2;
    const double iz0 = 1.0 / v0.cam.z, iz1 = 1.0 / v1.cam.z, iz2 = 1.0 / v2.cam.z;

    const bool shaded = t.color != nullptr;
    // Attributes pre-divided by z for perspective-correct interpolation.
    Vec3 n0 = v0.normal * iz0, n1 = v1.normal * iz1, n2 = v2.normal * iz2;
    double u0 = v0.u * iz0, u1 = v1.u * iz1, u2 = v2.u * iz2;
    double vv0 = v0.v * iz0, vv1 = v1.v * iz1, vv2 = v2.v * iz2;

    for (int y = iy0; y <= iy1; ++y) {
        double py = y + 0.5;
        for (int x = ix0; x <= ix1; ++x) {
            double px = x + 0.5;
            double E0 = e0.eval(px, py);
            double E1 = e1.eval(px, py);
            double E2 = e2.eval(px, py);
            bool in0 = E0 > 0.0 || (E0 == 0.0 && e0.accept_zero);
            bool in1 = E1 > 0.0 || (E1 == 0.0 && e1.accept_zero);
            bool in2 = E2 > 0.0 || (E2 == 0.0 && e2.accept_zero);
            if (!(in0 && in1 && in2)) continue;

            double w2 = E0 * inv_area, w0 = E1 * inv_area, w1 = E2 * inv_area;
            double invz = w0 * iz0 + w1 * iz1 + w2 * iz2;
            double z = 1.0 / invz;
            size_t i = static_cast<size_t>(y) * t.width + x;
            if (!(z < t.depth[i])) continue;
            t.depth[i] = static_cast<float>(z);
            t.instance[i] = style.instance;
            if (!shaded) continue;

            double u = (w0 * u0 + w1 * u1 + w2 * u2) * z;
            double v = (w0 * vv0 + w1 * vv1 + w2 * vv2) * z;
            Color3 out;
            switch (style.kind) {
                case SurfaceKind::Unlit: {
                    const Backdrop& b = *style.backdrop;
                    if (b.image) {
                        out = b.image->sample_bilinear(u, v);
                    } else {
                        float n = fbm(static_cast<float>(u * b.noise_scale),
                                      static_cast<float>(v * b.noise_scale), 101u, 4);
                        out = lerp(b.color_a, b.color_b, n);
                    }
                    break;
                }
                case SurfaceKind::Strip: {
                    Vec3 world = cam.unproject(px, py, z);
                    Vec3 view = (cam.position() - world).normalized();
                    Color3 albedo = strip_albedo(*style.strip, u, v);
                    out = shade({0.0, 0.0, 1.0}, albedo,
                                static_cast<float>(style.strip->surface.roughness), 0.0f, light,
                                view);
                    break;
                }
                case SurfaceKind::Object: {
                    Vec3 world = cam.unproject(px, py, z);
                    Vec3 view = (cam.position() - world).normalized();
                    Vec3 normal = (n0 * w0 + n1 * w1 + n2 * w2).normalized();
                    Color3 albedo = object_albedo(style.material, u, v, world);
                    out = shade(normal, albedo, style.material.roughness,
                                style.material.metallic, light, view);
                    break;
                }
            }
            t.color[i] = out;
        }
    }
}

/// Clip a camera-space triangle against the near plane, then rasterize.
inline void raster_triangle(const RasterTarget& t, const Camera& cam, const Lighting& light,
                            const ClipVertex& a, const ClipVertex& b, const ClipVertex& c,
                            const DrawStyle& style, const PixelRect& scissor) {
    const double near = cam.near_plane();
    const ClipVertex* verts[3] = {&a, &b, &c};
    int inside = 0;
    for (auto* v : verts) inside += v->cam.z >= near ? 1 : 0;
    if (inside == 0) return;
    if (inside == 3) {
        raster_clipped(t, cam, light, a, b, c, style, scissor);
        return;
    }
    // Sutherland-Hodgman against z = near.
    ClipVertex poly[4];
    int n = 0;
    for (int i = 0; i < 3; ++i) {
        const ClipVertex& cur = *verts[i];
        const ClipVertex& nxt = *verts[(i + 1) % 3];
        bool cin = cur.cam.z >= near, nin = nxt.cam.z >= near;
        if (cin) poly[n++] = cur;
        if (cin != nin) {
            double tt = (near - cur.cam.z) / (nxt.cam.z - cur.cam.z);
            poly[n] = lerp_cv(cur, nxt, tt);
            poly[n].cam.z = near;  // exact, guards against rounding below the plane
            ++n;
        }
    }
    if (n >= 3) raster_clipped(t, cam, light, poly[0], poly[1], poly[2], style, scissor);
    if (n == 4) raster_clipped(t, cam, light, poly[0], poly[2], poly[3], style, scissor);
}

}  // namespace raster

/// World transform of an object pose: yaw about +z, then translation.
struct ObjectTransform {
    double c = 1.0, s = 0.0;
    Vec3 t;

    ObjectTransform() = default;
    ObjectTransform(double yaw_deg, Vec3 translation)
        : c(std::cos(deg2rad(yaw_deg))), s(std::sin(deg2rad(yaw_deg))), t(translation) {}

    Vec3 point(Vec3 p) const { return {c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y, p.z + t.z}; }
    Vec3 dir(Vec3 d) const { return {c * d.x - s * d.y, s * d.x + c * d.y, d.z}; }
};

/// True if the mesh's bounding sphere can intersect the viewing frustum.
inline bool sphere_visible(const Camera& cam, Vec3 center_world, double radius) {
    Vec3 c = cam.world_to_cam(center_world);
    if (c.z + radius < cam.near_plane()) return false;
    double fx = cam.fx(), cx = cam.cx(), cy = cam.cy();
    auto outside = [&](double nx, double nz, double coord) {
        double len = std::sqrt(nx * nx + nz * nz);
        return (nx * coord + nz * c.z) / len < -radius;
    };
    if (outside(fx, cx, c.x)) return false;            // left: fx*X + cx*Z >= 0
    if (outside(-fx, static_cast<double>(cam.width()) - cx, c.x)) return false;
    if (outside(fx, cy, c.y)) return false;            // top (y down)
    if (outside(-fx, static_cast<double>(cam.height()) - cy, c.y)) return false;
    return true;
}

/// Rasterize one placed mesh. Color pass optional (null target color).
inline void render_mesh(const RasterTarget& target, const Camera& cam, const Lighting& light,
                        const TriangleMesh& mesh, const ObjectTransform& xf,
                        const DrawStyle& style, const PixelRect& scissor) {
    std::vector<raster::ClipVertex> verts(mesh.vertices.size());
    for (size_t i = 0; i < mesh.vertices.size(); ++i) {
        const auto& mv = mesh.vertices[i];
        verts[i].cam = cam.world_to_cam(xf.point(mv.position));
        verts[i].normal = xf.dir(mv.normal);
        verts[i].u = mv.u;
        verts[i].v = mv.v;
    }
    for (const auto& tri : mesh.triangles)
        raster::raster_triangle(target, cam, light, verts[tri[0]], verts[tri[1]], verts[tri[2]],
                                style, scissor);
}

namespace raster {

inline void render_strips(const RasterTarget& target, const Camera& cam, const Lighting& light,
                          const SceneGraph& scene, int stride) {
    const auto& cl = *scene.centerline;
    const auto& pts = cl.grid_points();
    const auto& nrm = cl.grid_normals();
    const auto scissor = PixelRect::full(target.width, target.height);

    for (const auto& strip : scene.splines) {
        DrawStyle style;
        style.kind = SurfaceKind::Strip;
        style.strip = &strip;
        style.instance = 0;

        double le = strip.left_edge(), re = strip.right_edge();
        double half = strip.width / 2.0;
        for (size_t k = 0; k + 1 < pts.size(); k += static_cast<size_t>(stride)) {
            size_t k2 = std::min(k + static_cast<size_t>(stride), pts.size() - 1);
            Vec2 al2 = pts[k] + nrm[k] * le, ar2 = pts[k] + nrm[k] * re;
            Vec2 bl2 = pts[k2] + nrm[k2] * le, br2 = pts[k2] + nrm[k2] * re;
            double sa = strip.cumulative[k], sb = strip.cumulative[k2];

            ClipVertex al{cam.world_to_cam({al2.x, al2.y, 0.0}), {0, 0, 1}, sa, half};
            ClipVertex ar{cam.world_to_cam({ar2.x, ar2.y, 0.0}), {0, 0, 1}, sa, -half};
            ClipVertex bl{cam.world_to_cam({bl2.x, bl2.y, 0.0}), {0, 0, 1}, sb, half};
            ClipVertex br{cam.world_to_cam({br2.x, br2.y, 0.0}), {0, 0, 1}, sb, -half};
            raster_triangle(target, cam, light, al, ar, br, style, scissor);
            raster_triangle(target, cam, light, al, br, bl, style, scissor);
        }
    }
}

inline void render_terrain(const RasterTarget& target, const Camera& cam, const Lighting& light,
                           const SceneGraph& scene, const RenderConfig& rc) {
    // Flat backdrop plane under the road so the horizon reads as ground.
    Color3 ground{0.30f, 0.33f, 0.22f};
    int stretches = 0;
    for (const auto& s : scene.splines)
        if (s.kind == StripKind::SideStretch) {
            if (stretches == 0) ground = {0, 0, 0};
            ground += s.surface.base_color;
            stretches++;
        }
    if (stretches > 0) ground = ground * (0.9f / static_cast<float>(stretches));

    DrawStyle style;
    style.kind = SurfaceKind::Object;
    style.material.base_color = ground;
    style.material.roughness = 1.0f;
    style.material.texture_class = TextureClass::Flat;
    style.instance = 0;

    double e = rc.terrain_extent;
    Vec3 c = cam.position();
    double z = -rc.terrain_drop;
    ClipVertex q[4] = {
        {cam.world_to_cam({c.x - e, c.y - e, z}), {0, 0, 1}, 0.0, 0.0},
        {cam.world_to_cam({c.x + e, c.y - e, z}), {0, 0, 1}, 0.0, 0.0},
        {cam.world_to_cam({c.x + e, c.y + e, z}), {0, 0, 1}, 0.0, 0.0},
        {cam.world_to_cam({c.x - e, c.y + e, z}), {0, 0, 1}, 0.0, 0.0},
    };
    auto scissor = PixelRect::full(target.width, target.height);
    raster_triangle(target, cam, light, q[0], q[1], q[2], style, scissor);
    raster_triangle(target, cam, light, q[0], q[2], q[3], style, scissor);
}

inline void render_backdrop(const RasterTarget& target, const Camera& cam, const Lighting& light,
                            const SceneGraph& scene) {
    const Backdrop& b = *scene.backdrop;
    DrawStyle style;
    style.kind = SurfaceKind::Unlit;
    style.backdrop = &b;
    style.instance = 0;

    double d = b.depth;
    double margin = 0.18;
    auto corner = [&](double nx, double ny) {
        return cam.world_to_cam(cam.unproject(nx * cam.width(), ny * cam.height(), d));
    };
    ClipVertex q[4] = {
        {corner(-margin, -margin), {0, 0, 1}, 0.0, 0.0},
        {corner(1.0 + margin, -margin), {0, 0, 1}, 1.0, 0.0},
        {corner(1.0 + margin, 1.0 + margin), {0, 0, 1}, 1.0, 1.0},
        {corner(-margin, 1.0 + margin), {0, 0, 1}, 0.0, 1.0},
    };
    auto scissor = PixelRect::full(target.width, target.height);
    raster_triangle(target, cam, light, q[0], q[1], q[2], style, scissor);
    raster_triangle(target, cam, light, q[0], q[2], q[3], style, scissor);
}

}  // namespace raster

/// Sky radiance for every pixel the rasterizer left uncovered.
inline void render_sky(RenderBuffers& buf, const Camera& cam, const Lighting& light) {
    for (int y = 0; y < buf.height; ++y)
        for (int x = 0; x < buf.width; ++x) {
            size_t i = buf.idx(x, y);
            if (std::isinf(buf.depth[i]))
                buf.color[i] = sky_radiance(cam.pixel_ray_world(x + 0.5, y + 0.5), light);
        }
}

/// Linear -> display-referred transfer before the contrast/saturation post.
inline void tonemap_gamma(std::vector<Color3>& colors, double gamma) {
    auto inv = static_cast<float>(1.0 / gamma);
    for (auto& c : colors) {
        c = c.clamped();
        c.r = std::pow(c.r, inv);
        c.g = std::pow(c.g, inv);
        c.b = std::pow(c.b, inv);
    }
}

/// Contrast about mid-gray, then saturation about per-pixel luma, both clamped.
inline void apply_post(std::vector<Color3>& colors, const PostParams& post) {
    auto k = static_cast<float>(post.contrast_percent / 100.0);
    auto sat = static_cast<float>(post.saturation);
    for (auto& c : colors) {
        c.r = 0.5f + (c.r - 0.5f) * k;
        c.g = 0.5f + (c.g - 0.5f) * k;
        c.b = 0.5f + (c.b - 0.5f) * k;
        c = c.clamped();
        float gray = luma(c);
        c.r = gray + (c.r - gray) * sat;
        c.g = gray + (c.g - gray) * sat;
        c.b = gray + (c.b - gray) * sat;
        c = c.clamped();
    }
}

inline std::vector<uint8_t> to_rgb8(const std::vector<Color3>& colors) {
    std::vector<uint8_t> out(colors.size() * 3);
    for (size_t i = 0; i < colors.size(); ++i) {
        Color3 c = colors[i].clamped();
        out[3 * i + 0] = static_cast<uint8_t>(std::lround(c.r * 255.0f));
        out[3 * i + 1] = static_cast<uint8_t>(std::lround(c.g * 255.0f));
        out[3 * i + 2] = static_cast<uint8_t>(std::lround(c.b * 255.0f));
    }
    return out;
}

/// Depth buffer in export units: 16-bit centimeters, sky = 65535.
inline std::vector<uint16_t> depth_to_u16(const RenderBuffers& buf) {
    std::vector<uint16_t> out(buf.depth.size());
    for (size_t i = 0; i < buf.depth.size(); ++i) {
        float d = buf.depth[i];
        if (std::isinf(d)) {
            out[i] = 65535;
        } else {
            double cm = std::lround(static_cast<double>(d) * 100.0);
            out[i] = static_cast<uint16_t>(std::min(cm, 65535.0));
        }
    }
    return out;
}

/// Render all buffers for a scene: strips and objects z-buffered, sky fill,
/// then tone mapping and the contrast/saturation post, in place.
inline void render(const SceneGraph& scene, const Camera& cam, const Lighting& light,
                   const AssetLibrary& assets, RenderBuffers& buf,
                   const RenderConfig& rc = {}) {
    buf.reset(cam.width(), cam.height());
    auto target = RasterTarget::of(buf);
    auto scissor = PixelRect::full(buf.width, buf.height);

    if (scene.mode == SceneMode::SDR) {
        raster::render_terrain(target, cam, light, scene, rc);
        raster::render_strips(target, cam, light, scene, rc.strip_stride);
    } else if (scene.backdrop) {
        raster::render_backdrop(target, cam, light, scene);
    }

    for (const auto& obj : scene.objects) {
        const auto& mesh = assets.mesh(obj.asset.cls, obj.asset.variant_id);
        ObjectTransform xf(obj.yaw_deg, obj.position);
        auto b = mesh.bounds();
        Vec3 center = xf.point(b.center());
        double radius = b.extent().norm() / 2.0;
        if (!sphere_visible(cam, center, radius)) continue;

        DrawStyle style;
        style.kind = SurfaceKind::Object;
        style.material = obj.material;
        style.instance = obj.instance_id;
        render_mesh(target, cam, light, mesh, xf, style, scissor);
    }

    render_sky(buf, cam, light);
    tonemap_gamma(buf.color, rc.gamma);
    apply_post(buf.color, scene.post);
}

}  // namespace sdr
