#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdr/globals.hpp"
#include "sdr/material.hpp"
#include "sdr/math.hpp"
#include "sdr/rng.hpp"
#include "sdr/spline.hpp"

namespace sdr {

struct RoadParams {
    double segment_length = 8.0;  // meters between control points
    int control_points = 100;
    double turn_angle_deg = 30.0;
    double imperfections_per_100m = 2.0;  // per lane strip
};

enum class StripKind { Lane, Median, Sidewalk, Gutter, SideStretch };

inline const char* to_string(StripKind k) {
    switch (k) {
        case StripKind::Lane: return "lane";
        case StripKind::Median: return "median";
        case StripKind::Sidewalk: return "sidewalk";
        case StripKind::Gutter: return "gutter";
        case StripKind::SideStretch: return "side_stretch";
    }
    return "?";
}

struct SurfaceAppearance {
    TextureClass texture = TextureClass::Asphalt;
    Color3 base_color{0.3f, 0.3f, 0.3f};
    double darkness = 0.5;   // [0,1]
    double roughness = 0.9;  // [0,1]
};

struct Imperfection {
    enum class Kind { Pothole, Crack, OilSpill };
    Kind kind = Kind::Pothole;
    double station = 0.0;  // meters along the strip
    double lateral = 0.0;  // meters from the strip center
    double extent = 1.0;   // meters
    double intensity = 0.5;  // [0,1]
};

inline const char* to_string(Imperfection::Kind k) {
    switch (k) {
        case Imperfection::Kind::Pothole: return "pothole";
        case Imperfection::Kind::Crack: return "crack";
        case Imperfection::Kind::OilSpill: return "oil_spill";
    }
    return "?";
}

/// One strip of the road cross-section. Shares the centerline's shape at a
/// constant lateral offset; carries its own arclength table for the offset curve.
struct ContextSpline {
    StripKind kind = StripKind::Lane;
    int lane_index = 0;  // lanes only; positive = ego side, negative = oncoming
    double lateral_offset_center = 0.0;
    double width = 0.0;
    SurfaceAppearance surface;
    std::vector<Imperfection> imperfections;
    std::shared_ptr<const CenterlineSpline> centerline;
    std::vector<double> cumulative;  // offset-curve arclength over the shared grid

    void build_arclength_table() {
        const auto& pts = centerline->grid_points();
        const auto& nrm = centerline->grid_normals();
        cumulative.resize(pts.size());
        cumulative[0] = 0.0;
        auto off = [&](size_t k) { return pts[k] + nrm[k] * lateral_offset_center; };
        for (size_t k = 1; k < pts.size(); ++k)
            cumulative[k] = cumulative[k - 1] + (off(k) - off(k - 1)).norm();
    }

    double arclength() const { return cumulative.back(); }
    double param_at_arclength(double s) const {
        return centerline->param_from_table(cumulative, s);
    }
    double arclength_at_param(double u) const {
        double g = clamp(u, 0.0, centerline->max_param()) * CenterlineSpline::kSamplesPerSegment;
        auto k = static_cast<size_t>(g);
        if (k + 1 >= cumulative.size()) return cumulative.back();
        return lerp(cumulative[k], cumulative[k + 1], g - static_cast<double>(k));
    }

    Vec2 offset_point_at_param(double u) const {
        Vec2 c = centerline->point_at(u);
        Vec2 n = centerline->normal_at(u);
        return c + n * lateral_offset_center;
    }

    double left_edge() const { return lateral_offset_center + width / 2.0; }
    double right_edge() const { return lateral_offset_center - width / 2.0; }
};

/// Placement frame on a strip: position plus an orthonormal
/// (tangent, lateral normal, up) basis. Flat ground, so up is world vertical.
struct SplineFrame {
    Vec3 position;
    Vec3 tangent;
    Vec3 normal;
    Vec3 up{0.0, 0.0, 1.0};

    double heading_deg() const { return rad2deg(std::atan2(tangent.y, tangent.x)); }
};

using TurnDecider = std::function<size_t(const std::vector<double>& legal_deltas)>;

/// Build the road centerline from turn decisions. Every `turn_decision_period`
/// control points a turn of {+A, 0, -A} degrees is chosen among the deltas that
/// keep cumulative heading within [-A, +A], which rules out hairpins.
inline CenterlineSpline generate_centerline_with(const GlobalParams& globals,
                                                 const RoadParams& road,
                                                 const TurnDecider& decide) {
    int n = road.control_points;
    if (n < 2) throw std::invalid_argument("control_points must be >= 2");
    int period = std::max(1, globals.turn_decision_period);
    double A = road.turn_angle_deg;

    std::vector<ControlPoint> pts(static_cast<size_t>(n));
    pts[0].position = {0.0, 0.0};
    double heading = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        if (i % period == 0) {
            std::vector<double> legal;
            for (double delta : {A, 0.0, -A})
                if (std::fabs(heading + delta) <= A + 1e-9) legal.push_back(delta);
            heading += legal[decide(legal)];
        }
        pts[static_cast<size_t>(i)].heading_deg = heading;
        double h = deg2rad(heading);
        pts[static_cast<size_t>(i) + 1].position =
            pts[static_cast<size_t>(i)].position +
            Vec2{std::cos(h), std::sin(h)} * road.segment_length;
    }
    pts[static_cast<size_t>(n) - 1].heading_deg = heading;
    return CenterlineSpline(std::move(pts));
}

inline CenterlineSpline generate_centerline(RngStream& rng, const GlobalParams& globals,
                                            const RoadParams& road = {}) {
    return generate_centerline_with(globals, road, [&rng](const std::vector<double>& legal) {
        return static_cast<size_t>(rng.uniform_int(0, static_cast<int64_t>(legal.size()) - 1));
    });
}

namespace detail {

inline SurfaceAppearance sample_surface(RngStream& rng, StripKind kind,
                                        SideStretchStyle style) {
    SurfaceAppearance s;
    switch (kind) {
        case StripKind::Lane: {
            s.texture = TextureClass::Asphalt;
            s.darkness = rng.uniform(0.35, 0.85);
            float v = static_cast<float>(0.62 - 0.52 * s.darkness);
            s.base_color = {v * 0.96f, v * 0.98f, v * 1.04f};
            s.roughness = rng.uniform(0.75, 1.0);
            break;
        }
        case StripKind::Gutter: {
            bool concrete = rng.bernoulli(0.5);
            s.texture = concrete ? TextureClass::Concrete : TextureClass::Asphalt;
            s.darkness = rng.uniform(0.2, 0.7);
            float v = static_cast<float>(concrete ? 0.75 - 0.35 * s.darkness
                                                  : 0.6 - 0.45 * s.darkness);
            s.base_color = {v, v * 0.99f, v * 0.97f};
            s.roughness = rng.uniform(0.7, 1.0);
            break;
        }
        case StripKind::Median: {
            s.texture = TextureClass::Grass;
            s.base_color = hsv_to_rgb(rng.uniform(85.0, 130.0), rng.uniform(0.45, 0.75),
                                      rng.uniform(0.25, 0.5));
            s.darkness = rng.uniform(0.3, 0.7);
            s.roughness = 1.0;
            break;
        }
        case StripKind::Sidewalk: {
            s.texture = TextureClass::Concrete;
            float v = static_cast<float>(rng.uniform(0.45, 0.72));
            s.base_color = {v, v * 0.985f, v * 0.955f};
            s.darkness = rng.uniform(0.1, 0.5);
            s.roughness = rng.uniform(0.7, 1.0);
            break;
        }
        case StripKind::SideStretch: {
            if (style == SideStretchStyle::Buildings && rng.bernoulli(0.6)) {
                s.texture = TextureClass::Concrete;
                float v = static_cast<float>(rng.uniform(0.4, 0.68));
                s.base_color = {v, v * 0.99f, v * 0.96f};
            } else if (rng.bernoulli(0.75)) {
                s.texture = TextureClass::Grass;
                s.base_color = hsv_to_rgb(rng.uniform(70.0, 130.0), rng.uniform(0.35, 0.75),
                                          rng.uniform(0.22, 0.55));
            } else {
                s.texture = TextureClass::Dirt;
                s.base_color = hsv_to_rgb(rng.uniform(25.0, 45.0), rng.uniform(0.3, 0.6),
                                          rng.uniform(0.28, 0.55));
            }
            s.darkness = rng.uniform(0.2, 0.8);
            s.roughness = 1.0;
            break;
        }
    }
    return s;
}

inline void scatter_imperfections(RngStream& rng, ContextSpline& strip, double per_100m) {
    double len = strip.arclength();
    int count = static_cast<int>(rng.uniform(0.0, per_100m) * len / 100.0);
    for (int i = 0; i < count; ++i) {
        Imperfection imp;
        int k = static_cast<int>(rng.uniform_int(0, 2));
        imp.kind = static_cast<Imperfection::Kind>(k);
        imp.station = rng.uniform(0.0, len);
        imp.extent = imp.kind == Imperfection::Kind::Crack ? rng.uniform(1.0, 4.0)
                                                           : rng.uniform(0.3, 1.5);
        double margin = std::min(strip.width / 2.0, imp.extent / 2.0);
        imp.lateral = rng.uniform(-(strip.width / 2.0 - margin * 0.5),
                                  strip.width / 2.0 - margin * 0.5);
        imp.lateral = clamp(imp.lateral, -strip.width / 2.0, strip.width / 2.0);
        imp.intensity = rng.uniform(0.3, 1.0);
        strip.imperfections.push_back(imp);
    }
}

}  // namespace detail

/// Lay out the cross-section strips around the centerline. Lanes split across
/// directions (odd counts put the extra lane on the ego side, negative lateral);
/// each side then gets a gutter, an optional sidewalk, and a side stretch.
/// Strips are emitted left-to-right and tile the cross-section exactly.
inline std::vector<ContextSpline> build_context_splines(
    std::shared_ptr<const CenterlineSpline> centerline, const GlobalParams& globals,
    RngStream& rng, SideStretchStyle style, const RoadParams& road = {}) {
    if (globals.lane_count < 1) throw std::invalid_argument("lane_count must be >= 1");

    int ego_lanes = (globals.lane_count + 1) / 2;       // right side, negative lateral
    int oncoming_lanes = globals.lane_count / 2;        // left side
    double median_half = globals.has_median ? globals.median_width / 2.0 : 0.0;

    struct Slot {
        StripKind kind;
        int lane_index;
        double left, right;  // lateral edges, left > right
    };
    std::vector<Slot> slots;

    // Left (oncoming) side, outermost first.
    {
        double edge = median_half + oncoming_lanes * globals.lane_width;
        double cursor = edge + globals.gutter_width +
                        (globals.has_sidewalk ? globals.sidewalk_width : 0.0) +
                        globals.side_stretch_width;
        slots.push_back({StripKind::SideStretch, 0, cursor, cursor - globals.side_stretch_width});
        cursor -= globals.side_stretch_width;
        if (globals.has_sidewalk) {
            slots.push_back({StripKind::Sidewalk, 0, cursor, cursor - globals.sidewalk_width});
            cursor -= globals.sidewalk_width;
        }
        slots.push_back({StripKind::Gutter, 0, cursor, cursor - globals.gutter_width});
        cursor -= globals.gutter_width;
        for (int i = oncoming_lanes; i >= 1; --i) {
            slots.push_back({StripKind::Lane, -i, cursor, cursor - globals.lane_width});
            cursor -= globals.lane_width;
        }
    }
    if (globals.has_median)
        slots.push_back({StripKind::Median, 0, median_half, -median_half});
    // Right (ego) side, innermost first.
    {
        double cursor = -median_half;
        for (int i = 1; i <= ego_lanes; ++i) {
            slots.push_back({StripKind::Lane, i, cursor, cursor - globals.lane_width});
            cursor -= globals.lane_width;
        }
        slots.push_back({StripKind::Gutter, 0, cursor, cursor - globals.gutter_width});
        cursor -= globals.gutter_width;
        if (globals.has_sidewalk) {
            slots.push_back({StripKind::Sidewalk, 0, cursor, cursor - globals.sidewalk_width});
            cursor -= globals.sidewalk_width;
        }
        slots.push_back({StripKind::SideStretch, 0, cursor, cursor - globals.side_stretch_width});
    }

    std::vector<ContextSpline> strips;
    strips.reserve(slots.size());
    for (const auto& slot : slots) {
        ContextSpline strip;
        strip.kind = slot.kind;
        strip.lane_index = slot.lane_index;
        strip.lateral_offset_center = (slot.left + slot.right) / 2.0;
        strip.width = slot.left - slot.right;
        strip.centerline = centerline;
        strip.surface = detail::sample_surface(rng, slot.kind, style);
        strip.build_arclength_table();
        if (slot.kind == StripKind::Lane)
            detail::scatter_imperfections(rng, strip, road.imperfections_per_100m);
        strips.push_back(std::move(strip));
    }
    return strips;
}

namespace detail {

inline SplineFrame frame_from_offset_curve(const CenterlineSpline& cl, double u,
                                           double offset_center, double lateral) {
    auto off_pt = [&](double uu) {
        Vec2 c = cl.point_at(uu);
        Vec2 n = cl.normal_at(uu);
        return c + n * offset_center;
    };
    const double du = 1e-4;
    double ua = std::max(0.0, u - du);
    double ub = std::min(cl.max_param(), u + du);
    Vec2 tan2 = (off_pt(ub) - off_pt(ua)).normalized();
    Vec2 nrm2 = tan2.perp();
    Vec2 pos2 = cl.point_at(u) + cl.normal_at(u) * (offset_center + lateral);

    SplineFrame f;
    f.position = {pos2.x, pos2.y, 0.0};
    f.tangent = {tan2.x, tan2.y, 0.0};
    f.normal = {nrm2.x, nrm2.y, 0.0};
    return f;
}

}  // namespace detail

/// Frame on the centerline at arclength s, lateral u.
inline SplineFrame frame_at(const CenterlineSpline& centerline, double s, double u) {
    if (s < -1e-9 || s > centerline.total_arclength() + 1e-9)
        throw std::domain_error("frame_at: arclength out of range");
    return detail::frame_from_offset_curve(centerline, centerline.param_at_arclength(s), 0.0, u);
}

/// Frame on a strip at its own arclength s; u is measured from the strip center
/// and must stay within the strip.
inline SplineFrame frame_at(const ContextSpline& strip, double s, double u) {
    if (s < -1e-9 || s > strip.arclength() + 1e-9)
        throw std::domain_error("frame_at: arclength out of range");
    if (std::fabs(u) > strip.width / 2.0 + 1e-9)
        throw std::domain_error("frame_at: lateral offset outside strip");
    return detail::frame_from_offset_curve(*strip.centerline, strip.param_at_arclength(s),
                                           strip.lateral_offset_center, u);
}

inline double arclength(const CenterlineSpline& s) { return s.total_arclength(); }
inline double arclength(const ContextSpline& s) { return s.arclength(); }

}  // namespace sdr
