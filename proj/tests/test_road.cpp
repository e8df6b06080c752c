#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <set>

#include "sdr/road.hpp"

namespace {

using sdr::build_context_splines;
using sdr::CenterlineSpline;
using sdr::ContextSpline;
using sdr::ControlPoint;
using sdr::frame_at;
using sdr::generate_centerline;
using sdr::generate_centerline_with;
using sdr::GlobalParams;
using sdr::make_stream;
using sdr::RoadParams;
using sdr::SideStretchStyle;
using sdr::StripKind;
using sdr::Vec2;

GlobalParams default_globals() {
    GlobalParams g;
    g.lane_count = 2;
    g.has_median = false;
    g.has_sidewalk = false;
    g.turn_decision_period = 10;
    g.lane_width = 3.5;
    g.median_width = 3.0;
    g.sidewalk_width = 2.0;
    g.gutter_width = 0.4;
    g.side_stretch_width = 20.0;
    return g;
}

size_t pick_straight(const std::vector<double>& legal) {
    for (size_t i = 0; i < legal.size(); ++i)
        if (legal[i] == 0.0) return i;
    return 0;
}

TEST(Centerline, AllStraightIsCollinear) {
    auto cl = generate_centerline_with(default_globals(), RoadParams{}, pick_straight);
    ASSERT_EQ(cl.control_points().size(), 100u);
    for (const auto& p : cl.control_points()) {
        EXPECT_DOUBLE_EQ(p.heading_deg, 0.0);
        EXPECT_NEAR(p.position.y, 0.0, 1e-12);
    }
    EXPECT_NEAR(cl.total_arclength(), 792.0, 1e-6);
}

TEST(Centerline, HeadingStaysBoundedForAllSeeds) {
    for (uint32_t f = 0; f < 10000; ++f) {
        auto rng = make_stream(1234, f, "centerline");
        auto cl = generate_centerline(rng, default_globals());
        double prev = 0.0;
        for (const auto& p : cl.control_points()) {
            double h = p.heading_deg;
            bool at_grid = std::fabs(h + 30.0) < 1e-9 || std::fabs(h) < 1e-9 ||
                           std::fabs(h - 30.0) < 1e-9;
            ASSERT_TRUE(at_grid) << "heading " << h << " frame " << f;
            double step = h - prev;
            bool legal_step = std::fabs(step + 30.0) < 1e-9 || std::fabs(step) < 1e-9 ||
                              std::fabs(step - 30.0) < 1e-9;
            ASSERT_TRUE(legal_step);
            prev = h;
        }
    }
}

TEST(Centerline, TurnsActuallyHappen) {
    std::set<int> headings_seen;
    for (uint32_t f = 0; f < 50; ++f) {
        auto rng = make_stream(77, f, "centerline");
        auto cl = generate_centerline(rng, default_globals());
        for (const auto& p : cl.control_points())
            headings_seen.insert(static_cast<int>(std::lround(p.heading_deg)));
    }
    EXPECT_EQ(headings_seen.size(), 3u);  // -30, 0, +30 all reachable
}

TEST(Centerline, ArclengthWithinPolylineBound) {
    for (uint32_t f = 0; f < 500; ++f) {
        auto rng = make_stream(9, f, "centerline");
        auto cl = generate_centerline(rng, default_globals());
        ASSERT_GE(cl.total_arclength(), 792.0 - 1e-6);
        ASSERT_LE(cl.total_arclength(), 800.0);
    }
}

TEST(Centerline, ArclengthParamRoundTrip) {
    auto rng = make_stream(3, 0, "centerline");
    auto cl = generate_centerline(rng, default_globals());
    auto draws = make_stream(3, 0, "stations");
    for (int i = 0; i < 1000; ++i) {
        double s = draws.uniform(0.0, cl.total_arclength());
        double u = cl.param_at_arclength(s);
        double s2 = cl.arclength_at_param(u);
        ASSERT_NEAR(s2, s, 0.01);
    }
}

TEST(Centerline, DegenerateInputsRejected) {
    EXPECT_THROW(CenterlineSpline({{Vec2{0, 0}, 0.0}}), std::invalid_argument);
    EXPECT_THROW(CenterlineSpline({{Vec2{0, 0}, 0.0}, {Vec2{0, 0}, 0.0}}),
                 std::invalid_argument);
}

std::shared_ptr<CenterlineSpline> straight_centerline(int n = 100, double seg = 8.0) {
    std::vector<ControlPoint> pts;
    for (int i = 0; i < n; ++i) pts.push_back({Vec2{i * seg, 0.0}, 0.0});
    return std::make_shared<CenterlineSpline>(std::move(pts));
}

TEST(ContextSplines, TwoLaneLayout) {
    auto g = default_globals();
    auto rng = make_stream(1, 0, "splines");
    auto strips =
        build_context_splines(straight_centerline(), g, rng, SideStretchStyle::Fields);
    ASSERT_EQ(strips.size(), 6u);
    std::vector<StripKind> kinds;
    for (const auto& s : strips) kinds.push_back(s.kind);
    std::vector<StripKind> expect = {StripKind::SideStretch, StripKind::Gutter, StripKind::Lane,
                                     StripKind::Lane, StripKind::Gutter, StripKind::SideStretch};
    EXPECT_EQ(kinds, expect);
    EXPECT_EQ(strips[2].lane_index, -1);
    EXPECT_EQ(strips[3].lane_index, 1);

    double total_width = 0.0;
    for (const auto& s : strips) total_width += s.width;
    double outer_span = strips.front().left_edge() - strips.back().right_edge();
    EXPECT_NEAR(total_width, outer_span, 1e-9);
}

TEST(ContextSplines, SixLaneMedianSidewalkLayout) {
    auto g = default_globals();
    g.lane_count = 6;
    g.has_median = true;
    g.has_sidewalk = true;
    auto rng = make_stream(1, 0, "splines");
    auto strips =
        build_context_splines(straight_centerline(), g, rng, SideStretchStyle::Buildings);
    // 6 lanes + 1 median + 2 gutters + 2 sidewalks + 2 side stretches
    ASSERT_EQ(strips.size(), 13u);
    int lanes = 0, medians = 0, sidewalks = 0, gutters = 0, stretches = 0;
    for (const auto& s : strips) {
        switch (s.kind) {
            case StripKind::Lane: lanes++; break;
            case StripKind::Median: medians++; break;
            case StripKind::Sidewalk: sidewalks++; break;
            case StripKind::Gutter: gutters++; break;
            case StripKind::SideStretch: stretches++; break;
        }
    }
    EXPECT_EQ(lanes, 6);
    EXPECT_EQ(medians, 1);
    EXPECT_EQ(sidewalks, 2);
    EXPECT_EQ(gutters, 2);
    EXPECT_EQ(stretches, 2);
}

TEST(ContextSplines, OddLaneCountPutsExtraLaneOnEgoSide) {
    auto g = default_globals();
    g.lane_count = 3;
    g.has_median = true;
    auto rng = make_stream(1, 0, "splines");
    auto strips =
        build_context_splines(straight_centerline(), g, rng, SideStretchStyle::Fields);
    int ego = 0, oncoming = 0;
    for (const auto& s : strips) {
        if (s.kind != StripKind::Lane) continue;
        (s.lane_index > 0 ? ego : oncoming)++;
        if (s.lane_index > 0) {
            EXPECT_LT(s.lateral_offset_center, 0.0);
        } else {
            EXPECT_GT(s.lateral_offset_center, 0.0);
        }
    }
    EXPECT_EQ(ego, 2);
    EXPECT_EQ(oncoming, 1);
}

TEST(ContextSplines, CrossSectionTilesExactly) {
    for (uint32_t f = 0; f < 20; ++f) {
        auto rng = make_stream(55, f, "centerline");
        auto g = default_globals();
        g.lane_count = static_cast<int>(1 + f % 6);
        g.has_median = (f % 2) == 0;
        g.has_sidewalk = (f % 3) == 0;
        auto cl = std::make_shared<CenterlineSpline>(generate_centerline(rng, g));
        auto srng = make_stream(55, f, "splines");
        auto strips = build_context_splines(cl, g, srng, SideStretchStyle::Houses);
        for (size_t i = 0; i + 1 < strips.size(); ++i)
            ASSERT_NEAR(strips[i].right_edge(), strips[i + 1].left_edge(), 1e-9);
        // Neighboring edges coincide in world space at sampled stations.
        for (int k = 0; k < 200; ++k) {
            double u = cl->max_param() * k / 199.0;
            Vec2 c = cl->point_at(u);
            Vec2 n = cl->normal_at(u);
            for (size_t i = 0; i + 1 < strips.size(); ++i) {
                Vec2 a = c + n * strips[i].right_edge();
                Vec2 b = c + n * strips[i + 1].left_edge();
                ASSERT_NEAR((a - b).norm(), 0.0, 1e-3);
            }
        }
    }
}

TEST(FrameAt, StraightCenterlineBasics) {
    auto cl = straight_centerline();
    auto f = frame_at(*cl, 50.0, 0.0);
    EXPECT_NEAR(f.position.x, 50.0, 1e-6);
    EXPECT_NEAR(f.position.y, 0.0, 1e-9);
    EXPECT_NEAR(f.position.z, 0.0, 1e-12);
    EXPECT_NEAR(f.tangent.x, 1.0, 1e-9);
    EXPECT_NEAR(f.tangent.y, 0.0, 1e-9);
}

TEST(FrameAt, StraightOffsetIsParallelLine) {
    auto cl = straight_centerline();
    ContextSpline strip;
    strip.kind = StripKind::Lane;
    strip.lateral_offset_center = 3.5;
    strip.width = 3.5;
    strip.centerline = cl;
    strip.build_arclength_table();
    for (int i = 0; i < 100; ++i) {
        double s = 780.0 * i / 99.0;
        auto f = frame_at(strip, s, 0.0);
        ASSERT_NEAR(f.position.y, 3.5, 1e-6);
        ASSERT_NEAR(f.position.x, s, 1e-3);
    }
    EXPECT_NEAR(strip.arclength(), cl->total_arclength(), 1e-6);
}

TEST(FrameAt, FramesAreOrthonormal) {
    auto rng = make_stream(31, 5, "centerline");
    auto g = default_globals();
    auto cl = std::make_shared<CenterlineSpline>(generate_centerline(rng, g));
    auto srng = make_stream(31, 5, "splines");
    auto strips = build_context_splines(cl, g, srng, SideStretchStyle::Fields);
    auto draws = make_stream(31, 5, "probe");
    for (int i = 0; i < 500; ++i) {
        const auto& strip = strips[static_cast<size_t>(
            draws.uniform_int(0, static_cast<int64_t>(strips.size()) - 1))];
        double s = draws.uniform(0.0, strip.arclength());
        double u = draws.uniform(-strip.width / 2.0, strip.width / 2.0);
        auto f = frame_at(strip, s, u);
        ASSERT_LT(std::fabs(f.tangent.dot(f.normal)), 1e-9);
        ASSERT_LT(std::fabs(f.tangent.dot(f.up)), 1e-9);
        ASSERT_NEAR(f.tangent.norm(), 1.0, 1e-9);
        ASSERT_NEAR(f.normal.norm(), 1.0, 1e-9);
        ASSERT_NEAR(f.up.norm(), 1.0, 1e-9);
    }
}

// Parallel-curve property: over a circular arc, the offset curve's length
// differs from the base curve's by (turn angle in radians) * offset.
TEST(FrameAt, OffsetCurveArclengthOnArc) {
    const double R = 60.0;
    const double theta = sdr::kPi / 2.0;
    std::vector<ControlPoint> pts;
    const int n = 60;
    for (int i = 0; i < n; ++i) {
        double a = theta * i / (n - 1);
        pts.push_back({Vec2{R * std::sin(a), R * (1.0 - std::cos(a))},
                       sdr::rad2deg(a)});
    }
    auto cl = std::make_shared<CenterlineSpline>(std::move(pts));

    for (double offset : {3.0, -3.0}) {
        ContextSpline strip;
        strip.kind = StripKind::Lane;
        strip.lateral_offset_center = offset;
        strip.width = 3.5;
        strip.centerline = cl;
        strip.build_arclength_table();
        // Left normal points toward the arc center, so +offset shortens the curve.
        double expected = cl->total_arclength() - theta * offset;
        EXPECT_NEAR(strip.arclength(), expected, 0.01 * expected);
    }
}

TEST(FrameAt, OutOfRangeRejected) {
    auto cl = straight_centerline();
    ContextSpline strip;
    strip.kind = StripKind::Lane;
    strip.lateral_offset_center = 0.0;
    strip.width = 3.5;
    strip.centerline = cl;
    strip.build_arclength_table();
    EXPECT_THROW(frame_at(strip, -1.0, 0.0), std::domain_error);
    EXPECT_THROW(frame_at(strip, strip.arclength() + 1.0, 0.0), std::domain_error);
    EXPECT_THROW(frame_at(strip, 10.0, 2.0), std::domain_error);
    EXPECT_NO_THROW(frame_at(strip, 10.0, 1.7));
}

TEST(ContextSplines, StripArclengthRoundTrip) {
    auto rng = make_stream(8, 2, "centerline");
    auto g = default_globals();
    auto cl = std::make_shared<CenterlineSpline>(generate_centerline(rng, g));
    auto srng = make_stream(8, 2, "splines");
    auto strips = build_context_splines(cl, g, srng, SideStretchStyle::Fields);
    auto draws = make_stream(8, 2, "probe");
    for (const auto& strip : strips) {
        for (int i = 0; i < 100; ++i) {
            double s = draws.uniform(0.0, strip.arclength());
            double u = strip.param_at_arclength(s);
            ASSERT_NEAR(strip.arclength_at_param(u), s, 0.01);
        }
    }
}

TEST(ContextSplines, ImperfectionsStayInsideLaneStrips) {
    for (uint32_t f = 0; f < 100; ++f) {
        auto rng = make_stream(91, f, "centerline");
        auto g = default_globals();
        auto cl = std::make_shared<CenterlineSpline>(generate_centerline(rng, g));
        auto srng = make_stream(91, f, "splines");
        auto strips = build_context_splines(cl, g, srng, SideStretchStyle::Fields);
        for (const auto& strip : strips) {
            if (strip.kind != StripKind::Lane) {
                ASSERT_TRUE(strip.imperfections.empty());
            }
            for (const auto& imp : strip.imperfections) {
                ASSERT_LE(std::fabs(imp.lateral), strip.width / 2.0 + 1e-9);
                ASSERT_GE(imp.station, 0.0);
                ASSERT_LE(imp.station, strip.arclength());
                ASSERT_GE(imp.intensity, 0.0);
                ASSERT_LE(imp.intensity, 1.0);
            }
        }
    }
}

}  // namespace
