#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sdr/math.hpp"

namespace sdr {

struct ControlPoint {
    Vec2 position;
    double heading_deg = 0.0;  // relative to the initial road direction
};

/// Centripetal Catmull-Rom curve through the control points, with a cached
/// cumulative arclength table for s <-> parameter lookups. The curve parameter
/// runs over [0, n-1], one unit per control-point segment.
class CenterlineSpline {
public:
    static constexpr int kSamplesPerSegment = 32;

    explicit CenterlineSpline(std::vector<ControlPoint> points)
        : points_(std::move(points)) {
        if (points_.size() < 2)
            throw std::invalid_argument("centerline needs at least 2 control points");
        for (size_t i = 1; i < points_.size(); ++i) {
            if ((points_[i].position - points_[i - 1].position).norm() < 1e-9)
                throw std::invalid_argument("centerline has coincident control points");
        }
        build_table();
        if (total_arclength() < 1e-9)
            throw std::invalid_argument("centerline has zero length");
    }

    const std::vector<ControlPoint>& control_points() const { return points_; }
    double max_param() const { return static_cast<double>(points_.size() - 1); }

    Vec2 point_at(double u) const {
        int seg;
        double t;
        locate(u, seg, t);
        return eval_segment(seg, t);
    }

    /// Unit tangent, central finite difference in parameter space.
    Vec2 tangent_at(double u) const {
        const double du = 1e-4;
        double a = std::max(0.0, u - du);
        double b = std::min(max_param(), u + du);
        Vec2 d = point_at(b) - point_at(a);
        return d.normalized();
    }

    /// Ground-plane left normal of the tangent.
    Vec2 normal_at(double u) const { return tangent_at(u).perp(); }

    double total_arclength() const { return cumulative_.back(); }

    double arclength_at_param(double u) const {
        double g = clamp(u, 0.0, max_param()) * kSamplesPerSegment;
        auto k = static_cast<size_t>(g);
        if (k + 1 >= cumulative_.size()) return cumulative_.back();
        double f = g - static_cast<double>(k);
        return lerp(cumulative_[k], cumulative_[k + 1], f);
    }

    double param_at_arclength(double s) const { return param_from_table(cumulative_, s); }

    /// Grid samples shared with offset-curve tables (see ContextSpline).
    const std::vector<Vec2>& grid_points() const { return grid_points_; }
    const std::vector<Vec2>& grid_normals() const { return grid_normals_; }
    double grid_param(size_t k) const {
        return static_cast<double>(k) / kSamplesPerSegment;
    }

    /// s <-> param lookup over an externally built cumulative table that uses
    /// this spline's grid.
    double param_from_table(const std::vector<double>& cumulative, double s) const {
        s = clamp(s, 0.0, cumulative.back());
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), s);
        size_t hi = std::min<size_t>(static_cast<size_t>(it - cumulative.begin()),
                                     cumulative.size() - 1);
        if (hi == 0) return 0.0;
        size_t lo = hi - 1;
        double span = cumulative[hi] - cumulative[lo];
        double f = span > 0.0 ? (s - cumulative[lo]) / span : 0.0;
        return (static_cast<double>(lo) + f) / kSamplesPerSegment;
    }

private:
    void locate(double u, int& seg, double& t) const {
        u = clamp(u, 0.0, max_param());
        seg = std::min(static_cast<int>(u), static_cast<int>(points_.size()) - 2);
        t = u - seg;
    }

    Vec2 ext_point(int i) const {
        // Reflected phantom endpoints keep collinear inputs exactly collinear.
        int n = static_cast<int>(points_.size());
        if (i < 0) return points_[0].position * 2.0 - points_[1].position;
        if (i >= n) return points_[n - 1].position * 2.0 - points_[n - 2].position;
        return points_[i].position;
    }

    /// Barry-Goldman evaluation of the centripetal segment seg at local t in [0,1].
    Vec2 eval_segment(int seg, double t) const {
        Vec2 p0 = ext_point(seg - 1), p1 = ext_point(seg), p2 = ext_point(seg + 1),
             p3 = ext_point(seg + 2);
        auto knot = [](Vec2 a, Vec2 b) { return std::sqrt((b - a).norm()); };
        double t0 = 0.0;
        double t1 = t0 + std::max(knot(p0, p1), 1e-9);
        double t2 = t1 + std::max(knot(p1, p2), 1e-9);
        double t3 = t2 + std::max(knot(p2, p3), 1e-9);
        double tt = t1 + t * (t2 - t1);

        auto mix = [](Vec2 a, Vec2 b, double ta, double tb, double tq) {
            double w = (tq - ta) / (tb - ta);
            return a * (1.0 - w) + b * w;
        };
        Vec2 a1 = mix(p0, p1, t0, t1, tt);
        Vec2 a2 = mix(p1, p2, t1, t2, tt);
        Vec2 a3 = mix(p2, p3, t2, t3, tt);
        Vec2 b1 = mix(a1, a2, t0, t2, tt);
        Vec2 b2 = mix(a2, a3, t1, t3, tt);
        return mix(b1, b2, t1, t2, tt);
    }

    void build_table() {
        size_t n_grid = (points_.size() - 1) * kSamplesPerSegment + 1;
        grid_points_.resize(n_grid);
        grid_normals_.resize(n_grid);
        cumulative_.resize(n_grid);
        for (size_t k = 0; k < n_grid; ++k) {
            double u = grid_param(k);
            grid_points_[k] = point_at(u);
        }
        // Grid normals from chord directions; endpoints use one-sided chords.
        for (size_t k = 0; k < n_grid; ++k) {
            size_t a = k == 0 ? 0 : k - 1;
            size_t b = k + 1 < n_grid ? k + 1 : k;
            grid_normals_[k] = (grid_points_[b] - grid_points_[a]).normalized().perp();
        }
        cumulative_[0] = 0.0;
        for (size_t k = 1; k < n_grid; ++k)
            cumulative_[k] = cumulative_[k - 1] + (grid_points_[k] - grid_points_[k - 1]).norm();
    }

    std::vector<ControlPoint> points_;
    std::vector<Vec2> grid_points_;
    std::vector<Vec2> grid_normals_;
    std::vector<double> cumulative_;
};

}  // namespace sdr
