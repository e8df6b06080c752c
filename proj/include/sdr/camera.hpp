#pragma once

#include <cmath>
#include <optional>

#include "sdr/error.hpp"
#include "sdr/math.hpp"

namespace sdr {

/// Pinhole camera. World is z-up; the camera frame follows the usual
/// detection-dataset convention: X right, Y down, Z forward. Projection is
/// x = cx + fx*(X/Z), y = cy + fy*(Y/Z), square pixels, principal point at the
/// image center.
class Camera {
public:
    Camera(Vec3 position, double yaw_deg, double pitch_deg, double fov_h_deg, int width,
           int height, double near_plane = 0.1)
        : pos_(position), yaw_deg_(yaw_deg), pitch_deg_(pitch_deg), fov_h_deg_(fov_h_deg),
          width_(width), height_(height), near_(near_plane) {
        if (fov_h_deg <= 10.0 || fov_h_deg >= 170.0)
            throw ConfigError("camera fov must be in (10, 170) degrees");
        if (width < 1 || height < 1) throw ConfigError("camera resolution must be positive");
        double yaw = deg2rad(yaw_deg), pitch = deg2rad(pitch_deg);
        forward_ = {std::cos(pitch) * std::cos(yaw), std::cos(pitch) * std::sin(yaw),
                    std::sin(pitch)};
        right_ = forward_.cross(Vec3{0.0, 0.0, 1.0}).normalized();
        down_ = forward_.cross(right_);
        fx_ = (width / 2.0) / std::tan(deg2rad(fov_h_deg) / 2.0);
        cx_ = width / 2.0;
        cy_ = height / 2.0;
    }

    Vec3 position() const { return pos_; }
    double yaw_deg() const { return yaw_deg_; }
    double pitch_deg() const { return pitch_deg_; }
    double fov_h_deg() const { return fov_h_deg_; }
    int width() const { return width_; }
    int height() const { return height_; }
    double near_plane() const { return near_; }
    double fx() const { return fx_; }
    double fy() const { return fx_; }
    double cx() const { return cx_; }
    double cy() const { return cy_; }
    Vec3 forward() const { return forward_; }
    Vec3 right() const { return right_; }
    Vec3 down() const { return down_; }

    Vec3 world_to_cam(Vec3 p) const {
        Vec3 d = p - pos_;
        return {d.dot(right_), d.dot(down_), d.dot(forward_)};
    }

    Vec3 cam_to_world(Vec3 c) const {
        return pos_ + right_ * c.x + down_ * c.y + forward_ * c.z;
    }

    struct Projected {
        double x, y, depth;
    };

    /// Projection of a camera-frame point; requires depth beyond the near plane.
    std::optional<Projected> project_cam(Vec3 c) const {
        if (c.z < near_) return std::nullopt;
        return Projected{cx_ + fx_ * (c.x / c.z), cy_ + fx_ * (c.y / c.z), c.z};
    }

    std::optional<Projected> project(Vec3 world) const { return project_cam(world_to_cam(world)); }

    /// Inverse of project: pixel + depth back to the world point.
    Vec3 unproject(double px, double py, double depth) const {
        double X = (px - cx_) * depth / fx_;
        double Y = (py - cy_) * depth / fx_;
        return cam_to_world({X, Y, depth});
    }

    /// Camera-space ray direction through a pixel center (unit length).
    Vec3 pixel_ray_cam(double px, double py) const {
        return Vec3{(px - cx_) / fx_, (py - cy_) / fx_, 1.0}.normalized();
    }

    Vec3 pixel_ray_world(double px, double py) const {
        Vec3 r = pixel_ray_cam(px, py);
        return (right_ * r.x + down_ * r.y + forward_ * r.z).normalized();
    }

    /// True if a camera-frame point lies inside the viewing frustum
    /// (within the image when projected and depth >= near).
    bool in_frustum_cam(Vec3 c) const {
        auto p = project_cam(c);
        return p && p->x >= 0.0 && p->x <= width_ && p->y >= 0.0 && p->y <= height_;
    }

private:
    Vec3 pos_;
    double yaw_deg_, pitch_deg_, fov_h_deg_;
    int width_, height_;
    double near_;
    Vec3 forward_, right_, down_;
    double fx_, cx_, cy_;
};

}  // namespace sdr
