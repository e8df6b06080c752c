#pragma once

#include <algorithm>
#include <cmath>

#include "sdr/math.hpp"

namespace sdr {

/// HSV (h in degrees, s/v in [0,1]) to linear RGB.
inline Color3 hsv_to_rgb(double h, double s, double v) {
    h = std::fmod(h, 360.0);
    if (h < 0) h += 360.0;
    double c = v * s;
    double hp = h / 60.0;
    double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    if (hp < 1) { r = c; g = x; }
    else if (hp < 2) { r = x; g = c; }
    else if (hp < 3) { g = c; b = x; }
    else if (hp < 4) { g = x; b = c; }
    else if (hp < 5) { r = x; b = c; }
    else { r = c; b = x; }
    double m = v - c;
    return {static_cast<float>(r + m), static_cast<float>(g + m), static_cast<float>(b + m)};
}

/// Blackbody color temperature to normalized RGB, valid 1000..40000 K.
/// Piecewise log/power fit of the Planckian locus (Tanner Helland's
/// coefficients, derived from the CIE 1964 10-degree observer data).
inline Color3 kelvin_to_rgb(double kelvin) {
    double t = clamp(kelvin, 1000.0, 40000.0) / 100.0;
    double r, g, b;
    if (t <= 66.0) {
        r = 255.0;
        g = 99.4708025861 * std::log(t) - 161.1195681661;
    } else {
        r = 329.698727446 * std::pow(t - 60.0, -0.1332047592);
        g = 288.1221695283 * std::pow(t - 60.0, -0.0755148492);
    }
    if (t >= 66.0) {
        b = 255.0;
    } else if (t <= 19.0) {
        b = 0.0;
    } else {
        b = 138.5177312231 * std::log(t - 10.0) - 305.0447927307;
    }
    auto n = [](double v) { return static_cast<float>(clamp(v, 0.0, 255.0) / 255.0); };
    return {n(r), n(g), n(b)};
}

/// Rec. 709 luma of a linear RGB color.
inline float luma(Color3 c) { return 0.2126f * c.r + 0.7152f * c.g + 0.0722f * c.b; }

}  // namespace sdr
