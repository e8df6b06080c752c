#pragma once

#include <cmath>
#include <cstdint>

namespace sdr {

/// Integer lattice hash to [0, 1). Deterministic across platforms.
inline float lattice_hash(int32_t x, int32_t y, uint32_t seed) {
    uint32_t h = static_cast<uint32_t>(x) * 0x8da6b343u ^ static_cast<uint32_t>(y) * 0xd8163841u ^
                 seed * 0xcb1ab31fu;
    h ^= h >> 13;
    h *= 0x5bd1e995u;
    h ^= h >> 15;
    return static_cast<float>(h) * (1.0f / 4294967296.0f);
}

/// Smooth 2D value noise in [0, 1).
inline float value_noise(float x, float y, uint32_t seed) {
    float fx = std::floor(x), fy = std::floor(y);
    auto ix = static_cast<int32_t>(fx);
    auto iy = static_cast<int32_t>(fy);
    float tx = x - fx, ty = y - fy;
    tx = tx * tx * (3.0f - 2.0f * tx);
    ty = ty * ty * (3.0f - 2.0f * ty);
    float a = lattice_hash(ix, iy, seed);
    float b = lattice_hash(ix + 1, iy, seed);
    float c = lattice_hash(ix, iy + 1, seed);
    float d = lattice_hash(ix + 1, iy + 1, seed);
    float top = a + (b - a) * tx;
    float bot = c + (d - c) * tx;
    return top + (bot - top) * ty;
}

/// Fractal sum of value noise, normalized to [0, 1).
inline float fbm(float x, float y, uint32_t seed, int octaves) {
    float sum = 0.0f, amp = 0.5f, total = 0.0f;
    for (int i = 0; i < octaves; ++i) {
        sum += amp * value_noise(x, y, seed + static_cast<uint32_t>(i) * 0x9e3779b9u);
        total += amp;
        x *= 2.03f;
        y *= 1.97f;
        amp *= 0.5f;
    }
    return sum / total;
}

}  // namespace sdr
