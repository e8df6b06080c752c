#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <vector>

namespace sdr {

/// Identifier of the stream construction recorded in dataset manifests.
/// Streams are keyed by (master_seed, frame_index, substream_label): the three
/// inputs are hashed with FNV-1a 64, the hash is expanded with SplitMix64 into
/// the 256-bit state of a xoshiro256** generator. Changing any input yields an
/// unrelated sequence; the scheme is platform-independent.
inline constexpr const char* kPrngAlgorithm = "fnv1a64/splitmix64/xoshiro256ss-v1";

inline constexpr uint64_t fnv1a64_init() { return 0xcbf29ce484222325ull; }

inline uint64_t fnv1a64_feed(uint64_t h, const void* data, size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a64(std::string_view s) {
    return fnv1a64_feed(fnv1a64_init(), s.data(), s.size());
}

inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Deterministic seeded random stream, single-owner. Distinct substream labels
/// give independent sequences, so modules never perturb each other's draws.
class RngStream {
public:
    RngStream(uint64_t master_seed, uint32_t frame_index, std::string substream_label)
        : master_seed_(master_seed),
          frame_index_(frame_index),
          label_(std::move(substream_label)) {
        uint64_t h = fnv1a64_init();
        uint64_t le_seed = master_seed_;
        uint64_t le_frame = frame_index_;
        unsigned char buf[16];
        for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(le_seed >> (8 * i));
        for (int i = 0; i < 8; ++i) buf[8 + i] = static_cast<unsigned char>(le_frame >> (8 * i));
        h = fnv1a64_feed(h, buf, sizeof(buf));
        h = fnv1a64_feed(h, label_.data(), label_.size());
        uint64_t sm = h;
        for (auto& s : state_) s = splitmix64_next(sm);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 0x9e3779b97f4a7c15ull;
    }

    uint64_t master_seed() const { return master_seed_; }
    uint32_t frame_index() const { return frame_index_; }
    const std::string& substream_label() const { return label_; }

    uint64_t next_u64() {
        // xoshiro256**
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    uint32_t next_u32() { return static_cast<uint32_t>(next_u64() >> 32); }

    /// Uniform double in [0, 1), 53 bits of precision.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [low, high).
    double uniform(double low, double high) { return low + uniform01() * (high - low); }

    /// Uniform integer in [low, high], both inclusive. Unbiased (Lemire).
    int64_t uniform_int(int64_t low, int64_t high) {
        if (low >= high) return low;
        const uint64_t range = static_cast<uint64_t>(high - low) + 1;
        uint64_t x = next_u64();
        __uint128_t m = static_cast<__uint128_t>(x) * range;
        auto lo = static_cast<uint64_t>(m);
        if (lo < range) {
            const uint64_t threshold = (-range) % range;
            while (lo < threshold) {
                x = next_u64();
                m = static_cast<__uint128_t>(x) * range;
                lo = static_cast<uint64_t>(m);
            }
        }
        return low + static_cast<int64_t>(m >> 64);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Index into a non-empty weight vector, proportional to weight.
    size_t weighted_index(const std::vector<double>& weights) {
        double total = 0.0;
        for (double w : weights) total += w;
        double x = uniform01() * total;
        for (size_t i = 0; i + 1 < weights.size(); ++i) {
            x -= weights[i];
            if (x < 0.0) return i;
        }
        return weights.empty() ? 0 : weights.size() - 1;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(uniform_int(0, static_cast<int64_t>(i) - 1));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t master_seed_;
    uint32_t frame_index_;
    std::string label_;
    uint64_t state_[4] = {};
};

inline RngStream make_stream(uint64_t master_seed, uint32_t frame_index,
                             std::string_view substream_label) {
    return RngStream(master_seed, frame_index, std::string(substream_label));
}

/// Handle for one frame's randomness; hands out labeled substreams.
struct FrameRng {
    uint64_t master_seed = 0;
    uint32_t frame_index = 0;

    RngStream stream(std::string_view label) const {
        return make_stream(master_seed, frame_index, label);
    }
};

}  // namespace sdr
