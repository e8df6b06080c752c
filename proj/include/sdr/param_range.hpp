#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "sdr/error.hpp"
#include "sdr/rng.hpp"

namespace sdr {

enum class RangeKind { Fixed, UniformContinuous, UniformInteger, Categorical };

struct Category {
    std::string name;
    double weight = 1.0;
};

/// One random-draw specification: a fixed value, a uniform interval
/// (continuous or integer, inclusive bounds), or a weighted category list.
struct ParamRange {
    RangeKind kind = RangeKind::Fixed;
    double low = 0.0;
    double high = 0.0;
    std::vector<Category> categories;

    static ParamRange fixed(double v) { return {RangeKind::Fixed, v, v, {}}; }
    static ParamRange uniform(double lo, double hi) {
        return {RangeKind::UniformContinuous, lo, hi, {}};
    }
    static ParamRange uniform_int(int64_t lo, int64_t hi) {
        return {RangeKind::UniformInteger, static_cast<double>(lo), static_cast<double>(hi), {}};
    }
    static ParamRange categorical(std::vector<Category> cats) {
        return {RangeKind::Categorical, 0.0, 0.0, std::move(cats)};
    }

    void validate(const std::string& context) const {
        if (kind == RangeKind::Categorical) {
            if (categories.empty())
                throw ConfigError(context + ": categorical range has no categories");
            double total = 0.0;
            for (const auto& c : categories) {
                if (c.weight < 0.0)
                    throw ConfigError(context + ": negative weight for category '" + c.name + "'");
                total += c.weight;
            }
            if (total <= 0.0)
                throw ConfigError(context + ": categorical weights sum to zero");
            return;
        }
        if (!std::isfinite(low) || !std::isfinite(high))
            throw ConfigError(context + ": non-finite bounds");
        if (low > high)
            throw ConfigError(context + ": low > high");
    }

    bool is_scalar() const { return kind != RangeKind::Categorical; }

    double sample_scalar(RngStream& rng) const {
        switch (kind) {
            case RangeKind::Fixed: return low;
            case RangeKind::UniformContinuous: return rng.uniform(low, high);
            case RangeKind::UniformInteger:
                return static_cast<double>(
                    rng.uniform_int(static_cast<int64_t>(low), static_cast<int64_t>(high)));
            case RangeKind::Categorical:
                throw ConfigError("categorical range sampled as scalar");
        }
        return low;
    }

    size_t sample_category_index(RngStream& rng) const {
        if (kind != RangeKind::Categorical)
            throw ConfigError("scalar range sampled as category");
        std::vector<double> w;
        w.reserve(categories.size());
        for (const auto& c : categories) w.push_back(c.weight);
        return rng.weighted_index(w);
    }

    const std::string& sample_category(RngStream& rng) const {
        return categories[sample_category_index(rng)].name;
    }
};

using SampledValue = std::variant<double, std::string>;

/// Draw one value from a range; scalar kinds yield a double, categorical a name.
inline SampledValue sample_range(RngStream& rng, const ParamRange& range) {
    range.validate("sample_range");
    if (range.is_scalar()) return range.sample_scalar(rng);
    return range.sample_category(rng);
}

}  // namespace sdr
