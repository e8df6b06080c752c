#pragma once

#include <stdexcept>
#include <string>

namespace sdr {

/// Invalid or inconsistent configuration (bad ranges, unknown keys, empty tables).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem / encoding failures.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sdr
