#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>

namespace sad {

// Shortest decimal representation that round-trips to the same double.
// Integral values print without a decimal point or exponent.
inline std::string format_double(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) {
        const auto i = static_cast<std::int64_t>(v);
        char buf[24];
        auto res = std::to_chars(buf, buf + sizeof(buf), i);
        return std::string(buf, res.ptr);
    }
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace sad
