#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

namespace rosel {

constexpr std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) noexcept { return (a + b - 1) / b; }

/// ceil(lg n), floored at 1 so it can serve as a divisor.
constexpr std::uint64_t ceil_lg(std::uint64_t n) noexcept {
    return n <= 2 ? 1 : static_cast<std::uint64_t>(std::bit_width(n - 1));
}

/// Iterated base-2 logarithm: applications of lg until the value is <= 1.
inline unsigned lg_star(double x) noexcept {
    unsigned count = 0;
    while (x > 1.0) {
        x = std::log2(x);
        ++count;
    }
    return count;
}

/// lg applied `times` times; lg^(0) x = x. Values below 1 clamp to 1.
inline double iterated_lg(unsigned times, double x) noexcept {
    for (unsigned i = 0; i < times && x > 1.0; ++i) {
        x = std::log2(x);
    }
    return x < 1.0 ? 1.0 : x;
}

}  // namespace rosel
