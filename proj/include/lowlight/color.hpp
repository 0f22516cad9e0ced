#pragma once

// Hexcone RGB <-> HSV with hue normalized to [0,1), plus Rec. 601 luma and
// 8-bit quantization helpers.

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "lowlight/tone.hpp"

namespace lowlight {

struct RgbPixel {
    NormalizedValue r;
    NormalizedValue g;
    NormalizedValue b;
};

struct HsvPixel {
    double h;          // turns, [0,1)
    NormalizedValue s;
    NormalizedValue v;
};

/// Throws std::invalid_argument on non-finite input (caught by NormalizedValue).
HsvPixel rgb_to_hsv(const RgbPixel& p);

/// Throws std::invalid_argument if h is outside [0,1).
RgbPixel hsv_to_rgb(const HsvPixel& p);

NormalizedValue luma(const RgbPixel& p);

/// Sextant index floor(6h) in 0..5.
int hue_sextant(double h);

/// Exact byte -> [0,1] map (division by 255).
inline double from_byte(std::uint8_t b) noexcept { return static_cast<double>(b) / 255.0; }

/// [0,1] -> byte with round-half-away-from-zero then clamp to [0,255].
inline std::uint8_t to_byte(double v) noexcept
{
    const double scaled = std::round(v * 255.0);
    if (!(scaled > 0.0)) {
        return 0;
    }
    if (scaled >= 255.0) {
        return 255;
    }
    return static_cast<std::uint8_t>(scaled);
}

namespace detail {

// Unchecked kernels shared by the public wrappers and the image pipeline.

struct Hsv {
    double h, s, v;
};

struct Rgb {
    double r, g, b;
};

inline Hsv rgb_to_hsv(double r, double g, double b) noexcept
{
    const double v = std::max(r, std::max(g, b));
    const double mn = std::min(r, std::min(g, b));
    const double delta = v - mn;
    if (v <= 0.0 || delta <= 0.0) {
        return {0.0, 0.0, v};
    }
    const double s = delta / v;
    double h;
    if (v == r) {
        h = (g - b) / delta;
        if (h < 0.0) {
            h += 6.0;
        }
    } else if (v == g) {
        h = (b - r) / delta + 2.0;
    } else {
        h = (r - g) / delta + 4.0;
    }
    h /= 6.0;
    if (h >= 1.0) {
        h -= 1.0;
    }
    return {h, s, v};
}

inline Rgb hsv_to_rgb(double h, double s, double v) noexcept
{
    if (s <= 0.0) {
        return {v, v, v};
    }
    const double h6 = h * 6.0;
    int sextant = static_cast<int>(h6);
    const double f = h6 - sextant;
    if (sextant > 5) {
        sextant = 5;
    }
    const double p = v * (1.0 - s);
    const double q = v * (1.0 - s * f);
    const double t = v * (1.0 - s * (1.0 - f));
    switch (sextant) {
    case 0: return {v, t, p};
    case 1: return {q, v, p};
    case 2: return {p, v, t};
    case 3: return {p, q, v};
    case 4: return {t, p, v};
    default: return {v, p, q};
    }
}

inline double luma(double r, double g, double b) noexcept
{
    // Grouped so that luma(1,1,1) == 1 exactly.
    return 0.299 * r + (0.587 * g + 0.114 * b);
}

} // namespace detail
} // namespace lowlight
