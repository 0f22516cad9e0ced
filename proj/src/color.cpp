#include "lowlight/color.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lowlight {

HsvPixel rgb_to_hsv(const RgbPixel& p)
{
    const auto hsv = detail::rgb_to_hsv(p.r, p.g, p.b);
    return {hsv.h, NormalizedValue(hsv.s), NormalizedValue(hsv.v)};
}

RgbPixel hsv_to_rgb(const HsvPixel& p)
{
    if (!std::isfinite(p.h) || p.h < 0.0 || p.h >= 1.0) {
        throw std::invalid_argument("hue out of [0,1): " + std::to_string(p.h));
    }
    const auto rgb = detail::hsv_to_rgb(p.h, p.s, p.v);
    // p, q, t are convex blends of 0 and v; clamping only absorbs rounding.
    auto unit = [](double c) { return NormalizedValue(std::clamp(c, 0.0, 1.0)); };
    return {unit(rgb.r), unit(rgb.g), unit(rgb.b)};
}

NormalizedValue luma(const RgbPixel& p)
{
    return NormalizedValue(std::clamp(detail::luma(p.r, p.g, p.b), 0.0, 1.0));
}

int hue_sextant(double h)
{
    if (!std::isfinite(h) || h < 0.0 || h >= 1.0) {
        throw std::invalid_argument("hue out of [0,1): " + std::to_string(h));
    }
    return std::min(static_cast<int>(h * 6.0), 5);
}

} // namespace lowlight
