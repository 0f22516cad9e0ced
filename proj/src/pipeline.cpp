#include "lowlight/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lowlight/color.hpp"
#include "lowlight/parallel.hpp"

namespace lowlight {

void EnhancementConfig::validate() const
{
    if (!(threshold_low > 0.0 && threshold_low < threshold_high && threshold_high < 1.0)) {
        throw std::invalid_argument("thresholds must satisfy 0 < low < high < 1");
    }
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
        throw std::invalid_argument("gamma must be positive and finite");
    }
    if (!(eps > 0.0 && eps < 1e-3)) {
        throw std::invalid_argument("eps must lie in (0, 1e-3)");
    }
    if (levels_override && *levels_override < 1) {
        throw std::invalid_argument("levels override must be >= 1");
    }
}

ImageStats compute_mean_v(const ImageBuffer& img, int threads)
{
    if (img.empty()) {
        throw std::invalid_argument("compute_mean_v: empty image");
    }
    const std::size_t width = img.width();
    const std::size_t channels = img.channels();
    const auto data = img.data();

    std::vector<double> row_sums(img.height(), 0.0);
    parallel_for(img.height(), threads, [&](std::size_t y0, std::size_t y1) {
        for (std::size_t y = y0; y < y1; ++y) {
            const double* row = data.data() + y * width * channels;
            double sum = 0.0;
            if (channels == 3) {
                for (std::size_t x = 0; x < width; ++x) {
                    const double* px = row + 3 * x;
                    sum += std::max(px[0], std::max(px[1], px[2]));
                }
            } else {
                for (std::size_t x = 0; x < width; ++x) {
                    sum += row[x];
                }
            }
            row_sums[y] = sum;
        }
    });

    double total = 0.0;
    for (double s : row_sums) {
        total += s;
    }
    const double mean = total / static_cast<double>(img.pixel_count());
    return {NormalizedValue(std::clamp(mean, 0.0, 1.0))};
}

NormalizedValue saturation_gamma(NormalizedValue s, double gamma)
{
    if (!(gamma > 0.0)) {
        throw std::invalid_argument("saturation_gamma: gamma must be positive");
    }
    return NormalizedValue(s.value() * std::pow(s.value(), gamma));
}

std::vector<double> enhance_v_plane(std::span<const double> v, LevelCount k, double eps,
                                    int threads)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] >= 0.0 && v[i] <= 1.0)) {
            throw std::invalid_argument("enhance_v_plane: value " + std::to_string(i) +
                                        " out of [0,1]");
        }
    }
    std::vector<double> out(v.size());
    const int levels = k.value();
    parallel_for(v.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            out[i] = enhance_value(v[i], levels, eps);
        }
    });
    return out;
}

LevelCount levels_for(const ImageStats& stats, const EnhancementConfig& cfg)
{
    if (cfg.levels_override) {
        return LevelCount(*cfg.levels_override);
    }
    return select_levels(stats.mean_v, cfg.threshold_low, cfg.threshold_high);
}

Enhancement enhance_detailed(const ImageBuffer& img, const EnhancementConfig& cfg, int threads)
{
    cfg.validate();
    const ImageStats stats = compute_mean_v(img, threads);
    const LevelCount levels = levels_for(stats, cfg);

    if (img.channels() == 1) {
        auto plane = enhance_v_plane(img.data(), levels, cfg.eps, threads);
        return {ImageBuffer::from_values(img.width(), img.height(), 1, std::move(plane)), stats,
                levels};
    }

    const auto in = img.data();
    std::vector<double> out(in.size());
    const int k = levels.value();
    const double eps = cfg.eps;
    const double gamma = cfg.gamma;
    const bool saturate = cfg.apply_saturation;

    parallel_for(img.pixel_count(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double* px = in.data() + 3 * i;
            const auto hsv = detail::rgb_to_hsv(px[0], px[1], px[2]);
            const double v = enhance_value(hsv.v, k, eps);
            const double s = saturate ? hsv.s * std::pow(hsv.s, gamma) : hsv.s;
            const auto rgb = detail::hsv_to_rgb(hsv.h, s, v);
            double* dst = out.data() + 3 * i;
            dst[0] = std::clamp(rgb.r, 0.0, 1.0);
            dst[1] = std::clamp(rgb.g, 0.0, 1.0);
            dst[2] = std::clamp(rgb.b, 0.0, 1.0);
        }
    });

    return {ImageBuffer::from_values(img.width(), img.height(), 3, std::move(out)), stats, levels};
}

ImageBuffer enhance(const ImageBuffer& img, const EnhancementConfig& cfg, int threads)
{
    return enhance_detailed(img, cfg, threads).image;
}

} // namespace lowlight
