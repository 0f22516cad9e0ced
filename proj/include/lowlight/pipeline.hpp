#pragma once

// Whole-image enhancement: mean-V statistic, level selection, cascaded V
// transfer, saturation gamma, and reassembly to RGB.

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "lowlight/image.hpp"
#include "lowlight/tone.hpp"

namespace lowlight {

struct EnhancementConfig {
    double threshold_low = kDefaultThresholdLow;
    double threshold_high = kDefaultThresholdHigh;
    double gamma = 0.7;
    double eps = kDefaultEps;
    std::optional<int> levels_override;
    bool apply_saturation = true;

    /// Throws std::invalid_argument when an invariant is violated:
    /// 0 < low < high < 1, gamma > 0, eps in (0, 1e-3), override >= 1.
    void validate() const;
};

struct ImageStats {
    NormalizedValue mean_v{0.0};
};

/// Result of enhance() with the statistics that drove it.
struct Enhancement {
    ImageBuffer image;
    ImageStats stats;
    LevelCount levels{1};
};

/// Mean of max(r,g,b) (or of the single channel) over all pixels. The sum is
/// formed per row and reduced in row order, so it does not depend on threads.
/// Throws std::invalid_argument for empty images.
ImageStats compute_mean_v(const ImageBuffer& img, int threads = 1);

/// s * s^gamma, i.e. s^(1+gamma).
NormalizedValue saturation_gamma(NormalizedValue s, double gamma);

/// exp(cascade(ln max(v, eps), k)) with V == 1 passed through unchanged.
inline double enhance_value(double v, int k, double eps) noexcept
{
    if (v >= 1.0) {
        return 1.0;
    }
    return std::exp(transfer_cascade(std::log(v > eps ? v : eps), k));
}

/// Elementwise enhance_value over a V plane. Throws std::invalid_argument for
/// values outside [0,1].
std::vector<double> enhance_v_plane(std::span<const double> v, LevelCount k,
                                    double eps = kDefaultEps, int threads = 1);

/// Levels for an image: the override if set, otherwise select_levels(mean_v).
LevelCount levels_for(const ImageStats& stats, const EnhancementConfig& cfg);

/// Full enhancement. 3-channel images go through HSV; 1-channel images are
/// treated as a V plane. Output is identical for every thread count.
Enhancement enhance_detailed(const ImageBuffer& img, const EnhancementConfig& cfg,
                             int threads = 1);

ImageBuffer enhance(const ImageBuffer& img, const EnhancementConfig& cfg = {}, int threads = 1);

} // namespace lowlight
