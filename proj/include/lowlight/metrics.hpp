#pragma once

// Full-reference quality metrics.
//
// PSNR is computed jointly over every channel and pixel. SSIM runs on the
// Rec. 601 luma plane (or the single channel of a gray image) with an 11x11
// Gaussian window, sigma 1.5, K1 = 0.01, K2 = 0.03, over valid windows only.

#include <optional>
#include <string>
#include <vector>

#include "lowlight/image.hpp"

namespace lowlight {

/// PSNR in dB, or the "identical" sentinel when the MSE is exactly zero.
/// The sentinel is never represented as a floating-point infinity.
class Psnr {
public:
    static Psnr identical() { return Psnr(std::nullopt); }
    static Psnr from_db(double db) { return Psnr(db); }

    bool is_identical() const noexcept { return !db_.has_value(); }
    /// Throws std::logic_error on the sentinel.
    double db() const;
    /// "inf" for the sentinel, otherwise fixed notation with `precision` digits.
    std::string to_string(int precision = 6) const;

    friend bool operator==(const Psnr&, const Psnr&) = default;

private:
    explicit Psnr(std::optional<double> db) : db_(db) {}
    std::optional<double> db_;
};

struct MetricsResult {
    Psnr psnr;
    double ssim;
};

inline constexpr int kSsimWindow = 11;
inline constexpr double kSsimSigma = 1.5;
inline constexpr double kSsimK1 = 0.01;
inline constexpr double kSsimK2 = 0.03;

/// Throws std::invalid_argument on shape mismatch or peak <= 0.
Psnr psnr(const ImageBuffer& a, const ImageBuffer& b, double peak = 1.0);

/// Throws std::invalid_argument on shape mismatch or when either dimension is
/// below the window size.
double ssim(const ImageBuffer& a, const ImageBuffer& b, double peak = 1.0);

MetricsResult compare(const ImageBuffer& a, const ImageBuffer& b, double peak = 1.0);

/// Luma plane of a 3-channel image, or a copy of a 1-channel image.
std::vector<double> luma_plane(const ImageBuffer& img);

/// Normalized 1-D Gaussian taps used by ssim().
std::vector<double> gaussian_taps(int size, double sigma);

} // namespace lowlight
