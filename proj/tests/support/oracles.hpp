#pragma once

// Test-only reference computations. Nothing here calls into the code paths it
// is used to check.

#include <cmath>
#include <cstddef>
#include <vector>

namespace lowlight::oracle {

/// Direct windowed SSIM on a w x h plane: full 2-D Gaussian built here,
/// per-window means and centered second moments, valid windows only.
inline double ssim_brute(const std::vector<double>& x, const std::vector<double>& y,
                         std::size_t w, std::size_t h, double peak = 1.0)
{
    constexpr int n = 11;
    constexpr double sigma = 1.5;
    double kernel[n][n];
    double ksum = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double di = i - 5;
            const double dj = j - 5;
            kernel[i][j] = std::exp(-(di * di + dj * dj) / (2.0 * sigma * sigma));
            ksum += kernel[i][j];
        }
    }
    for (auto& row : kernel) {
        for (double& k : row) {
            k /= ksum;
        }
    }
    const double c1 = (0.01 * peak) * (0.01 * peak);
    const double c2 = (0.03 * peak) * (0.03 * peak);

    double total = 0.0;
    std::size_t windows = 0;
    for (std::size_t r = 0; r + n <= h; ++r) {
        for (std::size_t c = 0; c + n <= w; ++c) {
            double mx = 0.0, my = 0.0;
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    const std::size_t idx = (r + i) * w + (c + j);
                    mx += kernel[i][j] * x[idx];
                    my += kernel[i][j] * y[idx];
                }
            }
            double vx = 0.0, vy = 0.0, cxy = 0.0;
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    const std::size_t idx = (r + i) * w + (c + j);
                    const double dx = x[idx] - mx;
                    const double dy = y[idx] - my;
                    vx += kernel[i][j] * dx * dx;
                    vy += kernel[i][j] * dy * dy;
                    cxy += kernel[i][j] * dx * dy;
                }
            }
            total += (2 * mx * my + c1) * (2 * cxy + c2) /
                     ((mx * mx + my * my + c1) * (vx + vy + c2));
            ++windows;
        }
    }
    return total / static_cast<double>(windows);
}

/// x_{n+1} = x_n / x0 + x0 written out independently of the library.
inline double recursion(double x0, int steps)
{
    double x = x0;
    for (int i = 0; i < steps; ++i) {
        x = x / x0 + x0;
    }
    return x;
}

} // namespace lowlight::oracle
