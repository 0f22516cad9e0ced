#include "lowlight/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "lowlight/color.hpp"

namespace lowlight {

double Psnr::db() const
{
    if (!db_) {
        throw std::logic_error("PSNR of identical images has no finite value");
    }
    return *db_;
}

std::string Psnr::to_string(int precision) const
{
    if (!db_) {
        return "inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, *db_);
    return buf;
}

namespace {

void check_pair(const ImageBuffer& a, const ImageBuffer& b, double peak)
{
    if (!a.same_shape(b)) {
        throw std::invalid_argument("metric inputs differ in shape");
    }
    if (a.empty()) {
        throw std::invalid_argument("metric inputs are empty");
    }
    if (!(peak > 0.0) || !std::isfinite(peak)) {
        throw std::invalid_argument("peak must be positive");
    }
}

// Valid-region correlation of a w x h plane with the separable kernel.
std::vector<double> filter_valid(const std::vector<double>& plane, std::size_t w, std::size_t h,
                                 const std::vector<double>& taps)
{
    const std::size_t n = taps.size();
    const std::size_t ow = w - n + 1;
    const std::size_t oh = h - n + 1;

    std::vector<double> horiz(ow * h);
    for (std::size_t y = 0; y < h; ++y) {
        const double* row = plane.data() + y * w;
        for (std::size_t x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (std::size_t t = 0; t < n; ++t) {
                acc += taps[t] * row[x + t];
            }
            horiz[y * ow + x] = acc;
        }
    }

    std::vector<double> out(ow * oh);
    for (std::size_t y = 0; y < oh; ++y) {
        for (std::size_t x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (std::size_t t = 0; t < n; ++t) {
                acc += taps[t] * horiz[(y + t) * ow + x];
            }
            out[y * ow + x] = acc;
        }
    }
    return out;
}

} // namespace

std::vector<double> gaussian_taps(int size, double sigma)
{
    std::vector<double> taps(static_cast<std::size_t>(size));
    const double center = (size - 1) / 2.0;
    double sum = 0.0;
    for (int i = 0; i < size; ++i) {
        const double d = i - center;
        taps[static_cast<std::size_t>(i)] = std::exp(-d * d / (2.0 * sigma * sigma));
        sum += taps[static_cast<std::size_t>(i)];
    }
    for (double& t : taps) {
        t /= sum;
    }
    return taps;
}

std::vector<double> luma_plane(const ImageBuffer& img)
{
    const auto data = img.data();
    if (img.channels() == 1) {
        return {data.begin(), data.end()};
    }
    std::vector<double> plane(img.pixel_count());
    for (std::size_t i = 0; i < plane.size(); ++i) {
        plane[i] = detail::luma(data[3 * i], data[3 * i + 1], data[3 * i + 2]);
    }
    return plane;
}

Psnr psnr(const ImageBuffer& a, const ImageBuffer& b, double peak)
{
    check_pair(a, b, peak);
    const auto da = a.data();
    const auto db = b.data();
    double sse = 0.0;
    for (std::size_t i = 0; i < da.size(); ++i) {
        const double d = da[i] - db[i];
        sse += d * d;
    }
    if (sse == 0.0) {
        return Psnr::identical();
    }
    const double mse = sse / static_cast<double>(da.size());
    return Psnr::from_db(10.0 * std::log10(peak * peak / mse));
}

double ssim(const ImageBuffer& a, const ImageBuffer& b, double peak)
{
    check_pair(a, b, peak);
    const std::size_t w = a.width();
    const std::size_t h = a.height();
    if (w < static_cast<std::size_t>(kSsimWindow) || h < static_cast<std::size_t>(kSsimWindow)) {
        throw std::invalid_argument("ssim: image smaller than the 11x11 window");
    }

    const auto x = luma_plane(a);
    const auto y = luma_plane(b);
    std::vector<double> xx(x.size()), yy(x.size()), xy(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        xx[i] = x[i] * x[i];
        yy[i] = y[i] * y[i];
        xy[i] = x[i] * y[i];
    }

    const auto taps = gaussian_taps(kSsimWindow, kSsimSigma);
    const auto mu_x = filter_valid(x, w, h, taps);
    const auto mu_y = filter_valid(y, w, h, taps);
    const auto e_xx = filter_valid(xx, w, h, taps);
    const auto e_yy = filter_valid(yy, w, h, taps);
    const auto e_xy = filter_valid(xy, w, h, taps);

    const double c1 = (kSsimK1 * peak) * (kSsimK1 * peak);
    const double c2 = (kSsimK2 * peak) * (kSsimK2 * peak);

    double total = 0.0;
    for (std::size_t i = 0; i < mu_x.size(); ++i) {
        const double mx = mu_x[i];
        const double my = mu_y[i];
        const double var_x = e_xx[i] - mx * mx;
        const double var_y = e_yy[i] - my * my;
        const double cov = e_xy[i] - mx * my;
        const double num = (2.0 * mx * my + c1) * (2.0 * cov + c2);
        const double den = (mx * mx + my * my + c1) * (var_x + var_y + c2);
        total += num / den;
    }
    return total / static_cast<double>(mu_x.size());
}

MetricsResult compare(const ImageBuffer& a, const ImageBuffer& b, double peak)
{
    return {psnr(a, b, peak), ssim(a, b, peak)};
}

} // namespace lowlight
