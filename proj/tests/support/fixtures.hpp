#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "lowlight/image.hpp"
#include "lowlight/image_io.hpp"

namespace lowlight::testing {

inline std::filesystem::path data_dir() { return LOWLIGHT_TEST_DATA; }

/// Sorted PNG paths of the natural-image fixtures.
inline std::vector<std::filesystem::path> natural_images()
{
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(data_dir() / "natural")) {
        if (entry.path().extension() == ".png") {
            paths.push_back(entry.path());
        }
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

/// Affine remap of every sample into [lo, 1].
inline ImageBuffer lift(const ImageBuffer& img, double lo)
{
    std::vector<double> data(img.data().begin(), img.data().end());
    for (double& v : data) {
        v = lo + (1.0 - lo) * v;
    }
    return ImageBuffer::from_values(img.width(), img.height(), img.channels(), std::move(data));
}

/// Per-channel power, e.g. p = 3 for the synthetic darkening.
inline ImageBuffer power(const ImageBuffer& img, double p)
{
    std::vector<double> data(img.data().begin(), img.data().end());
    for (double& v : data) {
        v = std::pow(v, p);
    }
    return ImageBuffer::from_values(img.width(), img.height(), img.channels(), std::move(data));
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir()
    {
        static std::atomic<int> counter{0};
        const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        path_ = std::filesystem::temp_directory_path() /
                ("lowlight_test_" + std::to_string(stamp) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

} // namespace lowlight::testing
