#pragma once

// Throughput benchmark for the enhancement path. Images are generated from a
// seeded std::mt19937_64, so content is reproducible across runs.

#include <cstdint>
#include <string>
#include <vector>

#include "lowlight/image.hpp"
#include "lowlight/pipeline.hpp"

namespace lowlight {

enum class BenchKernel {
    Full,   // enhance(): HSV round trip, V cascade, S gamma
    VPlane, // enhance_v_plane() only
};

enum class BenchContent { Random, Dark, Bright };

struct BenchOptions {
    std::size_t width = 625;
    std::size_t height = 625;
    int repeats = 20; // timed runs; one extra warm-up run is discarded
    std::uint64_t seed = 42;
    int threads = 1;
    bool with_io = false; // time PNG decode + enhance + PNG encode
    BenchKernel kernel = BenchKernel::Full;
    BenchContent content = BenchContent::Random;
    EnhancementConfig config;

    /// Throws std::invalid_argument: repeats >= 3, both dimensions >= 16.
    void validate() const;
};

struct BenchRecord {
    std::size_t width = 0;
    std::size_t height = 0;
    int repeats = 0;
    int threads = 1;
    BenchKernel kernel = BenchKernel::Full;
    bool with_io = false;
    double mean_seconds = 0.0;
    double stddev_seconds = 0.0; // sample standard deviation
    double ns_per_pixel = 0.0;   // mean_seconds * 1e9 / (width * height)
    std::vector<double> samples;
};

/// 3-channel image with uniform samples in [lo, hi], drawn from
/// std::mt19937_64(seed) in buffer order.
ImageBuffer random_image(std::size_t width, std::size_t height, std::uint64_t seed,
                         double lo = 0.0, double hi = 1.0);

BenchRecord run_bench(const BenchOptions& options);

std::string to_string(BenchKernel kernel);

/// One human-readable line with every field and the thread count.
std::string format_record(const BenchRecord& record);
/// Header plus one data row.
std::string format_record_csv(const BenchRecord& record);

} // namespace lowlight
