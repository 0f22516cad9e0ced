#include "lowlight/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "lowlight/image_io.hpp"

namespace lowlight {

void BenchOptions::validate() const
{
    if (repeats < 3) {
        throw std::invalid_argument("bench: repeats must be >= 3");
    }
    if (width < 16 || height < 16) {
        throw std::invalid_argument("bench: width and height must be >= 16");
    }
    if (threads < 1) {
        throw std::invalid_argument("bench: threads must be >= 1");
    }
    config.validate();
}

ImageBuffer random_image(std::size_t width, std::size_t height, std::uint64_t seed, double lo,
                         double hi)
{
    std::mt19937_64 rng(seed);
    std::vector<double> data(width * height * 3);
    const double span = hi - lo;
    for (double& v : data) {
        // 53 random bits -> [0,1); the engine's output sequence is standardized.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        v = std::min(hi, lo + span * u);
    }
    return ImageBuffer::from_values(width, height, 3, std::move(data));
}

namespace {

ImageBuffer bench_image(const BenchOptions& options, std::uint64_t seed)
{
    switch (options.content) {
    case BenchContent::Dark:
        return random_image(options.width, options.height, seed, 0.0, 0.1);
    case BenchContent::Bright:
        return random_image(options.width, options.height, seed, 0.85, 0.95);
    case BenchContent::Random:
        break;
    }
    return random_image(options.width, options.height, seed);
}

std::vector<double> max_plane(const ImageBuffer& img)
{
    const auto d = img.data();
    std::vector<double> v(img.pixel_count());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = std::max(d[3 * i], std::max(d[3 * i + 1], d[3 * i + 2]));
    }
    return v;
}

// Keeps results observable so the timed call cannot be elided.
volatile double g_sink = 0.0;

} // namespace

BenchRecord run_bench(const BenchOptions& options)
{
    options.validate();
    using clock = std::chrono::steady_clock;

    BenchRecord record;
    record.width = options.width;
    record.height = options.height;
    record.repeats = options.repeats;
    record.threads = options.threads;
    record.kernel = options.kernel;
    record.with_io = options.with_io;

    for (int run = 0; run <= options.repeats; ++run) {
        const ImageBuffer img = bench_image(options, options.seed + static_cast<std::uint64_t>(run));
        double seconds = 0.0;

        if (options.kernel == BenchKernel::VPlane) {
            const auto plane = max_plane(img);
            const LevelCount k = levels_for(compute_mean_v(img), options.config);
            const auto start = clock::now();
            const auto out = enhance_v_plane(plane, k, options.config.eps, options.threads);
            const auto stop = clock::now();
            g_sink = g_sink + out[out.size() / 2];
            seconds = std::chrono::duration<double>(stop - start).count();
        } else if (options.with_io) {
            const auto encoded = encode_png(img);
            const auto start = clock::now();
            const ImageBuffer decoded = decode_image(encoded);
            const ImageBuffer out = enhance(decoded, options.config, options.threads);
            const auto bytes = encode_png(out);
            const auto stop = clock::now();
            g_sink = g_sink + static_cast<double>(bytes.size());
            seconds = std::chrono::duration<double>(stop - start).count();
        } else {
            const auto start = clock::now();
            const ImageBuffer out = enhance(img, options.config, options.threads);
            const auto stop = clock::now();
            g_sink = g_sink + out.data()[out.data().size() / 2];
            seconds = std::chrono::duration<double>(stop - start).count();
        }

        if (run > 0) {
            record.samples.push_back(seconds);
        }
    }

    const double n = static_cast<double>(record.samples.size());
    double sum = 0.0;
    for (double s : record.samples) {
        sum += s;
    }
    record.mean_seconds = sum / n;
    double sq = 0.0;
    for (double s : record.samples) {
        sq += (s - record.mean_seconds) * (s - record.mean_seconds);
    }
    record.stddev_seconds = std::sqrt(sq / (n - 1.0));
    record.ns_per_pixel =
        record.mean_seconds * 1e9 / static_cast<double>(record.width * record.height);
    return record;
}

std::string to_string(BenchKernel kernel)
{
    return kernel == BenchKernel::Full ? "full" : "vplane";
}

std::string format_record(const BenchRecord& r)
{
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "size=%zux%zux3 kernel=%s io=%s threads=%d repeats=%d mean_s=%.6f "
                  "stddev_s=%.6f ns_per_pixel=%.3f",
                  r.width, r.height, to_string(r.kernel).c_str(), r.with_io ? "yes" : "no",
                  r.threads, r.repeats, r.mean_seconds, r.stddev_seconds, r.ns_per_pixel);
    return buf;
}

std::string format_record_csv(const BenchRecord& r)
{
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "width,height,kernel,with_io,threads,repeats,mean_seconds,stddev_seconds,"
                  "ns_per_pixel\n%zu,%zu,%s,%d,%d,%d,%.9f,%.9f,%.3f\n",
                  r.width, r.height, to_string(r.kernel).c_str(), r.with_io ? 1 : 0, r.threads,
                  r.repeats, r.mean_seconds, r.stddev_seconds, r.ns_per_pixel);
    return buf;
}

} // namespace lowlight
