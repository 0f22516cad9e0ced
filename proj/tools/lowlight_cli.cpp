// lowlight: command-line front end.
//
//   lowlight enhance IN OUT [flags]      enhance one image, write PNG
//   lowlight eval LOW_DIR REF_DIR [flags] paired PSNR/SSIM report
//   lowlight bench [flags]                 throughput benchmark
//   lowlight trace IN --out DIR [flags]    level sweep 1..max-levels
//
// Exit status: 0 success, 1 runtime failure, 2 usage error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "lowlight/bench.hpp"
#include "lowlight/dataset_eval.hpp"
#include "lowlight/image_io.hpp"
#include "lowlight/parallel.hpp"
#include "lowlight/pipeline.hpp"
#include "lowlight/trace.hpp"

namespace fs = std::filesystem;
using namespace lowlight;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnhanceFlags {
    std::optional<int> levels;
    double threshold_low = kDefaultThresholdLow;
    double threshold_high = kDefaultThresholdHigh;
    double gamma = 0.7;
    double eps = kDefaultEps;
    bool no_saturation = false;

    EnhancementConfig config() const
    {
        EnhancementConfig cfg;
        cfg.levels_override = levels;
        cfg.threshold_low = threshold_low;
        cfg.threshold_high = threshold_high;
        cfg.gamma = gamma;
        cfg.eps = eps;
        cfg.apply_saturation = !no_saturation;
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return cfg;
    }
};

void add_enhance_flags(CLI::App* cmd, EnhanceFlags& flags, bool with_levels = true)
{
    if (with_levels) {
        cmd->add_option("--levels", flags.levels,
                        "Cascade levels; overrides selection from the mean V")
            ->check(CLI::PositiveNumber);
    }
    cmd->add_option("--threshold-low", flags.threshold_low,
                    "Mean-V threshold below which 3 levels are used")
        ->capture_default_str();
    cmd->add_option("--threshold-high", flags.threshold_high,
                    "Mean-V threshold above which 1 level is used")
        ->capture_default_str();
    cmd->add_option("--gamma", flags.gamma, "Saturation gamma: S' = S * S^gamma")
        ->capture_default_str();
    cmd->add_flag("--no-saturation", flags.no_saturation, "Leave the S channel unchanged");
    cmd->add_option("--eps", flags.eps, "Clamp applied to V before the logarithm")
        ->capture_default_str();
}

void add_threads_flag(CLI::App* cmd, int& threads)
{
    cmd->add_option("--threads", threads, "Worker threads (falls back to RETINEX_THREADS)")
        ->envname("RETINEX_THREADS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

std::optional<ReportFormat> parse_format(const std::string& name)
{
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    if (name == "md") {
        return ReportFormat::Markdown;
    }
    return std::nullopt;
}

int cmd_enhance(const std::string& input, const std::string& output, const EnhanceFlags& flags,
                int threads)
{
    const EnhancementConfig cfg = flags.config();
    const ImageBuffer img = load_image(input);

    const auto start = std::chrono::steady_clock::now();
    const Enhancement result = enhance_detailed(img, cfg, threads);
    const auto stop = std::chrono::steady_clock::now();

    save_png(result.image, output);
    std::printf("mu_v=%.6f K=%d time_s=%.6f threads=%d\n", result.stats.mean_v.value(),
                result.levels.value(), std::chrono::duration<double>(stop - start).count(),
                threads);
    return kExitOk;
}

int cmd_eval(const std::string& low_dir, const std::string& ref_dir, const std::string& manifest,
             const std::string& out, const std::string& format_name, const EnhanceFlags& flags,
             int threads)
{
    const auto format = parse_format(format_name);
    if (!format) {
        throw UsageError("--format must be csv or md");
    }
    if (manifest.empty() && (low_dir.empty() || ref_dir.empty())) {
        throw UsageError("eval needs LOW_DIR and REF_DIR, or --manifest");
    }
    const EnhancementConfig cfg = flags.config();

    std::vector<PairedSample> pairs;
    if (!manifest.empty()) {
        pairs = read_manifest(manifest);
    } else {
        PairDiscovery found = discover_pairs(low_dir, ref_dir);
        for (const auto& w : found.warnings) {
            std::fprintf(stderr, "warning: %s\n", w.c_str());
        }
        pairs = std::move(found.pairs);
    }

    const EvalReport report = evaluate(pairs, cfg, {threads, 1.0});
    for (const auto& err : report.errors) {
        std::fprintf(stderr, "error: %s: %s\n", err.id.c_str(), err.message.c_str());
    }
    if (!out.empty()) {
        write_report(report, out, *format);
    }

    const EvalAggregate& agg = report.aggregate;
    auto psnr_text = [](const std::optional<double>& v) {
        return v ? Psnr::from_db(*v).to_string() : std::string("inf");
    };
    std::printf("MEAN,%s,%.6f,%.6f\n", psnr_text(agg.mean_psnr).c_str(), agg.mean_ssim,
                agg.mean_seconds);
    std::printf("BASELINE,%s,%.6f\n", psnr_text(agg.baseline_mean_psnr).c_str(),
                agg.baseline_mean_ssim);
    std::printf("pairs=%zu errors=%zu identical=%zu threads=%d\n", report.rows.size(),
                report.errors.size(), agg.identical_rows, threads);
    return kExitOk;
}

int cmd_bench(BenchOptions options, const std::string& kernel, const std::string& content,
              const std::string& format, const EnhanceFlags& flags)
{
    if (kernel == "full") {
        options.kernel = BenchKernel::Full;
    } else if (kernel == "vplane") {
        options.kernel = BenchKernel::VPlane;
    } else {
        throw UsageError("--kernel must be full or vplane");
    }
    if (content == "random") {
        options.content = BenchContent::Random;
    } else if (content == "dark") {
        options.content = BenchContent::Dark;
    } else if (content == "bright") {
        options.content = BenchContent::Bright;
    } else {
        throw UsageError("--content must be random, dark or bright");
    }
    options.config = flags.config();
    try {
        options.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const BenchRecord record = run_bench(options);
    if (format.empty()) {
        std::printf("%s\n", format_record(record).c_str());
    } else if (format == "csv") {
        std::printf("%s", format_record_csv(record).c_str());
    } else if (format == "md") {
        std::printf("| size | kernel | io | threads | repeats | mean_s | stddev_s | ns/pixel |\n"
                    "|---|---|---|---:|---:|---:|---:|---:|\n"
                    "| %zux%zux3 | %s | %s | %d | %d | %.6f | %.6f | %.3f |\n",
                    record.width, record.height, to_string(record.kernel).c_str(),
                    record.with_io ? "yes" : "no", record.threads, record.repeats,
                    record.mean_seconds, record.stddev_seconds, record.ns_per_pixel);
    } else {
        throw UsageError("--format must be csv or md");
    }
    return kExitOk;
}

int cmd_trace(const std::string& input, int max_levels, const std::string& out_dir,
              const std::string& ref, const EnhanceFlags& flags, int threads)
{
    if (max_levels < 1 || max_levels > kMaxTraceLevels) {
        throw UsageError("--max-levels must lie in [1, 8]");
    }
    const EnhancementConfig cfg = flags.config();
    const ImageBuffer img = load_image(input);
    std::optional<ImageBuffer> reference;
    if (!ref.empty()) {
        reference = load_image(ref);
    }

    const auto levels = run_trace(img, max_levels, cfg, reference ? &*reference : nullptr,
                                  threads);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + out_dir + ": " + ec.message());
    }
    const std::string stem = fs::path(input).stem().string();
    for (const auto& level : levels) {
        save_png(level.image, fs::path(out_dir) / (stem + "_k" + std::to_string(level.levels) +
                                                   ".png"));
    }
    const fs::path csv_path = fs::path(out_dir) / (stem + "_trace.csv");
    std::ofstream csv(csv_path, std::ios::binary | std::ios::trunc);
    csv << format_trace_csv(levels);
    if (!csv.flush()) {
        throw std::runtime_error("cannot write " + csv_path.string());
    }
    std::printf("%s", format_trace_csv(levels).c_str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Low-light image enhancement by cascaded log-domain illumination refinement"};
    app.name("lowlight");
    app.require_subcommand(1, 1);

    int threads = 1;
    EnhanceFlags flags;

    auto* enhance_cmd = app.add_subcommand("enhance", "Enhance one image and write a PNG");
    std::string enhance_in, enhance_out;
    enhance_cmd->add_option("input", enhance_in, "Input PNG or JPEG")->required();
    enhance_cmd->add_option("output", enhance_out, "Output PNG")->required();
    add_enhance_flags(enhance_cmd, flags);
    add_threads_flag(enhance_cmd, threads);

    auto* eval_cmd = app.add_subcommand("eval", "Score enhanced low images against references");
    std::string low_dir, ref_dir, manifest, eval_out, eval_format = "csv";
    eval_cmd->add_option("low_dir", low_dir, "Directory of low-light images");
    eval_cmd->add_option("ref_dir", ref_dir, "Directory of reference images");
    eval_cmd->add_option("--manifest", manifest, "File of 'low_path,ref_path' lines");
    eval_cmd->add_option("--out", eval_out, "Report destination");
    eval_cmd->add_option("--format", eval_format, "Report format: csv or md")
        ->capture_default_str();
    add_enhance_flags(eval_cmd, flags);
    add_threads_flag(eval_cmd, threads);

    auto* bench_cmd = app.add_subcommand("bench", "Time enhancement on seeded random images");
    BenchOptions bench;
    std::string kernel = "full", content = "random", bench_format;
    bench_cmd->add_option("--width", bench.width, "Image width")->capture_default_str();
    bench_cmd->add_option("--height", bench.height, "Image height")->capture_default_str();
    bench_cmd->add_option("--repeats", bench.repeats, "Timed runs (after one warm-up)")
        ->capture_default_str();
    bench_cmd->add_option("--seed", bench.seed, "Seed for image content")->capture_default_str();
    bench_cmd->add_flag("--with-io", bench.with_io, "Include PNG decode and encode in timing");
    bench_cmd->add_option("--kernel", kernel, "full or vplane")->capture_default_str();
    bench_cmd->add_option("--content", content, "random, dark or bright")->capture_default_str();
    bench_cmd->add_option("--format", bench_format, "Output as csv or md instead of text");
    add_enhance_flags(bench_cmd, flags);
    add_threads_flag(bench_cmd, threads);

    auto* trace_cmd = app.add_subcommand("trace", "Write the enhancement at every level 1..N");
    std::string trace_in, trace_out, trace_ref;
    int max_levels = 3;
    trace_cmd->add_option("input", trace_in, "Input PNG or JPEG")->required();
    trace_cmd->add_option("--max-levels", max_levels, "Highest level (1..8)")
        ->capture_default_str();
    trace_cmd->add_option("--out", trace_out, "Output directory")->required();
    trace_cmd->add_option("--ref", trace_ref, "Reference image for PSNR");
    add_enhance_flags(trace_cmd, flags, false);
    add_threads_flag(trace_cmd, threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*enhance_cmd) {
            return cmd_enhance(enhance_in, enhance_out, flags, threads);
        }
        if (*eval_cmd) {
            return cmd_eval(low_dir, ref_dir, manifest, eval_out, eval_format, flags, threads);
        }
        if (*bench_cmd) {
            bench.threads = threads;
            return cmd_bench(bench, kernel, content, bench_format, flags);
        }
        if (*trace_cmd) {
            return cmd_trace(trace_in, max_levels, trace_out, trace_ref, flags, threads);
        }
    } catch (const UsageError& e) {
        std::fprintf(stderr, "lowlight: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "lowlight: %s\n", e.what());
        return kExitFailure;
    }
    return kExitUsage;
}
