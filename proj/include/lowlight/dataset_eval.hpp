#pragma once

// Paired low/reference evaluation: pair discovery, per-pair enhancement and
// scoring, and CSV / Markdown report output.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lowlight/metrics.hpp"
#include "lowlight/pipeline.hpp"

namespace lowlight {

struct PairedSample {
    std::filesystem::path low_path;
    std::filesystem::path ref_path;
    std::string id;
};

struct PairDiscovery {
    std::vector<PairedSample> pairs;  // sorted by id
    std::vector<std::string> warnings; // unmatched or ambiguous files
};

/// Thrown when discovery or a manifest yields no pairs.
class NoPairsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matches PNG/JPEG files by filename stem. Throws NoPairsError on an empty
/// intersection and std::runtime_error if a directory is unreadable.
PairDiscovery discover_pairs(const std::filesystem::path& low_dir,
                             const std::filesystem::path& ref_dir);

/// Reads `low_path,ref_path` lines. Relative paths resolve against the
/// manifest's directory; blank lines and `#` comments are skipped. The id is
/// the low file's stem, suffixed `#2`, `#3`, ... on collisions.
std::vector<PairedSample> read_manifest(const std::filesystem::path& manifest);

struct EvalRow {
    std::string id;
    Psnr psnr = Psnr::identical();
    double ssim = 0.0;
    double seconds = 0.0;
    // Scores of the unprocessed low image against the reference.
    Psnr baseline_psnr = Psnr::identical();
    double baseline_ssim = 0.0;
    int levels = 0;
};

struct EvalError {
    std::string id;
    std::string message;
};

struct EvalAggregate {
    // Mean over finite PSNR rows; empty when every row is the identical sentinel.
    std::optional<double> mean_psnr;
    std::size_t identical_rows = 0;
    double mean_ssim = 0.0;
    double mean_seconds = 0.0;
    std::optional<double> baseline_mean_psnr;
    double baseline_mean_ssim = 0.0;
};

struct EvalReport {
    std::vector<EvalRow> rows; // same order as the input pairs
    std::vector<EvalError> errors;
    EvalAggregate aggregate;
};

struct EvalOptions {
    int threads = 1;
    double peak = 1.0;
};

/// Enhances each low image and scores it against its reference. Per-pair
/// failures become EvalError entries; throws std::runtime_error if every pair
/// fails and std::invalid_argument for an empty list.
EvalReport evaluate(const std::vector<PairedSample>& pairs, const EnhancementConfig& cfg,
                    const EvalOptions& options = {});

/// Aggregate means over rows, reduced in id order so that permuting the rows
/// leaves every value bit-identical.
EvalAggregate aggregate_rows(const std::vector<EvalRow>& rows);

enum class ReportFormat { Csv, Markdown };

/// Renders rows as `id,psnr_db,ssim,seconds` followed by a `MEAN` line. The
/// identical-PSNR sentinel is written as `inf`.
std::string format_report(const EvalReport& report, ReportFormat format);

/// Throws std::runtime_error naming the path on I/O failure.
void write_report(const EvalReport& report, const std::filesystem::path& path,
                  ReportFormat format);

} // namespace lowlight
