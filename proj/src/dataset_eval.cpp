#include "lowlight/dataset_eval.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <variant>

#include "lowlight/image_io.hpp"
#include "lowlight/parallel.hpp"

namespace fs = std::filesystem;

namespace lowlight {

namespace {

bool is_image_file(const fs::path& p)
{
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

// stem -> sorted file paths
std::map<std::string, std::vector<fs::path>> index_by_stem(const fs::path& dir)
{
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot read directory " + dir.string() + ": " + ec.message());
    }
    std::map<std::string, std::vector<fs::path>> index;
    for (const auto& entry : it) {
        if (entry.is_regular_file() && is_image_file(entry.path())) {
            index[entry.path().stem().string()].push_back(entry.path());
        }
    }
    for (auto& [stem, paths] : index) {
        std::sort(paths.begin(), paths.end());
    }
    return index;
}

std::string describe(const std::vector<fs::path>& paths)
{
    std::string out;
    for (const auto& p : paths) {
        if (!out.empty()) {
            out += ", ";
        }
        out += p.filename().string();
    }
    return out;
}

std::string fixed(double v, int precision = 6)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

PairDiscovery discover_pairs(const fs::path& low_dir, const fs::path& ref_dir)
{
    const auto low = index_by_stem(low_dir);
    const auto ref = index_by_stem(ref_dir);

    PairDiscovery result;
    auto note_ambiguous = [&](const fs::path& dir, const std::string& stem,
                              const std::vector<fs::path>& paths) {
        if (paths.size() > 1) {
            result.warnings.push_back("ambiguous stem '" + stem + "' in " + dir.string() + " (" +
                                      describe(paths) + "), using " +
                                      paths.front().filename().string());
        }
    };

    for (const auto& [stem, paths] : low) {
        const auto match = ref.find(stem);
        if (match == ref.end()) {
            result.warnings.push_back("unmatched low image: " + describe(paths));
            continue;
        }
        note_ambiguous(low_dir, stem, paths);
        note_ambiguous(ref_dir, stem, match->second);
        result.pairs.push_back({paths.front(), match->second.front(), stem});
    }
    for (const auto& [stem, paths] : ref) {
        if (!low.contains(stem)) {
            result.warnings.push_back("unmatched reference image: " + describe(paths));
        }
    }

    if (result.pairs.empty()) {
        throw NoPairsError("no matching image pairs between " + low_dir.string() + " and " +
                           ref_dir.string());
    }
    return result;
}

std::vector<PairedSample> read_manifest(const fs::path& manifest)
{
    std::ifstream in(manifest);
    if (!in) {
        throw std::runtime_error("cannot open manifest " + manifest.string());
    }
    const fs::path base = manifest.parent_path();
    std::vector<PairedSample> pairs;
    std::map<std::string, int> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string text = trim(line);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        const auto comma = text.find(',');
        if (comma == std::string::npos) {
            throw std::runtime_error(manifest.string() + ":" + std::to_string(line_no) +
                                     ": expected 'low_path,ref_path'");
        }
        fs::path low = trim(text.substr(0, comma));
        fs::path ref = trim(text.substr(comma + 1));
        if (low.empty() || ref.empty()) {
            throw std::runtime_error(manifest.string() + ":" + std::to_string(line_no) +
                                     ": empty path");
        }
        if (low.is_relative()) {
            low = base / low;
        }
        if (ref.is_relative()) {
            ref = base / ref;
        }
        std::string id = low.stem().string();
        const int count = ++seen[id];
        if (count > 1) {
            id += "#" + std::to_string(count);
        }
        pairs.push_back({low, ref, id});
    }
    if (pairs.empty()) {
        throw NoPairsError("manifest " + manifest.string() + " lists no pairs");
    }
    return pairs;
}

EvalAggregate aggregate_rows(const std::vector<EvalRow>& rows)
{
    EvalAggregate agg;
    if (rows.empty()) {
        return agg;
    }
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows[a].id < rows[b].id; });

    double psnr_sum = 0.0;
    double baseline_psnr_sum = 0.0;
    std::size_t psnr_count = 0;
    std::size_t baseline_count = 0;
    double ssim_sum = 0.0;
    double baseline_ssim_sum = 0.0;
    double seconds_sum = 0.0;
    for (std::size_t i : order) {
        const EvalRow& row = rows[i];
        if (row.psnr.is_identical()) {
            ++agg.identical_rows;
        } else {
            psnr_sum += row.psnr.db();
            ++psnr_count;
        }
        if (!row.baseline_psnr.is_identical()) {
            baseline_psnr_sum += row.baseline_psnr.db();
            ++baseline_count;
        }
        ssim_sum += row.ssim;
        baseline_ssim_sum += row.baseline_ssim;
        seconds_sum += row.seconds;
    }
    const double n = static_cast<double>(rows.size());
    if (psnr_count > 0) {
        agg.mean_psnr = psnr_sum / static_cast<double>(psnr_count);
    }
    if (baseline_count > 0) {
        agg.baseline_mean_psnr = baseline_psnr_sum / static_cast<double>(baseline_count);
    }
    agg.mean_ssim = ssim_sum / n;
    agg.baseline_mean_ssim = baseline_ssim_sum / n;
    agg.mean_seconds = seconds_sum / n;
    return agg;
}

EvalReport evaluate(const std::vector<PairedSample>& pairs, const EnhancementConfig& cfg,
                    const EvalOptions& options)
{
    if (pairs.empty()) {
        throw std::invalid_argument("evaluate: no pairs");
    }
    cfg.validate();

    std::vector<std::variant<EvalRow, EvalError>> slots(pairs.size());
    parallel_for(pairs.size(), options.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const PairedSample& pair = pairs[i];
            try {
                const ImageBuffer low = load_image(pair.low_path);
                const ImageBuffer ref = load_image(pair.ref_path);
                if (!low.same_shape(ref)) {
                    throw std::invalid_argument(
                        "shape mismatch: " + std::to_string(low.width()) + "x" +
                        std::to_string(low.height()) + "x" + std::to_string(low.channels()) +
                        " vs " + std::to_string(ref.width()) + "x" +
                        std::to_string(ref.height()) + "x" + std::to_string(ref.channels()));
                }

                const auto start = std::chrono::steady_clock::now();
                const Enhancement result = enhance_detailed(low, cfg, 1);
                const auto stop = std::chrono::steady_clock::now();

                EvalRow row;
                row.id = pair.id;
                row.seconds = std::chrono::duration<double>(stop - start).count();
                row.levels = result.levels.value();
                const MetricsResult scores = compare(result.image, ref, options.peak);
                row.psnr = scores.psnr;
                row.ssim = scores.ssim;
                const MetricsResult baseline = compare(low, ref, options.peak);
                row.baseline_psnr = baseline.psnr;
                row.baseline_ssim = baseline.ssim;
                slots[i] = std::move(row);
            } catch (const std::exception& e) {
                slots[i] = EvalError{pair.id, e.what()};
            }
        }
    });

    EvalReport report;
    for (auto& slot : slots) {
        if (auto* row = std::get_if<EvalRow>(&slot)) {
            report.rows.push_back(std::move(*row));
        } else {
            report.errors.push_back(std::get<EvalError>(std::move(slot)));
        }
    }
    if (report.rows.empty()) {
        throw std::runtime_error("all " + std::to_string(pairs.size()) +
                                 " pairs failed; first error: " + report.errors.front().id +
                                 ": " + report.errors.front().message);
    }
    report.aggregate = aggregate_rows(report.rows);
    return report;
}

std::string format_report(const EvalReport& report, ReportFormat format)
{
    const EvalAggregate& agg = report.aggregate;
    const std::string mean_psnr = agg.mean_psnr ? fixed(*agg.mean_psnr) : "inf";
    std::ostringstream out;
    if (format == ReportFormat::Csv) {
        for (const auto& row : report.rows) {
            out << row.id << ',' << row.psnr.to_string() << ',' << fixed(row.ssim) << ','
                << fixed(row.seconds) << '\n';
        }
        out << "MEAN," << mean_psnr << ',' << fixed(agg.mean_ssim) << ','
            << fixed(agg.mean_seconds) << '\n';
    } else {
        out << "| id | psnr_db | ssim | seconds |\n";
        out << "|---|---:|---:|---:|\n";
        for (const auto& row : report.rows) {
            out << "| " << row.id << " | " << row.psnr.to_string() << " | " << fixed(row.ssim)
                << " | " << fixed(row.seconds) << " |\n";
        }
        out << "| MEAN | " << mean_psnr << " | " << fixed(agg.mean_ssim) << " | "
            << fixed(agg.mean_seconds) << " |\n";
    }
    return out.str();
}

void write_report(const EvalReport& report, const fs::path& path, ReportFormat format)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open report for writing: " + path.string());
    }
    out << format_report(report, format);
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing report: " + path.string());
    }
}

} // namespace lowlight
