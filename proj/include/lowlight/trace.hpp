#pragma once

// Level sweep for ablation: the same input enhanced with levels = 1..max.

#include <optional>
#include <string>
#include <vector>

#include "lowlight/metrics.hpp"
#include "lowlight/pipeline.hpp"

namespace lowlight {

inline constexpr int kMaxTraceLevels = 8;

struct TraceLevel {
    int levels = 0;
    ImageBuffer image;
    double mean_v = 0.0;       // of the enhanced image
    std::optional<Psnr> psnr;  // against the reference, when one is given
};

/// Throws std::invalid_argument unless 1 <= max_levels <= kMaxTraceLevels, or
/// if the reference shape differs from the input.
std::vector<TraceLevel> run_trace(const ImageBuffer& input, int max_levels,
                                  const EnhancementConfig& cfg,
                                  const ImageBuffer* reference = nullptr, int threads = 1);

/// `k,mean_v,psnr_db` with an empty psnr field when no reference was given.
std::string format_trace_csv(const std::vector<TraceLevel>& levels);

} // namespace lowlight
