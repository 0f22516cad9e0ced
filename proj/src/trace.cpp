#include "lowlight/trace.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lowlight {

std::vector<TraceLevel> run_trace(const ImageBuffer& input, int max_levels,
                                  const EnhancementConfig& cfg, const ImageBuffer* reference,
                                  int threads)
{
    if (max_levels < 1 || max_levels > kMaxTraceLevels) {
        throw std::invalid_argument("trace: max levels must lie in [1, " +
                                    std::to_string(kMaxTraceLevels) + "]");
    }
    if (reference && !reference->same_shape(input)) {
        throw std::invalid_argument("trace: reference shape differs from input");
    }

    std::vector<TraceLevel> out;
    out.reserve(static_cast<std::size_t>(max_levels));
    for (int k = 1; k <= max_levels; ++k) {
        EnhancementConfig level_cfg = cfg;
        level_cfg.levels_override = k;
        TraceLevel level;
        level.levels = k;
        level.image = enhance(input, level_cfg, threads);
        level.mean_v = compute_mean_v(level.image, threads).mean_v;
        if (reference) {
            level.psnr = psnr(level.image, *reference);
        }
        out.push_back(std::move(level));
    }
    return out;
}

std::string format_trace_csv(const std::vector<TraceLevel>& levels)
{
    std::ostringstream out;
    out << "k,mean_v,psnr_db\n";
    for (const auto& level : levels) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.9f", level.mean_v);
        out << level.levels << ',' << buf << ',';
        if (level.psnr) {
            out << level.psnr->to_string();
        }
        out << '\n';
    }
    return out.str();
}

} // namespace lowlight
