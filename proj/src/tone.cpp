#include "lowlight/tone.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lowlight {

NormalizedValue::NormalizedValue(double v) : value_(v)
{
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
        throw std::invalid_argument("normalized value out of [0,1]: " + std::to_string(v));
    }
}

LogDomainValue::LogDomainValue(double x) : x_(x)
{
    if (!std::isfinite(x) || x > 0.0) {
        throw std::invalid_argument("log-domain value must be finite and <= 0: " +
                                    std::to_string(x));
    }
}

LevelCount::LevelCount(int k) : k_(k)
{
    if (k < 1) {
        throw std::invalid_argument("level count must be >= 1, got " + std::to_string(k));
    }
}

LogDomainValue to_log(NormalizedValue v, double eps)
{
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("eps must lie in (0,1)");
    }
    return LogDomainValue(std::log(std::max(v.value(), eps)));
}

IterationState retinex_step(const IterationState& state)
{
    const double x0 = state.x0.value();
    if (x0 == 0.0) {
        throw std::domain_error("retinex_step: x0 == 0 (V == 1) is a fixed point");
    }
    return {state.x0, state.xn / x0 + x0, state.n + 1};
}

double partial_sum_oracle(LogDomainValue x0, std::uint64_t N)
{
    const double x = x0.value();
    if (x == 0.0) {
        throw std::domain_error("partial_sum_oracle: x0 == 0");
    }
    const double ratio = 1.0 / x;
    double term = 1.0;
    double sum = 0.0;
    for (std::uint64_t n = 0; n <= N; ++n) {
        if (!std::isfinite(term)) {
            throw std::overflow_error("partial_sum_oracle: x0^-" + std::to_string(n) +
                                      " overflows");
        }
        sum += term;
        term *= ratio;
    }
    if (!std::isfinite(sum)) {
        throw std::overflow_error("partial_sum_oracle: sum overflows");
    }
    return sum + x;
}

LogDomainValue retinex_fixed_point(LogDomainValue x0)
{
    return LogDomainValue(transfer(x0.value()));
}

LogDomainValue cascade(LogDomainValue x0, LevelCount k)
{
    return LogDomainValue(transfer_cascade(x0.value(), k.value()));
}

LevelCount select_levels(double mu_v, double threshold_low, double threshold_high)
{
    if (!std::isfinite(mu_v)) {
        throw std::invalid_argument("select_levels: non-finite mean");
    }
    if (mu_v > threshold_high) {
        return LevelCount(1);
    }
    if (mu_v >= threshold_low) {
        return LevelCount(2);
    }
    return LevelCount(3);
}

} // namespace lowlight
