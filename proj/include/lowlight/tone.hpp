#pragma once

// Per-pixel log-domain tone math: the illumination recursion, its closed-form
// fixed point, and the cascaded transfer used by the enhancement pipeline.
//
// All values live in natural-log space: x = ln(V) with V in [0,1], so x <= 0.

#include <cstdint>

namespace lowlight {

/// Channel intensity in [0,1]. Construction rejects NaN, infinities and
/// anything outside the unit interval.
class NormalizedValue {
public:
    explicit NormalizedValue(double v);

    double value() const noexcept { return value_; }
    operator double() const noexcept { return value_; }

private:
    double value_;
};

/// Natural log of a NormalizedValue; always finite and <= 0.
class LogDomainValue {
public:
    explicit LogDomainValue(double x);

    double value() const noexcept { return x_; }
    operator double() const noexcept { return x_; }

private:
    double x_;
};

/// Number of cascade levels. select_levels() only produces 1..3; larger values
/// come from an explicit override (ablation sweeps).
class LevelCount {
public:
    explicit LevelCount(int k);

    int value() const noexcept { return k_; }
    friend bool operator==(LevelCount, LevelCount) = default;

private:
    int k_;
};

/// State of the literal recursion x_{n+1} = x_n / x0 + x0.
struct IterationState {
    LogDomainValue x0;
    double xn;
    std::uint64_t n = 0;

    static IterationState start(LogDomainValue x0) { return {x0, x0.value(), 0}; }
};

inline constexpr double kDefaultEps = 1e-12;
inline constexpr double kDefaultThresholdLow = 0.08;
inline constexpr double kDefaultThresholdHigh = 0.16;

/// ln(max(v, eps)). Throws std::invalid_argument unless 0 < eps < 1.
LogDomainValue to_log(NormalizedValue v, double eps = kDefaultEps);

/// One step of the illumination recursion. Validation/trace only; the
/// enhancement path uses the closed form. Throws std::domain_error when
/// x0 == 0 (V == 1 pixels are fixed points and must be short-circuited).
IterationState retinex_step(const IterationState& state);

/// Geometric partial-sum form of the recursion after N+1 steps:
/// sum_{n=0}^{N} x0^{-n} + x0. Throws std::domain_error when x0 == 0 and
/// std::overflow_error if a power leaves the representable range.
double partial_sum_oracle(LogDomainValue x0, std::uint64_t N);

/// f(x) = x^2 / (x - 1) without validation. Defined for all x <= 0, where the
/// denominator is <= -1.
inline double transfer(double x) noexcept { return x * x / (x - 1.0); }

/// f applied k times without validation.
inline double transfer_cascade(double x, int k) noexcept
{
    for (int i = 0; i < k; ++i) {
        x = transfer(x);
    }
    return x;
}

/// Closed-form limit of the recursion, x0^2 / (x0 - 1).
LogDomainValue retinex_fixed_point(LogDomainValue x0);

/// retinex_fixed_point applied k times.
LogDomainValue cascade(LogDomainValue x0, LevelCount k);

/// Level count from the mean of the V plane:
///   mu > high -> 1,  low <= mu <= high -> 2,  mu < low -> 3.
LevelCount select_levels(double mu_v,
                         double threshold_low = kDefaultThresholdLow,
                         double threshold_high = kDefaultThresholdHigh);

} // namespace lowlight
