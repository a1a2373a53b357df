#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "linex/bias.hpp"
#include "linex/weight_distribution.hpp"

namespace linex {

// Quality bounds for the linear extractor Y = G X, with G generating an
// [n, k, d] code and X an IID bit source of bias eps. delta denotes twice the
// total variation distance of Y from uniform on {0,1}^k. Entropies are
// normalized to [0, 1] (logarithms base 2^k).

/// A bound that may leave its meaningful range. `clamped` is `raw` clipped to [0, 1].
struct ClampedBound {
    double raw;
    double clamped;
};

/// Which binary-entropy term enters the distance-to-entropy bound.
///   standard:   h(x) = -x log x - (1-x) log(1-x)
///   as_printed: h(x) = -x log(2x) - (1-x) log(1-x), the literal printed form
enum class HVariant { standard, as_printed };

[[nodiscard]] std::string to_string(HVariant v);
/// Accepts "standard" and "as-printed". Throws ParameterError otherwise.
[[nodiscard]] HVariant parse_h_variant(std::string_view text);

/// Per-coordinate output bias bound eps^d.
[[nodiscard]] double bias_bound(Bias eps, std::size_t d);

/// Bound 2^-k + eps^d on any single output probability P(Y = gamma).
[[nodiscard]] double pointwise_bound(Bias eps, std::size_t d, std::size_t k);

/// delta <= sum_{l >= 1} A_l eps^l. Summed from the largest weight down with
/// Neumaier compensation so the many tiny high-weight terms are not lost.
[[nodiscard]] double tvd_weight_bound(const WeightDistribution& w, Bias eps);

/// delta <= 2^k eps^d, the minimum-distance-only bound.
[[nodiscard]] double tvd_worst_bound(std::size_t k, std::size_t d, Bias eps);

/// H_min(Y) >= 1 - log_{2^k}(1 + 2^k eps^d).
[[nodiscard]] ClampedBound hmin_bound(std::size_t k, std::size_t d, Bias eps);

/// Largest delta any distribution on 2^k points can have: 2 (1 - 2^-k).
[[nodiscard]] double max_delta(std::size_t k);

/// H(Y) >= 1 - (delta/2) log_M(M - 1) - h(delta/2) with M = 2^k.
///
/// delta is clamped to [0, max_delta(k)] before use; on that interval the
/// standard variant is nonincreasing in delta, so an upper bound on delta
/// yields a valid lower bound on H. 0 log 0 is taken as 0.
/// Throws ParameterError for negative or NaN delta.
[[nodiscard]] ClampedBound entropy_lower_bound(double delta, std::size_t k, HVariant variant = HVariant::standard);

}  // namespace linex
