#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "linex/bounds.hpp"

namespace linex {

/// Every bound evaluated at one bias value.
struct BoundRow {
    Bias eps;
    double bias_bound;
    double pointwise_bound;
    double tvd_weight;
    double tvd_worst;
    ClampedBound hmin;
    ClampedBound entropy_weight;  // delta = tvd_weight
    ClampedBound entropy_worst;   // delta = tvd_worst
    HVariant variant;
};

[[nodiscard]] BoundRow evaluate_bounds(const WeightDistribution& w, Bias eps, HVariant variant);

/// One row per grid point. The grid must be non-empty and strictly increasing.
[[nodiscard]] std::vector<BoundRow> sweep(const WeightDistribution& w, std::span<const Bias> grid,
                                          HVariant variant = HVariant::standard);

/// `steps` equally spaced points from lo to hi inclusive. Requires
/// 0 <= lo < hi <= 1 and steps >= 2.
[[nodiscard]] std::vector<Bias> linear_grid(double lo, double hi, std::size_t steps);

inline constexpr const char* kSweepCsvHeader =
    "eps,bias_bound,pointwise_bound,tvd_weight,tvd_worst,hmin_bound,entropy_weight_raw,entropy_weight,"
    "entropy_worst_raw,entropy_worst,h_variant";

/// Formats a real with 12 significant digits ("%.12g").
[[nodiscard]] std::string format_real(double x);

/// Writes optional "# ..." comment lines, the header, then one line per row.
/// The hmin_bound column holds the clamped value.
void write_sweep_csv(std::ostream& out, std::span<const BoundRow> rows, std::span<const std::string> comments = {});

/// Line chart of the three entropy curves (clamped) against eps.
void write_sweep_svg(std::ostream& out, std::span<const BoundRow> rows, const std::string& title);

}  // namespace linex
