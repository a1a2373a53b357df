#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linex/bitstream.hpp"

namespace linex {

/// Distribution of a k-bit output word and the statistics derived from it.
/// pmf[gamma] is P(Y = gamma) with bit i of gamma equal to coordinate Y_i.
struct ExactStats {
    std::size_t k = 0;
    std::vector<double> pmf;
    double delta = 0;        // sum |P(gamma) - 2^-k|
    double tvd = 0;          // delta / 2
    double shannon = 0;      // entropy, base 2^k
    double min_entropy = 0;  // -log_{2^k} max P
    double max_prob = 0;
    std::vector<double> coord_biases;  // |P(Y_i = 1) - P(Y_i = 0)|
};

[[nodiscard]] ExactStats stats_from_pmf(std::vector<double> pmf, std::size_t k);

inline constexpr std::size_t kMaxBinnedWidth = 24;

struct EmpiricalStats {
    ExactStats stats;
    std::uint64_t samples = 0;
    /// sqrt(2^k / N): bounds the expected L1 estimation error of delta.
    double delta_noise_floor = 0;
    /// Half of delta_noise_floor, on the tvd scale.
    double tvd_noise_floor = 0;
};

/// Frequencies of consecutive k-bit words (first bit of each word is Y_0).
/// Throws ParameterError if the length is not a multiple of k, and
/// InfeasibleError if k > kMaxBinnedWidth.
[[nodiscard]] EmpiricalStats empirical_stats(const BitStream& stream, std::size_t k);

/// Per-coordinate empirical biases only; works for any k.
[[nodiscard]] std::vector<double> empirical_coordinate_biases(const BitStream& stream, std::size_t k);

}  // namespace linex
