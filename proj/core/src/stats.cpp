#include "linex/stats.hpp"

#include <algorithm>
#include <cmath>

#include "linex/errors.hpp"

namespace linex {

ExactStats stats_from_pmf(std::vector<double> pmf, std::size_t k) {
    if (pmf.size() != (std::size_t{1} << k)) throw DimensionError("pmf size", std::size_t{1} << k, pmf.size());

    ExactStats s;
    s.k = k;
    s.pmf = std::move(pmf);
    s.coord_biases.assign(k, 0.0);

    const double uniform = std::ldexp(1.0, -static_cast<int>(k));
    double entropy_bits = 0.0;
    for (std::size_t g = 0; g < s.pmf.size(); ++g) {
        const double p = s.pmf[g];
        s.delta += std::abs(p - uniform);
        s.max_prob = std::max(s.max_prob, p);
        if (p > 0.0) entropy_bits -= p * std::log2(p);
        for (std::size_t i = 0; i < k; ++i) s.coord_biases[i] += ((g >> i) & 1U) ? -p : p;
    }
    for (auto& b : s.coord_biases) b = std::abs(b);

    const auto kd = static_cast<double>(k);
    s.tvd = 0.5 * s.delta;
    s.shannon = k == 0 ? 0.0 : entropy_bits / kd;
    s.min_entropy = k == 0 ? 0.0 : -std::log2(s.max_prob) / kd;
    // -log2(1) can come out as -0.0
    if (s.min_entropy == 0.0) s.min_entropy = 0.0;
    return s;
}

namespace {

void check_framing(const BitStream& stream, std::size_t k) {
    if (k == 0) throw ParameterError("word width k must be at least 1");
    if (stream.size() % k != 0) {
        throw ParameterError("stream length " + std::to_string(stream.size()) + " is not a multiple of k=" +
                             std::to_string(k));
    }
}

}  // namespace

EmpiricalStats empirical_stats(const BitStream& stream, std::size_t k) {
    check_framing(stream, k);
    if (k > kMaxBinnedWidth) {
        throw InfeasibleError("k=" + std::to_string(k) + " is too wide to bin (max " + std::to_string(kMaxBinnedWidth) +
                              "); use per-coordinate (marginal) biases instead");
    }

    const std::size_t words = stream.size() / k;
    std::vector<std::uint64_t> counts(std::size_t{1} << k, 0);
    const auto width = static_cast<unsigned>(k);
    for (std::size_t w = 0; w < words; ++w) {
        const auto msb_first = stream.read_bits(w * k, width);
        std::size_t index = 0;
        for (unsigned i = 0; i < width; ++i) index |= ((msb_first >> (width - 1 - i)) & 1U) << i;
        ++counts[index];
    }

    std::vector<double> pmf(counts.size(), 0.0);
    if (words > 0) {
        for (std::size_t g = 0; g < counts.size(); ++g) pmf[g] = static_cast<double>(counts[g]) / static_cast<double>(words);
    }

    EmpiricalStats e;
    e.stats = stats_from_pmf(std::move(pmf), k);
    e.samples = words;
    e.delta_noise_floor = words == 0 ? INFINITY : std::sqrt(std::ldexp(1.0, static_cast<int>(k)) / static_cast<double>(words));
    e.tvd_noise_floor = 0.5 * e.delta_noise_floor;
    return e;
}

std::vector<double> empirical_coordinate_biases(const BitStream& stream, std::size_t k) {
    check_framing(stream, k);
    const std::size_t words = stream.size() / k;
    std::vector<std::uint64_t> ones(k, 0);
    for (std::size_t w = 0; w < words; ++w) {
        for (std::size_t i = 0; i < k; ++i) ones[i] += stream.get(w * k + i) ? 1U : 0U;
    }
    std::vector<double> biases(k, 0.0);
    if (words == 0) return biases;
    for (std::size_t i = 0; i < k; ++i) {
        const double p1 = static_cast<double>(ones[i]) / static_cast<double>(words);
        biases[i] = std::abs(1.0 - 2.0 * p1);
    }
    return biases;
}

}  // namespace linex
