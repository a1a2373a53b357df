#include "linex/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "linex/errors.hpp"

namespace linex {
namespace {

struct Buckets {
    std::vector<double> sum;
    std::vector<double> comp;

    explicit Buckets(std::size_t size) : sum(size, 0.0), comp(size, 0.0) {}

    void add(std::size_t idx, double value) {
        const double y = value - comp[idx];
        const double t = sum[idx] + y;
        comp[idx] = (t - sum[idx]) - y;
        sum[idx] = t;
    }
};

// Accumulates inputs with Gray index in [begin, end).
void accumulate(const std::vector<std::uint32_t>& columns, const std::vector<double>& prob_by_weight,
                std::uint64_t begin, std::uint64_t end, Buckets& buckets) {
    if (begin >= end) return;
    std::uint64_t x = begin ^ (begin >> 1);
    std::uint32_t y = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if ((x >> j) & 1U) y ^= columns[j];
    }
    auto weight = static_cast<std::size_t>(std::popcount(x));
    buckets.add(y, prob_by_weight[weight]);

    for (std::uint64_t i = begin + 1; i < end; ++i) {
        const auto j = static_cast<std::size_t>(std::countr_zero(i));
        const std::uint64_t bit = std::uint64_t{1} << j;
        weight = (x & bit) ? weight - 1 : weight + 1;
        x ^= bit;
        y ^= columns[j];
        buckets.add(y, prob_by_weight[weight]);
    }
}

}  // namespace

ExactStats exact_output_pmf(const BitMatrix& g, Bias eps, std::size_t cap, unsigned threads) {
    const auto n = g.cols();
    const auto k = g.rows();
    if (n > cap || n >= 63) {
        throw InfeasibleError("exact oracle enumerates 2^n inputs; n=" + std::to_string(n) + " exceeds cap " +
                              std::to_string(cap) + ", use Monte Carlo simulation instead");
    }
    if (k > 32) throw InfeasibleError("exact oracle supports k <= 32, got k=" + std::to_string(k));
    if (const auto r = rank(g); r != k) throw RankError(r, k);

    std::vector<std::uint32_t> columns(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            if (g.get(i, j)) columns[j] |= std::uint32_t{1} << i;
        }
    }

    std::vector<double> prob_by_weight(n + 1);
    for (std::size_t w = 0; w <= n; ++w) {
        prob_by_weight[w] = std::pow(eps.prob_zero(), static_cast<double>(n - w)) *
                            std::pow(eps.prob_one(), static_cast<double>(w));
    }

    const std::size_t outcomes = std::size_t{1} << k;
    const std::uint64_t total = std::uint64_t{1} << n;
    const auto parts = static_cast<std::size_t>(std::clamp<std::uint64_t>(threads, 1, total));

    std::vector<Buckets> partial(parts, Buckets(outcomes));
    if (parts == 1) {
        accumulate(columns, prob_by_weight, 0, total, partial[0]);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(parts);
        for (std::size_t p = 0; p < parts; ++p) {
            const auto begin = total * p / parts;
            const auto end = total * (p + 1) / parts;
            workers.emplace_back([&, p, begin, end] { accumulate(columns, prob_by_weight, begin, end, partial[p]); });
        }
    }

    Buckets merged(outcomes);
    for (const auto& part : partial) {
        for (std::size_t gamma = 0; gamma < outcomes; ++gamma) merged.add(gamma, part.sum[gamma] - part.comp[gamma]);
    }
    return stats_from_pmf(std::move(merged.sum), k);
}

}  // namespace linex
