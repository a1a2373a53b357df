#include "linex/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <thread>

#include "linex/errors.hpp"

namespace linex {

LinearCode::LinearCode(BitMatrix generator, std::string label)
    : generator_(std::move(generator)), label_(std::move(label)) {
    if (const auto r = rank(generator_); r != generator_.rows()) throw RankError(r, generator_.rows());
}

void LinearCode::set_weights(WeightDistribution w) {
    if (w.length() != length()) throw DimensionError("weight distribution length n", length(), w.length());
    if (w.dimension() != dimension()) throw DimensionError("weight distribution dimension k", dimension(), w.dimension());
    weights_ = std::move(w);
}

namespace {

// Histogram of codeword weights for message indices [begin, end) in Gray order.
std::vector<std::uint64_t> enumerate_segment(const BitMatrix& g, std::uint64_t begin, std::uint64_t end) {
    const auto n = g.cols();
    const auto stride = g.words_per_row();
    std::vector<std::uint64_t> hist(n + 1, 0);
    if (begin >= end) return hist;

    std::vector<std::uint64_t> cur(stride, 0);
    const std::uint64_t start_gray = begin ^ (begin >> 1);
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if ((start_gray >> i) & 1U) {
            const auto r = g.row(i);
            for (std::size_t w = 0; w < stride; ++w) cur[w] ^= r[w];
        }
    }

    auto weight_of = [&] {
        std::size_t wt = 0;
        for (const auto word : cur) wt += static_cast<std::size_t>(std::popcount(word));
        return wt;
    };
    ++hist[weight_of()];

    if (stride == 1) {
        std::uint64_t word = cur[0];
        std::vector<std::uint64_t> rows(g.rows());
        for (std::size_t i = 0; i < g.rows(); ++i) rows[i] = g.row(i)[0];
        for (std::uint64_t idx = begin + 1; idx < end; ++idx) {
            word ^= rows[static_cast<std::size_t>(std::countr_zero(idx))];
            ++hist[static_cast<std::size_t>(std::popcount(word))];
        }
        return hist;
    }

    for (std::uint64_t idx = begin + 1; idx < end; ++idx) {
        const auto r = g.row(static_cast<std::size_t>(std::countr_zero(idx)));
        std::size_t wt = 0;
        for (std::size_t w = 0; w < stride; ++w) {
            cur[w] ^= r[w];
            wt += static_cast<std::size_t>(std::popcount(cur[w]));
        }
        ++hist[wt];
    }
    return hist;
}

}  // namespace

WeightDistribution enumerate_weights(const LinearCode& code, std::size_t cap, unsigned threads) {
    const auto k = code.dimension();
    const auto n = code.length();
    if (k > cap) {
        throw InfeasibleError("dimension too large, use MacWilliams or supply external distribution (k=" +
                              std::to_string(k) + " exceeds enumeration cap " + std::to_string(cap) + ")");
    }
    if (k >= 63) throw InfeasibleError("dimension too large for exhaustive enumeration (k=" + std::to_string(k) + ")");

    const std::uint64_t total = std::uint64_t{1} << k;
    const std::uint64_t parts = std::clamp<std::uint64_t>(threads, 1, total);
    std::vector<std::vector<std::uint64_t>> partial(parts);

    if (parts == 1) {
        partial[0] = enumerate_segment(code.generator(), 0, total);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(parts);
        for (std::uint64_t p = 0; p < parts; ++p) {
            const auto begin = total * p / parts;
            const auto end = total * (p + 1) / parts;
            workers.emplace_back([&, p, begin, end] { partial[p] = enumerate_segment(code.generator(), begin, end); });
        }
    }

    std::vector<BigCount> counts(n + 1, 0);
    for (const auto& hist : partial) {
        for (std::size_t l = 0; l <= n; ++l) counts[l] += hist[l];
    }
    return WeightDistribution(n, k, std::move(counts));
}

LinearCode dual_generator(const LinearCode& code) {
    const auto k = code.dimension();
    const auto n = code.length();
    const auto sys = systematize(code.generator());
    const auto& perm = sys.column_permutation;

    // [I_k | A] has dual [A^T | I_{n-k}]; undo the column permutation.
    BitMatrix h(n - k, n);
    for (std::size_t t = 0; t < n - k; ++t) {
        for (std::size_t p = 0; p < k; ++p) {
            if (sys.matrix.get(p, k + t)) h.set(t, perm[p], true);
        }
        h.set(t, perm[k + t], true);
    }
    const auto label = code.label().empty() ? std::string{} : code.label() + " dual";
    return LinearCode(std::move(h), label);
}

namespace {

std::vector<BigCount> binomial_row(std::size_t n) {
    std::vector<BigCount> row(n + 1);
    row[0] = 1;
    for (std::size_t s = 1; s <= n; ++s) row[s] = row[s - 1] * (n - s + 1) / s;
    return row;
}

}  // namespace

WeightDistribution macwilliams_transform(const WeightDistribution& dual_weights) {
    const auto n = dual_weights.length();
    const auto dual_k = dual_weights.dimension();
    const auto k = n - dual_k;

    std::vector<BigCount> sums(n + 1, 0);
    for (std::size_t l = 0; l <= n; ++l) {
        const auto& a = dual_weights[l];
        if (a == 0) continue;
        const auto left = binomial_row(l);
        const auto right = binomial_row(n - l);
        // K_j(l) = sum_s (-1)^s C(l, s) C(n - l, j - s)
        for (std::size_t j = 0; j <= n; ++j) {
            BigCount kraw = 0;
            const auto s_lo = j > n - l ? j - (n - l) : 0;
            const auto s_hi = std::min(j, l);
            for (std::size_t s = s_lo; s <= s_hi; ++s) {
                if (s % 2 == 0) {
                    kraw += left[s] * right[j - s];
                } else {
                    kraw -= left[s] * right[j - s];
                }
            }
            sums[j] += a * kraw;
        }
    }

    const BigCount size = BigCount{1} << dual_k;
    std::vector<BigCount> counts(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        BigCount q;
        BigCount r;
        boost::multiprecision::divide_qr(sums[j], size, q, r);
        if (r != 0) {
            throw ConsistencyError("MacWilliams transform: Krawtchouk sum for weight " + std::to_string(j) +
                                   " is not divisible by 2^" + std::to_string(dual_k) +
                                   "; input is not a dual weight distribution");
        }
        counts[j] = std::move(q);
    }

    try {
        return WeightDistribution(n, k, std::move(counts));
    } catch (const std::invalid_argument& e) {
        throw ConsistencyError(std::string("MacWilliams transform produced an invalid distribution: ") + e.what());
    }
}

std::string to_string(WeightSource source) {
    switch (source) {
        case WeightSource::enumerate: return "enumerate";
        case WeightSource::macwilliams: return "macwilliams";
        case WeightSource::external: return "external";
    }
    return "unknown";
}

ResolvedWeights resolve_weights(const LinearCode& code, std::size_t cap, unsigned threads) {
    if (code.cached_weights()) return {*code.cached_weights(), WeightSource::external};
    const auto k = code.dimension();
    const auto n = code.length();
    if (k <= cap) return {enumerate_weights(code, cap, threads), WeightSource::enumerate};
    if (n - k <= cap) {
        const auto dual = dual_generator(code);
        return {macwilliams_transform(enumerate_weights(dual, cap, threads)), WeightSource::macwilliams};
    }
    throw InfeasibleError("weight distribution of [" + std::to_string(n) + "," + std::to_string(k) +
                          "] code requires external distribution: k=" + std::to_string(k) +
                          " and dual dimension " + std::to_string(n - k) + " both exceed enumeration cap " +
                          std::to_string(cap));
}

}  // namespace linex
