#include "linex/reed_muller.hpp"

#include <string>
#include <vector>

#include "linex/errors.hpp"

namespace linex {

std::size_t reed_muller_dimension(unsigned r, unsigned m) {
    std::size_t k = 0;
    std::size_t binom = 1;  // C(m, i)
    for (unsigned i = 0; i <= r && i <= m; ++i) {
        k += binom;
        binom = binom * (m - i) / (i + 1);
    }
    return k;
}

LinearCode rm_generator(unsigned r, unsigned m) {
    if (m < 1 || m > kMaxReedMullerLog) {
        throw ParameterError("Reed-Muller log-length m=" + std::to_string(m) + " outside [1, " +
                             std::to_string(kMaxReedMullerLog) + "]");
    }
    if (r > m) throw ParameterError("Reed-Muller order r=" + std::to_string(r) + " exceeds m=" + std::to_string(m));

    const std::size_t n = std::size_t{1} << m;
    const auto k = reed_muller_dimension(r, m);
    if (k * n > (std::size_t{1} << 24)) {
        throw ParameterError("RM(" + std::to_string(r) + "," + std::to_string(m) + ") generator too large to construct");
    }

    BitMatrix vars(m, n);
    for (unsigned v = 0; v < m; ++v) {
        for (std::size_t p = 0; p < n; ++p) {
            if ((p >> v) & 1U) vars.set(v, p, true);
        }
    }

    BitMatrix g(k, n);
    std::size_t row = 0;
    for (unsigned deg = 0; deg <= r; ++deg) {
        std::vector<unsigned> subset(deg);
        for (unsigned i = 0; i < deg; ++i) subset[i] = i;
        while (true) {
            auto out = g.row(row);
            for (std::size_t w = 0; w < out.size(); ++w) out[w] = ~std::uint64_t{0};
            for (const auto v : subset) {
                const auto in = vars.row(v);
                for (std::size_t w = 0; w < out.size(); ++w) out[w] &= in[w];
            }
            if (const auto tail = n % kWordBits; tail != 0) out.back() &= (std::uint64_t{1} << tail) - 1;
            ++row;

            // next subset in lexicographic order
            int i = static_cast<int>(deg) - 1;
            while (i >= 0 && subset[static_cast<std::size_t>(i)] == m - deg + static_cast<unsigned>(i)) --i;
            if (i < 0) break;
            ++subset[static_cast<std::size_t>(i)];
            for (auto j = static_cast<std::size_t>(i) + 1; j < deg; ++j) subset[j] = subset[j - 1] + 1;
        }
    }

    return LinearCode(std::move(g), "RM(" + std::to_string(r) + "," + std::to_string(m) + ")");
}

}  // namespace linex
