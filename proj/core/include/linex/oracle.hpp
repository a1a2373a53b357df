#pragma once

#include <cstddef>

#include "linex/bias.hpp"
#include "linex/bit_matrix.hpp"
#include "linex/stats.hpp"

namespace linex {

inline constexpr std::size_t kOracleCap = 26;

/// Exact distribution of Y = G X for IID X of bias eps, by summing
/// prod_i rho(x_i) into bucket G x over all 2^n inputs (Gray-code order, one
/// column XOR per step, compensated summation per bucket).
///
/// Throws InfeasibleError when n > cap or k > 32 and RankError when G lacks
/// full row rank.
[[nodiscard]] ExactStats exact_output_pmf(const BitMatrix& g, Bias eps, std::size_t cap = kOracleCap,
                                          unsigned threads = 1);

}  // namespace linex
