#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "linex/bit_matrix.hpp"
#include "linex/weight_distribution.hpp"

namespace linex {

inline constexpr std::size_t kDefaultEnumerationCap = 28;

/// Binary linear code given by a full-rank generator matrix.
class LinearCode {
public:
    /// Throws RankError unless `generator` has full row rank.
    LinearCode(BitMatrix generator, std::string label = {});

    [[nodiscard]] const BitMatrix& generator() const noexcept { return generator_; }
    [[nodiscard]] const std::string& label() const noexcept { return label_; }
    [[nodiscard]] std::size_t length() const noexcept { return generator_.cols(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return generator_.rows(); }

    [[nodiscard]] const std::optional<WeightDistribution>& cached_weights() const noexcept { return weights_; }
    /// Throws DimensionError if w does not describe an [n, k] code.
    void set_weights(WeightDistribution w);

private:
    BitMatrix generator_;
    std::string label_;
    std::optional<WeightDistribution> weights_;
};

/// Exhaustive weight enumeration in Gray-code order: consecutive codewords
/// differ by one generator row. Visits 2^k codewords; throws InfeasibleError
/// when k > cap. The message space may be split over `threads` contiguous
/// segments; the result does not depend on the thread count.
[[nodiscard]] WeightDistribution enumerate_weights(const LinearCode& code,
                                                   std::size_t cap = kDefaultEnumerationCap,
                                                   unsigned threads = 1);

/// (n-k) x n generator H of the dual code, G H^T = 0.
[[nodiscard]] LinearCode dual_generator(const LinearCode& code);

/// A_l of C from the exact distribution of the dual code, via Krawtchouk sums.
/// Throws ConsistencyError if the division by |C^perp| is not exact or the
/// result is not a valid distribution.
[[nodiscard]] WeightDistribution macwilliams_transform(const WeightDistribution& dual_weights);

enum class WeightSource { enumerate, macwilliams, external };

[[nodiscard]] std::string to_string(WeightSource source);

struct ResolvedWeights {
    WeightDistribution weights;
    WeightSource source;
};

/// Weight distribution by the cheapest exact route: cached/external if set,
/// else enumeration when k <= cap, else MacWilliams over the dual when
/// n-k <= cap. Throws InfeasibleError otherwise.
[[nodiscard]] ResolvedWeights resolve_weights(const LinearCode& code,
                                              std::size_t cap = kDefaultEnumerationCap,
                                              unsigned threads = 1);

}  // namespace linex
