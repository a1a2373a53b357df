#pragma once

#include <string>

#include "linex/errors.hpp"

namespace linex {

/// Source bias eps = |P(X=1) - P(X=0)| in [0, 1], without the 1/2 factor.
///
/// The simulator and exact oracle take zero as the more likely symbol:
/// rho(0) = 1/2 + eps/2, rho(1) = 1/2 - eps/2.
class Bias {
public:
    explicit Bias(double eps) : eps_(eps) {
        if (!(eps >= 0.0 && eps <= 1.0)) throw ParameterError("bias must lie in [0, 1], got " + std::to_string(eps));
    }

    [[nodiscard]] double value() const noexcept { return eps_; }
    [[nodiscard]] double prob_zero() const noexcept { return 0.5 + 0.5 * eps_; }
    [[nodiscard]] double prob_one() const noexcept { return 0.5 - 0.5 * eps_; }

    friend auto operator<=>(const Bias&, const Bias&) = default;

private:
    double eps_;
};

}  // namespace linex
