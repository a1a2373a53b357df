#pragma once

#include <cstddef>

#include "linex/linear_code.hpp"

namespace linex {

inline constexpr unsigned kMaxReedMullerLog = 16;

/// Dimension sum_{i<=r} C(m, i) of RM(r, m).
[[nodiscard]] std::size_t reed_muller_dimension(unsigned r, unsigned m);

/// Generator of the Reed-Muller code RM(r, m), length 2^m.
///
/// Rows are evaluations of the monomials of degree <= r in x_0..x_{m-1},
/// ordered by degree and then by the lexicographic order of the variable
/// index sets ({}, {0}, {1}, ..., {0,1}, {0,2}, ...). Column p is the point
/// whose integer value is p, with x_i equal to bit i of p. The ordering is
/// fixed so serialized matrices are byte-reproducible.
///
/// Throws ParameterError unless 1 <= m <= kMaxReedMullerLog and r <= m.
[[nodiscard]] LinearCode rm_generator(unsigned r, unsigned m);

}  // namespace linex
