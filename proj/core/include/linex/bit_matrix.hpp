#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linex/bit_vector.hpp"

namespace linex {

/// Dense matrix over GF(2) with bit-packed rows, row-major.
///
/// Each row occupies words_per_row() 64-bit words; column j of a row sits in
/// word j/64 at bit j%64. Padding bits beyond cols() are kept zero so that
/// whole-word popcount and XOR are exact. A 0-row matrix is permitted and
/// represents the trivial code {0}.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    [[nodiscard]] static BitMatrix identity(std::size_t n);

    /// Each string is one row of '0'/'1' characters; all rows must have equal length.
    [[nodiscard]] static BitMatrix from_rows(const std::vector<std::string>& rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t words_per_row() const noexcept { return stride_; }

    [[nodiscard]] bool get(std::size_t i, std::size_t j) const noexcept {
        return ((data_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1U) != 0;
    }
    void set(std::size_t i, std::size_t j, bool value) noexcept;

    [[nodiscard]] std::span<const std::uint64_t> row(std::size_t i) const noexcept {
        return {data_.data() + i * stride_, stride_};
    }
    [[nodiscard]] std::span<std::uint64_t> row(std::size_t i) noexcept {
        return {data_.data() + i * stride_, stride_};
    }
    [[nodiscard]] BitVector row_vector(std::size_t i) const;
    [[nodiscard]] std::size_t row_weight(std::size_t i) const noexcept;

    /// row(dst) ^= row(src)
    void add_row(std::size_t dst, std::size_t src) noexcept;
    void swap_rows(std::size_t a, std::size_t b) noexcept;
    void swap_cols(std::size_t a, std::size_t b) noexcept;

    [[nodiscard]] BitMatrix transpose() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> data_;
};

/// y = G x over GF(2). Throws DimensionError when x.size() != G.cols().
[[nodiscard]] BitVector matvec(const BitMatrix& g, const BitVector& x);

/// Row rank over GF(2).
[[nodiscard]] std::size_t rank(const BitMatrix& g);

/// Generator matrix in the form [I_k | A] together with the column
/// permutation used to reach it: column p of `matrix` corresponds to column
/// column_permutation[p] of the original generator.
struct SystematicForm {
    BitMatrix matrix;
    std::vector<std::size_t> column_permutation;
};

/// Gaussian elimination to systematic form. Row operations are preferred; a
/// column swap is only made when no row at or below the pivot has a one in
/// the pivot column. Throws RankError when g lacks full row rank.
[[nodiscard]] SystematicForm systematize(const BitMatrix& g);

}  // namespace linex
