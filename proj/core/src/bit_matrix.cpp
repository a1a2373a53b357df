#include "linex/bit_matrix.hpp"

#include <bit>
#include <numeric>
#include <utility>

#include "linex/errors.hpp"

namespace linex {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    const auto cols = rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("row " + std::to_string(i) + " length", cols, rows[i].size());
        for (std::size_t j = 0; j < cols; ++j) {
            const char c = rows[i][j];
            if (c != '0' && c != '1') {
                throw ParameterError("row " + std::to_string(i) + " contains '" + std::string(1, c) + "'");
            }
            m.set(i, j, c == '1');
        }
    }
    return m;
}

void BitMatrix::set(std::size_t i, std::size_t j, bool value) noexcept {
    auto& word = data_[i * stride_ + j / kWordBits];
    const auto mask = std::uint64_t{1} << (j % kWordBits);
    word = value ? (word | mask) : (word & ~mask);
}

BitVector BitMatrix::row_vector(std::size_t i) const {
    const auto r = row(i);
    return BitVector::from_words(cols_, {r.begin(), r.end()});
}

std::size_t BitMatrix::row_weight(std::size_t i) const noexcept {
    std::size_t w = 0;
    for (const auto word : row(i)) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) noexcept {
    auto* d = data_.data() + dst * stride_;
    const auto* s = data_.data() + src * stride_;
    for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    auto ra = row(a);
    auto rb = row(b);
    for (std::size_t w = 0; w < stride_; ++w) std::swap(ra[w], rb[w]);
}

void BitMatrix::swap_cols(std::size_t a, std::size_t b) noexcept {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const bool va = get(i, a);
        const bool vb = get(i, b);
        set(i, a, vb);
        set(i, b, va);
    }
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (get(i, j)) t.set(j, i, true);
        }
    }
    return t;
}

BitVector matvec(const BitMatrix& g, const BitVector& x) {
    if (x.size() != g.cols()) throw DimensionError("matvec input length", g.cols(), x.size());
    BitVector y(g.rows());
    const auto xw = x.words();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        const auto r = g.row(i);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < r.size(); ++w) acc ^= r[w] & xw[w];
        if ((std::popcount(acc) & 1) != 0) y.set(i, true);
    }
    return y;
}

std::size_t rank(const BitMatrix& g) {
    BitMatrix m = g;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.rows() && !m.get(r, col)) ++r;
        if (r == m.rows()) continue;
        m.swap_rows(r, pivot_row);
        for (std::size_t below = pivot_row + 1; below < m.rows(); ++below) {
            if (m.get(below, col)) m.add_row(below, pivot_row);
        }
        ++pivot_row;
    }
    return pivot_row;
}

SystematicForm systematize(const BitMatrix& g) {
    const auto k = g.rows();
    const auto n = g.cols();
    if (k > n) throw RankError(rank(g), k);

    SystematicForm out{g, std::vector<std::size_t>(n)};
    std::iota(out.column_permutation.begin(), out.column_permutation.end(), std::size_t{0});
    auto& m = out.matrix;

    for (std::size_t i = 0; i < k; ++i) {
        std::size_t pivot = i;
        while (pivot < k && !m.get(pivot, i)) ++pivot;

        if (pivot == k) {
            // import a pivot column from the right
            bool found = false;
            for (std::size_t j = i + 1; j < n && !found; ++j) {
                for (std::size_t r = i; r < k; ++r) {
                    if (m.get(r, j)) {
                        m.swap_cols(i, j);
                        std::swap(out.column_permutation[i], out.column_permutation[j]);
                        pivot = r;
                        found = true;
                        break;
                    }
                }
            }
            if (!found) throw RankError(i, k);
        }

        m.swap_rows(pivot, i);
        for (std::size_t r = 0; r < k; ++r) {
            if (r != i && m.get(r, i)) m.add_row(r, i);
        }
    }
    return out;
}

}  // namespace linex
