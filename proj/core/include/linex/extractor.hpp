#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linex/bit_matrix.hpp"
#include "linex/bitstream.hpp"

namespace linex {

/// Streaming Y = G X over consecutive n-bit blocks of a bit stream.
///
/// Each block is split into byte-sized chunks; a precomputed table maps every
/// chunk value to the XOR of the matching columns of G, so one block costs
/// ceil(n/8) lookups and no per-bit branching. Output coordinate order follows
/// the row order of G. A trailing partial block is discarded.
class LinearExtractor {
public:
    explicit LinearExtractor(const BitMatrix& g);

    [[nodiscard]] std::size_t input_block() const noexcept { return n_; }
    [[nodiscard]] std::size_t output_block() const noexcept { return k_; }

    /// Processes blocks [first, last) of `input`, appending to `out`.
    void run(const BitStream& input, std::size_t first, std::size_t last, BitStream& out) const;

    /// Splits the blocks over `threads` contiguous ranges; output is identical
    /// to the single-threaded result.
    [[nodiscard]] BitStream extract(const BitStream& input, unsigned threads = 1) const;

private:
    std::size_t n_;
    std::size_t k_;
    std::size_t out_words_;
    std::vector<unsigned> chunk_bits_;
    std::vector<std::size_t> chunk_offset_;  // into table_, in words
    std::vector<std::uint64_t> table_;
};

[[nodiscard]] BitStream linear_extract(const BitMatrix& g, const BitStream& input, unsigned threads = 1);

/// Pairwise debiasing: 01 -> 0, 10 -> 1, 00 and 11 dropped. A trailing odd bit is dropped.
[[nodiscard]] BitStream von_neumann(const BitStream& input);

}  // namespace linex
