#include "linex/extractor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>

namespace linex {

LinearExtractor::LinearExtractor(const BitMatrix& g)
    : n_(g.cols()), k_(g.rows()), out_words_(words_for_bits(g.rows())) {
    // column j of G packed in output order: coordinate i at word i/64, bit 63 - i%64
    std::vector<std::uint64_t> columns(n_ * out_words_, 0);
    for (std::size_t i = 0; i < k_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (g.get(i, j)) columns[j * out_words_ + i / 64] |= std::uint64_t{1} << (63 - i % 64);
        }
    }

    std::size_t offset = 0;
    for (std::size_t start = 0; start < n_; start += 8) {
        const auto bits = static_cast<unsigned>(std::min<std::size_t>(8, n_ - start));
        chunk_bits_.push_back(bits);
        chunk_offset_.push_back(offset);
        const std::size_t entries = std::size_t{1} << bits;
        table_.resize(offset + entries * out_words_, 0);
        // value v: its most significant bit is the first column of the chunk
        for (std::size_t v = 1; v < entries; ++v) {
            const auto low = static_cast<unsigned>(std::countr_zero(v));
            const auto col = start + (bits - 1 - low);
            const auto prev = v & (v - 1);
            for (std::size_t w = 0; w < out_words_; ++w) {
                table_[offset + v * out_words_ + w] =
                    table_[offset + prev * out_words_ + w] ^ columns[col * out_words_ + w];
            }
        }
        offset += entries * out_words_;
    }
}

void LinearExtractor::run(const BitStream& input, std::size_t first, std::size_t last, BitStream& out) const {
    if (first >= last || k_ == 0) return;
    out.reserve_bits(out.size() + (last - first) * k_);
    const auto chunks = chunk_bits_.size();

    if (out_words_ == 1) {
        const auto shift = static_cast<unsigned>(64 - k_);
        for (std::size_t b = first; b < last; ++b) {
            std::size_t pos = b * n_;
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < chunks; ++c) {
                const auto v = input.read_bits(pos, chunk_bits_[c]);
                acc ^= table_[chunk_offset_[c] + v];
                pos += chunk_bits_[c];
            }
            out.append_bits(acc >> shift, static_cast<unsigned>(k_));
        }
        return;
    }

    std::vector<std::uint64_t> acc(out_words_);
    for (std::size_t b = first; b < last; ++b) {
        std::fill(acc.begin(), acc.end(), 0);
        std::size_t pos = b * n_;
        for (std::size_t c = 0; c < chunks; ++c) {
            const auto v = input.read_bits(pos, chunk_bits_[c]);
            const auto* entry = &table_[chunk_offset_[c] + v * out_words_];
            for (std::size_t w = 0; w < out_words_; ++w) acc[w] ^= entry[w];
            pos += chunk_bits_[c];
        }
        for (std::size_t w = 0; w < out_words_; ++w) {
            const auto count = static_cast<unsigned>(std::min<std::size_t>(64, k_ - 64 * w));
            out.append_bits(acc[w] >> (64 - count), count);
        }
    }
}

BitStream LinearExtractor::extract(const BitStream& input, unsigned threads) const {
    const auto blocks = n_ == 0 ? 0 : input.size() / n_;
    const auto parts = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(blocks, 1));
    if (parts == 1) {
        BitStream out;
        run(input, 0, blocks, out);
        return out;
    }

    std::vector<BitStream> pieces(parts);
    {
        std::vector<std::jthread> workers;
        workers.reserve(parts);
        for (std::size_t p = 0; p < parts; ++p) {
            const auto first = blocks * p / parts;
            const auto last = blocks * (p + 1) / parts;
            workers.emplace_back([&, p, first, last] { run(input, first, last, pieces[p]); });
        }
    }
    BitStream out = std::move(pieces[0]);
    for (std::size_t p = 1; p < parts; ++p) out.append(pieces[p]);
    return out;
}

BitStream linear_extract(const BitMatrix& g, const BitStream& input, unsigned threads) {
    return LinearExtractor(g).extract(input, threads);
}

namespace {

struct PairTableEntry {
    std::uint8_t bits;
    std::uint8_t count;
};

// Output of the four bit pairs in one byte, packed as the low `count` bits.
constexpr std::array<PairTableEntry, 256> make_pair_table() {
    std::array<PairTableEntry, 256> table{};
    for (unsigned v = 0; v < 256; ++v) {
        std::uint8_t bits = 0;
        std::uint8_t count = 0;
        for (int pair = 3; pair >= 0; --pair) {
            const unsigned a = (v >> (2 * pair + 1)) & 1U;
            const unsigned b = (v >> (2 * pair)) & 1U;
            if (a != b) {
                bits = static_cast<std::uint8_t>((bits << 1) | a);
                ++count;
            }
        }
        table[v] = {bits, count};
    }
    return table;
}

constexpr auto kPairTable = make_pair_table();

}  // namespace

BitStream von_neumann(const BitStream& input) {
    BitStream out;
    out.reserve_bits(input.size() / 4);
    const auto bytes = input.bytes();
    const auto full = input.size() / 8;
    for (std::size_t i = 0; i < full; ++i) {
        const auto e = kPairTable[bytes[i]];
        out.append_bits(e.bits, e.count);
    }
    for (std::size_t pos = full * 8; pos + 1 < input.size(); pos += 2) {
        const bool a = input.get(pos);
        if (a != input.get(pos + 1)) out.push_back(a);
    }
    return out;
}

}  // namespace linex
