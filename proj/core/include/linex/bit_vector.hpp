#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linex {

inline constexpr std::size_t kWordBits = 64;

[[nodiscard]] constexpr std::size_t words_for_bits(std::size_t bits) noexcept {
    return (bits + kWordBits - 1) / kWordBits;
}

/// Fixed-length vector over GF(2). Bit j lives in word j/64 at position j%64
/// (LSB-first). Padding bits past len() are always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len);

    /// Parses a string of '0'/'1' characters, first character is bit 0.
    [[nodiscard]] static BitVector from_string(std::string_view bits);

    /// Adopts packed words; bits beyond len are cleared.
    [[nodiscard]] static BitVector from_words(std::size_t len, std::vector<std::uint64_t> words);

    [[nodiscard]] std::size_t size() const noexcept { return len_; }
    [[nodiscard]] bool get(std::size_t i) const noexcept {
        return ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0;
    }
    void set(std::size_t i, bool value) noexcept;
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

    [[nodiscard]] std::size_t weight() const noexcept;
    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
    [[nodiscard]] std::string to_string() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace linex
