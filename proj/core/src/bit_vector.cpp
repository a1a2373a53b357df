#include "linex/bit_vector.hpp"

#include <bit>

#include "linex/errors.hpp"

namespace linex {

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for_bits(len), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw ParameterError("bit string contains '" + std::string(1, bits[i]) + "' at position " +
                                 std::to_string(i));
        }
    }
    return v;
}

BitVector BitVector::from_words(std::size_t len, std::vector<std::uint64_t> words) {
    if (words.size() != words_for_bits(len)) {
        throw DimensionError("BitVector::from_words word count", words_for_bits(len), words.size());
    }
    BitVector v;
    v.len_ = len;
    v.words_ = std::move(words);
    if (const auto tail = len % kWordBits; tail != 0) {
        v.words_.back() &= (std::uint64_t{1} << tail) - 1;
    }
    return v;
}

void BitVector::set(std::size_t i, bool value) noexcept {
    const auto mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

std::size_t BitVector::weight() const noexcept {
    std::size_t w = 0;
    for (const auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.len_ != len_) throw DimensionError("BitVector xor length", len_, other.len_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

}  // namespace linex
