#include "linex/bitstream.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iterator>

#include "linex/errors.hpp"

namespace linex {

BitStream BitStream::from_string(std::string_view bits) {
    BitStream s;
    s.reserve_bits(bits.size());
    for (const char c : bits) {
        if (c == ' ' || c == '_') continue;
        if (c != '0' && c != '1') throw ParameterError("bit string contains '" + std::string(1, c) + "'");
        s.push_back(c == '1');
    }
    return s;
}

BitStream BitStream::from_bytes(std::vector<std::uint8_t> bytes, std::size_t nbits) {
    if (nbits > bytes.size() * 8) {
        throw ParameterError("bit length " + std::to_string(nbits) + " exceeds " + std::to_string(bytes.size()) + " bytes");
    }
    BitStream s;
    bytes.resize((nbits + 7) / 8);
    if (const auto tail = nbits % 8; tail != 0) bytes.back() &= static_cast<std::uint8_t>(0xFF00U >> tail);
    s.bytes_ = std::move(bytes);
    s.bits_ = nbits;
    return s;
}

std::uint64_t BitStream::read_bits(std::size_t pos, unsigned count) const noexcept {
    if (count == 0) return 0;
    const auto idx = pos >> 3;
    std::uint64_t word = 0;
    if (idx + 8 <= bytes_.size()) {
        for (std::size_t b = 0; b < 8; ++b) word = (word << 8) | bytes_[idx + b];
    } else {
        for (std::size_t b = 0; b < 8; ++b) word = (word << 8) | (idx + b < bytes_.size() ? bytes_[idx + b] : 0U);
    }
    return (word << (pos & 7)) >> (64 - count);
}

void BitStream::push_back(bool bit) {
    if ((bits_ & 7) == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80U >> (bits_ & 7));
    ++bits_;
}

void BitStream::append_bits(std::uint64_t value, unsigned count) {
    while (count > 0) {
        if ((bits_ & 7) == 0) bytes_.push_back(0);
        const unsigned free = 8 - static_cast<unsigned>(bits_ & 7);
        const unsigned take = std::min(free, count);
        const auto chunk = static_cast<std::uint8_t>((value >> (count - take)) & ((1U << take) - 1));
        bytes_.back() |= static_cast<std::uint8_t>(chunk << (free - take));
        bits_ += take;
        count -= take;
    }
}

void BitStream::append(const BitStream& other) {
    if ((bits_ & 7) == 0) {
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        bits_ += other.bits_;
        return;
    }
    const auto full = other.bits_ / 8;
    for (std::size_t b = 0; b < full; ++b) append_bits(other.bytes_[b], 8);
    if (const auto tail = static_cast<unsigned>(other.bits_ % 8); tail != 0) {
        append_bits(other.bytes_[full] >> (8 - tail), tail);
    }
}

std::string BitStream::to_string() const {
    std::string s(bits_, '0');
    for (std::size_t i = 0; i < bits_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

std::size_t BitStream::count_ones() const noexcept {
    std::size_t n = 0;
    for (const auto b : bytes_) n += static_cast<std::size_t>(std::popcount(b));
    return n;
}

std::filesystem::path bit_length_sidecar(const std::filesystem::path& path) {
    auto p = path;
    p += ".len";
    return p;
}

void write_bitstream(const std::filesystem::path& path, const BitStream& stream) {
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write bitstream file " + path.string());
        const auto bytes = stream.bytes();
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("write failed for " + path.string());
    }
    const auto sidecar = bit_length_sidecar(path);
    if (stream.size() % 8 != 0) {
        std::ofstream len(sidecar, std::ios::trunc);
        if (!len) throw std::runtime_error("cannot write length file " + sidecar.string());
        len << stream.size() << '\n';
    } else {
        std::error_code ec;
        std::filesystem::remove(sidecar, ec);
    }
}

BitStream read_bitstream(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open bitstream file " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    std::size_t nbits = bytes.size() * 8;
    const auto sidecar = bit_length_sidecar(path);
    if (std::filesystem::exists(sidecar)) {
        std::ifstream len(sidecar);
        if (!(len >> nbits)) throw ParseError(1, "malformed bit length in " + sidecar.string());
    }
    return BitStream::from_bytes(std::move(bytes), nbits);
}

}  // namespace linex
