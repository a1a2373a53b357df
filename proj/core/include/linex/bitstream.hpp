#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linex {

/// Bit sequence of exact length, packed MSB-first within each byte: bit i is
/// bit 7 - i%8 of byte i/8. Unused low bits of the last byte are zero.
class BitStream {
public:
    BitStream() = default;

    [[nodiscard]] static BitStream from_string(std::string_view bits);
    /// Throws ParameterError if nbits exceeds 8 * bytes.size().
    [[nodiscard]] static BitStream from_bytes(std::vector<std::uint8_t> bytes, std::size_t nbits);

    [[nodiscard]] std::size_t size() const noexcept { return bits_; }
    [[nodiscard]] bool empty() const noexcept { return bits_ == 0; }
    [[nodiscard]] bool get(std::size_t i) const noexcept { return ((bytes_[i >> 3] >> (7 - (i & 7))) & 1U) != 0; }
    [[nodiscard]] std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

    /// Reads `count` <= 57 bits starting at `pos`; the first bit read ends up
    /// as the most significant of the returned value. Bits past size() read as 0.
    [[nodiscard]] std::uint64_t read_bits(std::size_t pos, unsigned count) const noexcept;

    void push_back(bool bit);
    /// Appends the low `count` bits of `value`, most significant first. count <= 64.
    void append_bits(std::uint64_t value, unsigned count);
    void append(const BitStream& other);
    void reserve_bits(std::size_t nbits) { bytes_.reserve((nbits + 7) / 8); }

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::size_t count_ones() const noexcept;

    friend bool operator==(const BitStream&, const BitStream&) = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t bits_ = 0;
};

/// Sidecar path holding the exact bit length: "<path>.len".
[[nodiscard]] std::filesystem::path bit_length_sidecar(const std::filesystem::path& path);

/// Writes raw bytes. A sidecar length file is written when the length is not a
/// multiple of 8 and removed otherwise.
void write_bitstream(const std::filesystem::path& path, const BitStream& stream);

/// Reads raw bytes; the sidecar, when present, gives the exact bit length.
[[nodiscard]] BitStream read_bitstream(const std::filesystem::path& path);

}  // namespace linex
