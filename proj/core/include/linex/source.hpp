#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "linex/bias.hpp"
#include "linex/bitstream.hpp"

namespace linex {

struct BiasedSourceSpec {
    Bias eps;
    std::uint64_t seed;
};

/// Seeded IID bit source with P(1) = 1/2 - eps/2.
///
/// Seed to stream mapping: std::mt19937_64 constructed from `seed`; each bit
/// consumes one 64-bit draw r, u = (r >> 11) * 2^-53, and the bit is 1 iff
/// u < P(1). Not safe for concurrent use.
class BiasedSource {
public:
    explicit BiasedSource(const BiasedSourceSpec& spec);

    [[nodiscard]] bool next_bit();
    void fill(BitStream& out, std::size_t nbits);

    [[nodiscard]] const BiasedSourceSpec& spec() const noexcept { return spec_; }

private:
    BiasedSourceSpec spec_;
    double prob_one_;
    std::mt19937_64 engine_;
};

[[nodiscard]] BitStream generate(const BiasedSourceSpec& spec, std::size_t nbits);

}  // namespace linex
