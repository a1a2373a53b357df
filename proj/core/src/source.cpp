#include "linex/source.hpp"

namespace linex {

BiasedSource::BiasedSource(const BiasedSourceSpec& spec)
    : spec_(spec), prob_one_(spec.eps.prob_one()), engine_(spec.seed) {}

bool BiasedSource::next_bit() {
    const double u = static_cast<double>(engine_() >> 11) * 0x1p-53;
    return u < prob_one_;
}

void BiasedSource::fill(BitStream& out, std::size_t nbits) {
    out.reserve_bits(out.size() + nbits);
    while (nbits >= 64) {
        std::uint64_t word = 0;
        for (int b = 0; b < 64; ++b) word = (word << 1) | static_cast<std::uint64_t>(next_bit());
        out.append_bits(word, 64);
        nbits -= 64;
    }
    for (; nbits > 0; --nbits) out.push_back(next_bit());
}

BitStream generate(const BiasedSourceSpec& spec, std::size_t nbits) {
    BiasedSource source(spec);
    BitStream out;
    source.fill(out, nbits);
    return out;
}

}  // namespace linex
