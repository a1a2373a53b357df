#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace linex {

/// Exact codeword count; A_l can exceed 64 bits for k > 64.
using BigCount = boost::multiprecision::cpp_int;

/// Number of codewords A_0..A_n per Hamming weight of an [n, k] binary code.
///
/// Construction validates A_0 == 1, A_l >= 0 and sum A_l == 2^k, so every
/// instance in circulation is a plausible weight distribution.
class WeightDistribution {
public:
    WeightDistribution(std::size_t n, std::size_t k, std::vector<BigCount> counts);

    [[nodiscard]] std::size_t length() const noexcept { return n_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return k_; }
    [[nodiscard]] const std::vector<BigCount>& counts() const noexcept { return counts_; }
    [[nodiscard]] const BigCount& operator[](std::size_t weight) const { return counts_.at(weight); }

    /// Smallest nonzero weight. Throws ParameterError for the trivial code (k == 0).
    [[nodiscard]] std::size_t min_distance() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<BigCount> counts_;
};

[[nodiscard]] inline std::size_t min_distance(const WeightDistribution& w) { return w.min_distance(); }

// File format: header "n k", then one "l A_l" line per nonzero count, in
// increasing l, counts in decimal. Lines starting with '#' are comments.
[[nodiscard]] WeightDistribution parse_weights(std::string_view text);
[[nodiscard]] std::string serialize_weights(const WeightDistribution& w);
[[nodiscard]] WeightDistribution read_weights_file(const std::filesystem::path& path);
void write_weights_file(const std::filesystem::path& path, const WeightDistribution& w);

}  // namespace linex
