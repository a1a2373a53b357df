#include "linex/weight_distribution.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "linex/errors.hpp"

namespace linex {

WeightDistribution::WeightDistribution(std::size_t n, std::size_t k, std::vector<BigCount> counts)
    : n_(n), k_(k), counts_(std::move(counts)) {
    if (k_ > n_) throw ParameterError("weight distribution: k=" + std::to_string(k_) + " exceeds n=" + std::to_string(n_));
    if (counts_.size() != n_ + 1) throw DimensionError("weight distribution entries", n_ + 1, counts_.size());
    if (counts_[0] != 1) throw ParameterError("weight distribution: A_0 must be 1, got " + counts_[0].str());
    BigCount total = 0;
    for (std::size_t l = 0; l <= n_; ++l) {
        if (counts_[l] < 0) throw ParameterError("weight distribution: negative A_" + std::to_string(l));
        total += counts_[l];
    }
    if (total != (BigCount{1} << k_)) {
        throw ParameterError("weight distribution: counts sum to " + total.str() + ", expected 2^" + std::to_string(k_));
    }
}

std::size_t WeightDistribution::min_distance() const {
    for (std::size_t l = 1; l <= n_; ++l) {
        if (counts_[l] != 0) return l;
    }
    throw ParameterError("minimum distance undefined for the zero-dimensional code");
}

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

bool to_size(std::string_view s, std::size_t& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return !s.empty() && ec == std::errc{} && ptr == s.data() + s.size();
}

bool is_decimal(std::string_view s) {
    if (s.empty()) return false;
    for (const char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

WeightDistribution parse_weights(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    bool have_header = false;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<BigCount> counts;
    std::size_t prev = 0;
    bool have_entry = false;

    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        const auto toks = tokens_of(line);
        if (toks.empty() || toks[0].front() == '#') continue;
        if (toks.size() != 2) throw ParseError(line_no, "expected two fields");

        if (!have_header) {
            if (!to_size(toks[0], n) || !to_size(toks[1], k)) throw ParseError(line_no, "malformed header, expected \"n k\"");
            if (k > n) throw ParseError(line_no, "k exceeds n in header");
            counts.assign(n + 1, 0);
            have_header = true;
            continue;
        }

        std::size_t l = 0;
        if (!to_size(toks[0], l)) throw ParseError(line_no, "malformed weight \"" + std::string(toks[0]) + "\"");
        if (l > n) throw ParseError(line_no, "weight " + std::to_string(l) + " exceeds n=" + std::to_string(n));
        if (have_entry && l <= prev) throw ParseError(line_no, "weights must be strictly increasing");
        if (!is_decimal(toks[1])) throw ParseError(line_no, "malformed count \"" + std::string(toks[1]) + "\"");
        counts[l] = BigCount(std::string(toks[1]));
        prev = l;
        have_entry = true;
    }
    if (!have_header) throw ParseError(line_no == 0 ? 1 : line_no, "missing header \"n k\"");

    try {
        return WeightDistribution(n, k, std::move(counts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

std::string serialize_weights(const WeightDistribution& w) {
    std::string out = std::to_string(w.length()) + " " + std::to_string(w.dimension()) + "\n";
    for (std::size_t l = 0; l <= w.length(); ++l) {
        if (w[l] != 0) out += std::to_string(l) + " " + w[l].str() + "\n";
    }
    return out;
}

WeightDistribution read_weights_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open weights file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_weights(ss.str());
}

void write_weights_file(const std::filesystem::path& path, const WeightDistribution& w) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write weights file " + path.string());
    out << serialize_weights(w);
}

}  // namespace linex
