#include "linex/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "linex/errors.hpp"

namespace linex {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

bool parse_count(std::string_view token, std::size_t& out) {
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && !token.empty();
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

BitMatrix parse_matrix(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header \"k n\"");

    const auto header = tokenize(lines[0]);
    std::size_t k = 0;
    std::size_t n = 0;
    if (header.size() != 2 || !parse_count(header[0], k) || !parse_count(header[1], n)) {
        throw ParseError(1, "malformed header, expected \"k n\"");
    }
    if (k == 0 || n == 0 || k > n) {
        throw ParseError(1, "header requires 1 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    }

    std::size_t last = lines.size();
    while (last > 1 && tokenize(lines[last - 1]).empty()) --last;
    if (last - 1 != k) {
        throw ParseError(last, "expected " + std::to_string(k) + " rows, got " + std::to_string(last - 1));
    }

    BitMatrix g(k, n);
    for (std::size_t i = 0; i < k; ++i) {
        auto line = lines[i + 1];
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
        if (line.size() != n) {
            throw ParseError(i + 2, "row " + std::to_string(i + 1) + ": expected " + std::to_string(n) +
                                        " columns, got " + std::to_string(line.size()));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (line[j] == '1') {
                g.set(i, j, true);
            } else if (line[j] != '0') {
                throw ParseError(i + 2, "row " + std::to_string(i + 1) + ": illegal character '" +
                                            std::string(1, line[j]) + "' at column " + std::to_string(j + 1));
            }
        }
    }
    return g;
}

std::string serialize_matrix(const BitMatrix& g) {
    std::string out = std::to_string(g.rows()) + " " + std::to_string(g.cols()) + "\n";
    out.reserve(out.size() + g.rows() * (g.cols() + 1));
    for (std::size_t i = 0; i < g.rows(); ++i) {
        for (std::size_t j = 0; j < g.cols(); ++j) out.push_back(g.get(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

BitMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open matrix file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
}

void write_matrix_file(const std::filesystem::path& path, const BitMatrix& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write matrix file " + path.string());
    out << serialize_matrix(g);
}

}  // namespace linex
