#include "linex/sweep.hpp"

#include <cstdio>

namespace linex {

BoundRow evaluate_bounds(const WeightDistribution& w, Bias eps, HVariant variant) {
    const auto k = w.dimension();
    const auto d = w.min_distance();
    BoundRow row{eps, 0, 0, 0, 0, {}, {}, {}, variant};
    row.bias_bound = bias_bound(eps, d);
    row.pointwise_bound = pointwise_bound(eps, d, k);
    row.tvd_weight = tvd_weight_bound(w, eps);
    row.tvd_worst = tvd_worst_bound(k, d, eps);
    row.hmin = hmin_bound(k, d, eps);
    row.entropy_weight = entropy_lower_bound(row.tvd_weight, k, variant);
    row.entropy_worst = entropy_lower_bound(row.tvd_worst, k, variant);
    return row;
}

std::vector<BoundRow> sweep(const WeightDistribution& w, std::span<const Bias> grid, HVariant variant) {
    if (grid.empty()) throw ParameterError("sweep grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] < grid[i])) throw ParameterError("sweep grid must be strictly increasing");
    }
    std::vector<BoundRow> rows;
    rows.reserve(grid.size());
    for (const auto eps : grid) rows.push_back(evaluate_bounds(w, eps, variant));
    return rows;
}

std::vector<Bias> linear_grid(double lo, double hi, std::size_t steps) {
    if (!(lo >= 0.0 && hi <= 1.0 && lo < hi)) {
        throw ParameterError("grid bounds must satisfy 0 <= min < max <= 1");
    }
    if (steps < 2) throw ParameterError("grid needs at least 2 steps");
    std::vector<Bias> grid;
    grid.reserve(steps);
    const double span = hi - lo;
    const auto last = static_cast<double>(steps - 1);
    for (std::size_t i = 0; i + 1 < steps; ++i) grid.emplace_back(lo + span * static_cast<double>(i) / last);
    grid.emplace_back(hi);
    return grid;
}

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void write_sweep_csv(std::ostream& out, std::span<const BoundRow> rows, std::span<const std::string> comments) {
    for (const auto& c : comments) out << "# " << c << '\n';
    out << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        out << format_real(r.eps.value()) << ',' << format_real(r.bias_bound) << ','
            << format_real(r.pointwise_bound) << ',' << format_real(r.tvd_weight) << ','
            << format_real(r.tvd_worst) << ',' << format_real(r.hmin.clamped) << ','
            << format_real(r.entropy_weight.raw) << ',' << format_real(r.entropy_weight.clamped) << ','
            << format_real(r.entropy_worst.raw) << ',' << format_real(r.entropy_worst.clamped) << ','
            << to_string(r.variant) << '\n';
    }
}

void write_sweep_svg(std::ostream& out, std::span<const BoundRow> rows, const std::string& title) {
    constexpr double width = 640;
    constexpr double height = 420;
    constexpr double left = 60;
    constexpr double right = 20;
    constexpr double top = 40;
    constexpr double bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    const double x_lo = rows.empty() ? 0.0 : rows.front().eps.value();
    const double x_hi = rows.empty() ? 1.0 : rows.back().eps.value();
    const double x_span = x_hi > x_lo ? x_hi - x_lo : 1.0;
    auto px = [&](double eps) { return left + plot_w * (eps - x_lo) / x_span; };
    auto py = [&](double v) { return top + plot_h * (1.0 - v); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
        << top + plot_h << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
        << "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        const double v = t / 4.0;
        out << "<text x=\"" << left - 8 << "\" y=\"" << py(v) + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
            << format_real(v) << "</text>\n";
        const double e = x_lo + x_span * v;
        out << "<text x=\"" << px(e) << "\" y=\"" << top + plot_h + 16
            << "\" text-anchor=\"middle\" font-size=\"11\">" << format_real(e) << "</text>\n";
    }
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10
        << "\" text-anchor=\"middle\" font-size=\"12\">eps</text>\n";

    struct Curve {
        const char* name;
        const char* color;
        double (*value)(const BoundRow&);
    };
    const Curve curves[] = {
        {"hmin_bound", "#d62728", [](const BoundRow& r) { return r.hmin.clamped; }},
        {"entropy_worst", "#1f77b4", [](const BoundRow& r) { return r.entropy_worst.clamped; }},
        {"entropy_weight", "#2ca02c", [](const BoundRow& r) { return r.entropy_weight.clamped; }},
    };
    int legend = 0;
    for (const auto& c : curves) {
        out << "<polyline fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& r : rows) out << format_real(px(r.eps.value())) << ',' << format_real(py(c.value(r))) << ' ';
        out << "\"/>\n";
        const double ly = top + plot_h - 60 + 16 * legend++;
        out << "<line x1=\"" << left + 12 << "\" y1=\"" << ly << "\" x2=\"" << left + 36 << "\" y2=\"" << ly
            << "\" stroke=\"" << c.color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << left + 42 << "\" y=\"" << ly + 4 << "\" font-size=\"11\">" << c.name << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace linex
