#include "linex/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace linex {

std::string to_string(HVariant v) {
    return v == HVariant::standard ? "standard" : "as-printed";
}

HVariant parse_h_variant(std::string_view text) {
    if (text == "standard") return HVariant::standard;
    if (text == "as-printed") return HVariant::as_printed;
    throw ParameterError("unknown h variant \"" + std::string(text) + "\" (expected standard or as-printed)");
}

namespace {

double pow_int(double base, std::size_t exp) {
    return std::pow(base, static_cast<double>(exp));
}

ClampedBound clamp_unit(double raw) {
    return {raw, std::clamp(raw, 0.0, 1.0)};
}

}  // namespace

double bias_bound(Bias eps, std::size_t d) {
    return pow_int(eps.value(), d);
}

double pointwise_bound(Bias eps, std::size_t d, std::size_t k) {
    return std::ldexp(1.0, -static_cast<int>(k)) + pow_int(eps.value(), d);
}

double tvd_weight_bound(const WeightDistribution& w, Bias eps) {
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t l = w.length(); l >= 1; --l) {
        const auto& a = w[l];
        if (a == 0) continue;
        const double term = a.convert_to<double>() * pow_int(eps.value(), l);
        const double t = sum + term;
        if (std::abs(sum) >= std::abs(term)) {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

double tvd_worst_bound(std::size_t k, std::size_t d, Bias eps) {
    return std::ldexp(pow_int(eps.value(), d), static_cast<int>(k));
}

ClampedBound hmin_bound(std::size_t k, std::size_t d, Bias eps) {
    const double excess = std::ldexp(pow_int(eps.value(), d), static_cast<int>(k));
    const double raw = 1.0 - std::log1p(excess) / (std::numbers::ln2 * static_cast<double>(k));
    return clamp_unit(raw);
}

double max_delta(std::size_t k) {
    return 2.0 * (1.0 - std::ldexp(1.0, -static_cast<int>(k)));
}

ClampedBound entropy_lower_bound(double delta, std::size_t k, HVariant variant) {
    if (!(delta >= 0.0)) throw ParameterError("delta must be nonnegative, got " + std::to_string(delta));
    if (k == 0) throw ParameterError("entropy bound requires k >= 1");

    const double kd = static_cast<double>(k);
    const double ln_m = std::numbers::ln2 * kd;
    const double d = std::min(delta, max_delta(k));
    const double x = 0.5 * d;

    // log_M(M - 1) = 1 + log1p(-2^-k) / ln M
    const double log_m_m1 = 1.0 + std::log1p(-std::ldexp(1.0, -static_cast<int>(k))) / ln_m;
    // t log_M(u), with the 0 log 0 = 0 convention carried by t == 0
    auto t_log = [&](double t, double u) { return t == 0.0 ? 0.0 : t * std::log(u) / ln_m; };

    const double tail = -t_log(1.0 - x, 1.0 - x);
    const double h = variant == HVariant::standard ? -t_log(x, x) + tail : -t_log(x, d) + tail;
    return clamp_unit(1.0 - x * log_m_m1 - h);
}

}  // namespace linex
