#include "cubelsi/entropy.hpp"

#include <algorithm>

namespace cubelsi {

namespace {

constexpr double kE = std::numbers::e;
// Relative slack for comparisons against a bisected Orlicz norm.
constexpr double kCheckSlack = 1e-9;

std::vector<double> scalar_values(const CubeFunction& h) {
    if (!h.is_scalar()) throw ArgumentError("entropy needs a scalar function");
    std::vector<double> v(h.size());
    for (std::uint32_t u = 0; u < h.size(); ++u) v[u] = h[u];
    return v;
}

double mass(std::span<const double> h, std::span<const double> weights) {
    if (!weights.empty() && weights.size() != h.size())
        throw ArgumentError("weights and values differ in length");
    std::vector<double> terms(h.begin(), h.end());
    if (weights.empty()) return pairwise_mean(terms);
    for (std::size_t k = 0; k < terms.size(); ++k) terms[k] *= weights[k];
    return pairwise_sum(terms);
}

/// E h phi(h / E h) with the convention that h = 0 contributes 0.
template <typename Phi>
double relative_functional(std::span<const double> h, std::span<const double> weights, Phi&& phi) {
    for (double v : h)
        if (v < 0.0 || !std::isfinite(v)) throw ArgumentError("entropy needs finite nonnegative values");
    const double m = mass(h, weights);
    if (m == 0.0) return 0.0;
    std::vector<double> terms(h.size());
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (h[k] == 0.0) {
            terms[k] = 0.0;
            continue;
        }
        const double w = weights.empty() ? 1.0 : weights[k];
        terms[k] = w * h[k] * phi(h[k] / m);
    }
    return weights.empty() ? pairwise_mean(terms) : pairwise_sum(terms);
}

}  // namespace

double signed_log_alpha(double x, double alpha) {
    if (!(x > 0.0)) throw ArgumentError("signed_log_alpha needs x > 0");
    const double l = std::log(x);
    if (l == 0.0) return 0.0;
    return l > 0.0 ? std::pow(l, alpha) : -std::pow(-l, alpha);
}

double ent(std::span<const double> h, std::span<const double> weights) {
    // E h log(h / E h) equals the textbook form and is exactly 0 for constants.
    const double v = relative_functional(h, weights, [](double r) { return std::log(r); });
    return std::max(v, 0.0);
}

double ent(const CubeFunction& h) { return ent(scalar_values(h)); }

double ent_alpha(std::span<const double> h, double alpha, std::span<const double> weights) {
    if (!(alpha > 0.0)) throw ArgumentError("ent_alpha needs alpha > 0");
    return relative_functional(h, weights, [alpha](double r) { return signed_log_alpha(r, alpha); });
}

double ent_alpha(const CubeFunction& h, double alpha) { return ent_alpha(scalar_values(h), alpha); }

EntropyBoundsConstants entropy_bounds_constants(double p, double alpha) {
    if (!(alpha > 0.0)) throw ArgumentError("entropy bounds need alpha > 0");
    if (!(p >= 1.0)) throw ArgumentError("entropy bounds need p >= 1");
    const double ae = std::pow(alpha / kE, alpha);
    const double c = std::pow(2.0, std::max(alpha - 1.0, 0.0)) * (1.0 + ae) + ae;
    const double beta = std::pow(2.0, 1.0 / alpha);
    const double B = (beta + kE - 1.0) / (beta - 1.0);
    const double K = std::max(std::pow(std::log(kE + 1.0), alpha) + 2.0 * ae,
                              B * std::pow(std::log(kE + B), alpha));
    return {p, alpha, c, K, K + 2.0, B};
}

OrliczEntropyCheck check_orlicz_entropy_bounds(std::span<const double> magnitudes, double p,
                                               double alpha, double lower_const, double upper_const,
                                               std::span<const double> weights) {
    OrliczEntropyCheck out;
    std::vector<double> powered(magnitudes.size());
    for (std::size_t k = 0; k < magnitudes.size(); ++k) powered[k] = std::pow(magnitudes[k], p);
    out.lp_power = mass(powered, weights);
    out.entropy = ent_alpha(powered, alpha, weights);
    const double mx = std::max(out.lp_power, out.entropy);
    out.lower = lower_const * mx;
    out.upper = upper_const * mx;
    out.middle = std::pow(orlicz_norm(magnitudes, OrliczGauge(p, alpha), weights), p);
    out.holds = out.lower <= out.middle * (1.0 + kCheckSlack) &&
                out.middle <= out.upper * (1.0 + kCheckSlack);
    return out;
}

OrliczEntropyCheck check_orlicz_entropy_equivalence(const CubeFunction& f, double p, double alpha,
                                                    const TargetNorm& tn) {
    const auto k = entropy_bounds_constants(p, alpha);
    return check_orlicz_entropy_bounds(magnitudes(f, tn), p, alpha, 1.0 / k.c_alpha, k.C_alpha);
}

OrliczEntropyCheck check_l2logl_entropy_equivalence(const CubeFunction& f, const TargetNorm& tn) {
    return check_orlicz_entropy_bounds(magnitudes(f, tn), 2.0, 1.0, 0.5, 14.0);
}

double elementary_inequality_slack(double y, double alpha) {
    if (!(y > 0.0)) throw ArgumentError("elementary inequality needs y > 0");
    const auto k = entropy_bounds_constants(1.0, alpha);
    return k.K_alpha + 2.0 * y * signed_log_alpha(y, alpha) - y * std::pow(std::log(kE + y), alpha);
}

}  // namespace cubelsi
