#include "cubelsi/norms.hpp"

#include <algorithm>

namespace cubelsi {

namespace {

void check_weights(std::span<const double> values, std::span<const double> weights) {
    if (!weights.empty() && weights.size() != values.size())
        throw ArgumentError("weights and values differ in length");
}

/// E_mu term(v_k) with pairwise summation.
template <typename Term>
double weighted_mean(std::span<const double> values, std::span<const double> weights, Term&& term) {
    std::vector<double> terms(values.size());
    if (weights.empty()) {
        for (std::size_t k = 0; k < values.size(); ++k) terms[k] = term(values[k]);
        return pairwise_mean(terms);
    }
    for (std::size_t k = 0; k < values.size(); ++k)
        terms[k] = weights[k] == 0.0 ? 0.0 : weights[k] * term(values[k]);
    return pairwise_sum(terms);
}

}  // namespace

std::vector<double> magnitudes(const CubeFunction& f, const TargetNorm& tn) {
    std::vector<double> out(f.size());
    for (std::uint32_t u = 0; u < f.size(); ++u) out[u] = tn(f.row(u));
    return out;
}

CubeFunction pointwise_norm(const CubeFunction& f, const TargetNorm& tn) {
    CubeFunction out(f.dimension(), 1);
    for (std::uint32_t u = 0; u < f.size(); ++u) out[u] = tn(f.row(u));
    return out;
}

double lp_norm(std::span<const double> values, double p, std::span<const double> weights) {
    if (!(p >= 1.0)) throw ArgumentError("lp_norm needs p >= 1");
    check_weights(values, weights);
    const double m = weighted_mean(values, weights, [p](double v) { return std::pow(std::abs(v), p); });
    return std::pow(m, 1.0 / p);
}

double lp_norm(const CubeFunction& f, double p, const TargetNorm& tn) {
    return lp_norm(magnitudes(f, tn), p);
}

double orlicz_norm(std::span<const double> values, const OrliczGauge& g,
                   std::span<const double> weights, double tol) {
    if (!(tol > 0.0)) throw ArgumentError("orlicz_norm needs tol > 0");
    check_weights(values, weights);
    const bool all_zero = std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
    if (all_zero) return 0.0;
    if (g.alpha() == 0.0) return lp_norm(values, g.p(), weights);

    auto modular = [&](double gamma) {
        return weighted_mean(values, weights, [&](double v) { return g(std::abs(v) / gamma); });
    };

    constexpr int kMaxIterations = 200;
    int iterations = 0;
    const double start = lp_norm(values, g.p(), weights);
    double lo = start;
    double hi = start;
    // psi >= t^p for alpha >= 0, so the L_p norm is a lower end; for alpha < 0 it is an upper end.
    if (modular(start) > 1.0) {
        do {
            lo = hi;
            hi *= 2.0;
            if (++iterations > kMaxIterations)
                throw NumericalError("orlicz_norm: no upper bracket", lo, hi);
        } while (modular(hi) > 1.0);
    } else {
        do {
            hi = lo;
            lo *= 0.5;
            if (++iterations > kMaxIterations)
                throw NumericalError("orlicz_norm: no lower bracket", lo, hi);
        } while (modular(lo) <= 1.0);
    }
    while (hi - lo > tol * hi) {
        if (++iterations > kMaxIterations)
            throw NumericalError("orlicz_norm: bisection did not converge", lo, hi);
        const double mid = 0.5 * (lo + hi);
        if (modular(mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

double orlicz_norm(const CubeFunction& f, const OrliczGauge& g, const TargetNorm& tn, double tol) {
    return orlicz_norm(magnitudes(f, tn), g, {}, tol);
}

double orlicz_norm_of_one(const OrliczGauge& g) {
    const double one = 1.0;
    return orlicz_norm(std::span<const double>(&one, 1), g);
}

Vector<double> expectation(const CubeFunction& f) {
    Vector<double> out(f.target_dim());
    std::vector<double> column(f.size());
    for (int k = 0; k < f.target_dim(); ++k) {
        for (std::uint32_t u = 0; u < f.size(); ++u) column[u] = f.values()(u, k);
        out(k) = pairwise_mean(column);
    }
    return out;
}

CubeFunction centered(const CubeFunction& f) {
    const Vector<double> mean = expectation(f);
    CubeTable<double> v = f.values();
    v.rowwise() -= mean.transpose();
    return {f.dimension(), std::move(v)};
}

}  // namespace cubelsi
