#include "cubelsi/gradients.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace cubelsi {

namespace {

using RowVector = Eigen::Matrix<double, 1, Eigen::Dynamic>;

/// Row (x * n + (i - 1)) holds d_i f(x).
CubeTable<double> derivative_table(const CubeFunction& f) {
    const int n = f.dimension();
    const int d = f.target_dim();
    CubeTable<double> D(static_cast<Eigen::Index>(f.size()) * n, d);
    const auto& v = f.values();
    for (std::uint32_t u = 0; u < f.size(); ++u)
        for (int i = 1; i <= n; ++i)
            D.row(static_cast<Eigen::Index>(u) * n + (i - 1)) =
                (v.row(u) - v.row(flip_index(u, i))) / 2.0;
    return D;
}

double norm_power(const RowVector& v, double p, const TargetNorm& tn) {
    if (p == 2.0 && tn.is_euclidean()) return v.squaredNorm();
    const double r = tn(v);
    if (p == 1.0) return r;
    if (p == 2.0) return r * r;
    return std::pow(r, p);
}

void require_exact(int n) {
    if (n > kMaxExactDimension)
        throw CapabilityError("exact delta enumeration needs n <= " +
                              std::to_string(kMaxExactDimension) + " (got n=" + std::to_string(n) + ")");
}

constexpr std::uint64_t kRefreshPeriod = 1024;

/// E_delta ||sum_i delta_i D_i||^p over uniform signs, for one point.
/// The sign of delta_n is fixed to +1 since v and -v have the same norm.
double uniform_delta_average(const CubeTable<double>& D, Eigen::Index first_row, int n, double p,
                             const TargetNorm& tn) {
    const int free_bits = n - 1;
    const std::uint64_t count = std::uint64_t{1} << free_bits;
    std::vector<double> terms(count);
    std::vector<int> sign(static_cast<std::size_t>(n), 1);
    auto block = D.middleRows(first_row, n);
    RowVector v = block.colwise().sum();
    terms[0] = norm_power(v, p, tn);
    for (std::uint64_t k = 1; k < count; ++k) {
        const int j = std::countr_zero(k);
        v -= 2.0 * sign[static_cast<std::size_t>(j)] * block.row(j);
        sign[static_cast<std::size_t>(j)] = -sign[static_cast<std::size_t>(j)];
        if (k % kRefreshPeriod == 0) {
            v.setZero();
            for (int i = 0; i < n; ++i) v += sign[static_cast<std::size_t>(i)] * block.row(i);
        }
        terms[k] = norm_power(v, p, tn);
    }
    return pairwise_mean(terms);
}

/// E ||sum_i delta_i(t) D_i||^p weighting all outcomes of xi(t).
double biased_delta_average(const CubeTable<double>& D, Eigen::Index first_row, int n, double p,
                            const TargetNorm& tn, const BiasedDeltaLaw& law,
                            std::span<const double> weight_by_minus_count) {
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<double> terms(count);
    auto block = D.middleRows(first_row, n);
    const double jump = law.minus_value - law.plus_value;
    RowVector v = law.plus_value * block.colwise().sum();
    std::uint64_t minus = 0;
    terms[0] = weight_by_minus_count[0] * norm_power(v, p, tn);
    for (std::uint64_t k = 1; k < count; ++k) {
        const int j = std::countr_zero(k);
        minus ^= std::uint64_t{1} << j;
        v += ((minus >> j) & 1u ? jump : -jump) * block.row(j);
        if (k % kRefreshPeriod == 0) {
            v.setZero();
            for (int i = 0; i < n; ++i)
                v += ((minus >> i) & 1u ? law.minus_value : law.plus_value) * block.row(i);
        }
        terms[k] = weight_by_minus_count[static_cast<std::size_t>(std::popcount(minus))] *
                   norm_power(v, p, tn);
    }
    return pairwise_sum(terms);
}

GradientEstimate finish(double mean_power, double p) {
    return {std::pow(mean_power, 1.0 / p), 0.0, true};
}

/// Monte Carlo over sign draws; draw k uses substream k of the seed.
template <typename DrawSigns>
GradientEstimate monte_carlo(const CubeFunction& f, const CubeTable<double>& D, double p,
                             const TargetNorm& tn, const GradientTermConfig& cfg, DrawSigns&& draw) {
    if (cfg.samples < 2) throw ArgumentError("Monte Carlo needs at least 2 samples");
    const int n = f.dimension();
    const Rng base(cfg.seed);
    std::vector<double> per_sample(cfg.samples);
    parallel_for(cfg.samples, [&](std::size_t k) {
        Rng rng = base.substream(k);
        const std::vector<double> delta = draw(rng);
        std::vector<double> terms(f.size());
        RowVector v(f.target_dim());
        for (std::uint32_t u = 0; u < f.size(); ++u) {
            v.setZero();
            for (int i = 0; i < n; ++i)
                v += delta[static_cast<std::size_t>(i)] * D.row(static_cast<Eigen::Index>(u) * n + i);
            terms[u] = norm_power(v, p, tn);
        }
        per_sample[k] = pairwise_mean(terms);
    });
    const double mean = pairwise_mean(per_sample);
    std::vector<double> dev(per_sample.size());
    for (std::size_t k = 0; k < dev.size(); ++k) dev[k] = (per_sample[k] - mean) * (per_sample[k] - mean);
    const double var = pairwise_sum(dev) / static_cast<double>(dev.size() - 1);
    const double se_mean = std::sqrt(var / static_cast<double>(dev.size()));
    GradientEstimate out;
    out.exact = false;
    out.value = std::pow(mean, 1.0 / p);
    out.std_error = mean > 0.0 ? se_mean * std::pow(mean, 1.0 / p - 1.0) / p : 0.0;
    return out;
}

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 4> kGlNodes = {0.1834346424956498, 0.5255324099163290,
                                            0.7966664774136267, 0.9602898564975363};
constexpr std::array<double, 4> kGlWeights = {0.3626837833783620, 0.3137066458778873,
                                              0.2223810344533745, 0.1012285362903763};

template <typename Emit>
void gauss_legendre_panels(double a, double b, int panels, Emit&& emit) {
    const double h = (b - a) / panels;
    for (int k = 0; k < panels; ++k) {
        const double mid = a + (k + 0.5) * h;
        for (std::size_t j = 0; j < kGlNodes.size(); ++j) {
            emit(mid - 0.5 * h * kGlNodes[j], 0.5 * h * kGlWeights[j]);
            emit(mid + 0.5 * h * kGlNodes[j], 0.5 * h * kGlWeights[j]);
        }
    }
}

void require_scalar(const CubeFunction& h, const char* what) {
    if (!h.is_scalar()) throw ArgumentError(std::string(what) + " needs a scalar function (d = 1)");
}

}  // namespace

double gradient_lp(const CubeFunction& h, double p) {
    require_scalar(h, "gradient_lp");
    if (!(p >= 1.0)) throw ArgumentError("gradient_lp needs p >= 1");
    const int n = h.dimension();
    std::vector<double> terms(h.size());
    for (std::uint32_t u = 0; u < h.size(); ++u) {
        double sq = 0.0;
        for (int i = 1; i <= n; ++i) {
            const double g = (h[u] - h[flip_index(u, i)]) / 2.0;
            sq += g * g;
        }
        terms[u] = p == 2.0 ? sq : std::pow(sq, p / 2.0);
    }
    return std::pow(pairwise_mean(terms), 1.0 / p);
}

GradientEstimate rademacher_gradient(const CubeFunction& f, double p, const TargetNorm& tn,
                                     const GradientTermConfig& cfg) {
    if (!(p >= 1.0)) throw ArgumentError("rademacher_gradient needs p >= 1");
    const int n = f.dimension();
    const CubeTable<double> D = derivative_table(f);
    if (cfg.mode == GradientMode::MonteCarlo) {
        return monte_carlo(f, D, p, tn, cfg, [n](Rng& rng) {
            std::vector<double> delta(static_cast<std::size_t>(n));
            for (auto& s : delta) s = rng.coin() ? -1.0 : 1.0;
            return delta;
        });
    }
    require_exact(n);
    std::vector<double> per_point(f.size());
    parallel_for(f.size(), [&](std::size_t u) {
        per_point[u] = uniform_delta_average(D, static_cast<Eigen::Index>(u) * n, n, p, tn);
    });
    return finish(pairwise_mean(per_point), p);
}

GradientEstimate rademacher_gradient_biased(const CubeFunction& f, double p, const TargetNorm& tn,
                                            double t, const GradientTermConfig& cfg) {
    const BiasedDeltaLaw law = biased_delta_law(t);
    if (!(p >= 1.0)) throw ArgumentError("rademacher_gradient_biased needs p >= 1");
    const int n = f.dimension();
    const CubeTable<double> D = derivative_table(f);
    if (cfg.mode == GradientMode::MonteCarlo) {
        return monte_carlo(f, D, p, tn, cfg, [n, law](Rng& rng) {
            std::vector<double> delta(static_cast<std::size_t>(n));
            for (auto& s : delta) s = rng.uniform() < law.plus_prob ? law.plus_value : law.minus_value;
            return delta;
        });
    }
    require_exact(n);
    std::vector<double> weight(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        weight[static_cast<std::size_t>(k)] =
            std::pow(law.plus_prob, n - k) * std::pow(1.0 - law.plus_prob, k);
    std::vector<double> per_point(f.size());
    parallel_for(f.size(), [&](std::size_t u) {
        per_point[u] = biased_delta_average(D, static_cast<Eigen::Index>(u) * n, n, p, tn, law, weight);
    });
    return finish(pairwise_mean(per_point), p);
}

IntegralEstimate semigroup_gradient_integral(const CubeFunction& f, const TargetNorm& tn,
                                             const QuadratureConfig& cfg) {
    if (cfg.near_panels < 1 || cfg.far_panels < 1 || !(cfg.tail_cutoff > 1.0))
        throw ArgumentError("quadrature needs positive panel counts and a cutoff above 1");
    struct Node {
        double t;
        double w;
    };
    std::vector<Node> nodes;
    gauss_legendre_panels(0.0, 1.0, cfg.near_panels, [&](double u, double w) {
        const double t = u * u;
        nodes.push_back({t, w * 2.0 * u / std::sqrt(std::expm1(2.0 * t))});
    });
    gauss_legendre_panels(1.0, cfg.tail_cutoff, cfg.far_panels, [&](double t, double w) {
        nodes.push_back({t, w / std::sqrt(std::expm1(2.0 * t))});
    });
    IntegralEstimate out;
    out.nodes = static_cast<int>(nodes.size());
    for (const Node& node : nodes) {
        const GradientEstimate g = rademacher_gradient_biased(f, 1.0, tn, node.t, cfg.gradient);
        out.value += node.w * g.value;
        out.std_error += node.w * g.std_error;
    }
    const double T = cfg.tail_cutoff;
    out.tail_bound = sum_partial_lp_power(f, 1.0, tn) * std::exp(-T) / std::sqrt(-std::expm1(-2.0 * T));
    return out;
}

CubeFunction asymmetric_gradient(const CubeFunction& h) {
    require_scalar(h, "asymmetric_gradient");
    CubeFunction out(h.dimension(), 1);
    for (std::uint32_t u = 0; u < h.size(); ++u) {
        double sq = 0.0;
        for (int i = 1; i <= h.dimension(); ++i) {
            const double g = (h[u] - h[flip_index(u, i)]) / 2.0;
            if (g > 0.0) sq += g * g;
        }
        out[u] = std::sqrt(sq);
    }
    return out;
}

CubeFunction positive_part(const CubeFunction& h) {
    require_scalar(h, "positive_part");
    CubeTable<double> v = h.values().cwiseMax(0.0);
    return {h.dimension(), std::move(v)};
}

double lower_median(const CubeFunction& h) {
    require_scalar(h, "lower_median");
    std::vector<double> v(h.values().data(), h.values().data() + h.size());
    const std::size_t k = v.size() / 2 - 1;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
    return v[k];
}

double m_control_rhs(const CubeFunction& f, CubePoint x, const TargetNorm& tn) {
    require_exact(f.dimension());
    if (x.n != f.dimension() || x.index >= f.size()) throw ArgumentError("point outside the cube");
    const int n = f.dimension();
    CubeTable<double> D(n, f.target_dim());
    for (int i = 1; i <= n; ++i)
        D.row(i - 1) = (f.row(x.index) - f.row(flip_index(x.index, i))) / 2.0;
    return std::sqrt(uniform_delta_average(D, 0, n, 2.0, tn));
}

std::vector<double> m_control_rhs_all(const CubeFunction& f, const TargetNorm& tn) {
    require_exact(f.dimension());
    const int n = f.dimension();
    const CubeTable<double> D = derivative_table(f);
    std::vector<double> out(f.size());
    parallel_for(f.size(), [&](std::size_t u) {
        out[u] = std::sqrt(uniform_delta_average(D, static_cast<Eigen::Index>(u) * n, n, 2.0, tn));
    });
    return out;
}

double sum_partial_lp_power(const CubeFunction& f, double p, const TargetNorm& tn) {
    if (!(p >= 1.0)) throw ArgumentError("sum_partial_lp_power needs p >= 1");
    std::vector<double> per_direction(static_cast<std::size_t>(f.dimension()));
    std::vector<double> terms(f.size());
    for (int i = 1; i <= f.dimension(); ++i) {
        for (std::uint32_t u = 0; u < f.size(); ++u) {
            const double r = tn((f.row(u) - f.row(flip_index(u, i))) / 2.0);
            terms[u] = p == 1.0 ? r : std::pow(r, p);
        }
        per_direction[static_cast<std::size_t>(i - 1)] = pairwise_mean(terms);
    }
    return pairwise_sum(per_direction);
}

}  // namespace cubelsi
