#ifndef CUBELSI_GRADIENTS_HPP
#define CUBELSI_GRADIENTS_HPP

#include <cstdint>

#include "cubelsi/norms.hpp"

namespace cubelsi {

enum class GradientMode { Exact, MonteCarlo };

/// How the average over sign vectors delta is computed. Exact enumeration
/// is limited to n <= kMaxExactDimension.
struct GradientTermConfig {
    GradientMode mode = GradientMode::Exact;
    std::uint64_t samples = 4096;
    std::uint64_t seed = 0;
};

struct GradientEstimate {
    double value = 0;
    double std_error = 0;  // 0 in exact mode
    bool exact = true;
};

/// ||grad h||_{L_p} = (E_x (sum_i |d_i h(x)|^2)^{p/2})^{1/p} for scalar h.
double gradient_lp(const CubeFunction& h, double p);

/// G_p(f) = (E_delta ||sum_i delta_i d_i f||_{L_p(E)}^p)^{1/p}.
GradientEstimate rademacher_gradient(const CubeFunction& f, double p, const TargetNorm& tn,
                                     const GradientTermConfig& cfg = {});

/// Same with delta_i replaced by the biased variables delta_i(t), t > 0.
/// Exact mode weights all 2^n outcomes of xi(t) by their probabilities.
GradientEstimate rademacher_gradient_biased(const CubeFunction& f, double p, const TargetNorm& tn,
                                            double t, const GradientTermConfig& cfg = {});

/// Quadrature for int_0^inf E||sum delta_i(t) d_i f||_{L_1(E)} dt / sqrt(e^{2t} - 1).
/// (0, 1] is integrated in u = sqrt(t), which removes the 1/sqrt(2t)
/// endpoint singularity; [1, tail_cutoff] directly. Composite 8-point
/// Gauss-Legendre on equal panels.
struct QuadratureConfig {
    int near_panels = 6;
    int far_panels = 24;
    double tail_cutoff = 40.0;
    GradientTermConfig gradient{};
};

struct IntegralEstimate {
    double value = 0;
    double tail_bound = 0;  // bound on the truncated part beyond tail_cutoff
    double std_error = 0;   // sum of |w_j| * node standard errors (Monte Carlo only)
    int nodes = 0;
};

IntegralEstimate semigroup_gradient_integral(const CubeFunction& f, const TargetNorm& tn,
                                             const QuadratureConfig& cfg = {});

/// Mh(x) = (sum_i (d_i h(x))_+^2)^{1/2} for scalar h.
CubeFunction asymmetric_gradient(const CubeFunction& h);

/// max(h, 0) pointwise.
CubeFunction positive_part(const CubeFunction& h);

/// Smallest attained m with sigma{h <= m} >= 1/2 and sigma{h >= m} >= 1/2.
double lower_median(const CubeFunction& h);

/// (E_delta ||sum_i delta_i d_i f(x)||_E^2)^{1/2} at a single point (exact).
double m_control_rhs(const CubeFunction& f, CubePoint x, const TargetNorm& tn);

/// m_control_rhs at every point.
std::vector<double> m_control_rhs_all(const CubeFunction& f, const TargetNorm& tn);

/// sum_i ||d_i f||_{L_p(E)}^p.
double sum_partial_lp_power(const CubeFunction& f, double p, const TargetNorm& tn);

}  // namespace cubelsi

#endif  // CUBELSI_GRADIENTS_HPP
