#ifndef CUBELSI_NORMS_HPP
#define CUBELSI_NORMS_HPP

#include <limits>
#include <span>
#include <vector>

#include "cubelsi/cube.hpp"

namespace cubelsi {

/// The l_q^d norm standing in for the target space E. q = infinity is a
/// separate branch, not a large-q limit.
class TargetNorm {
public:
    static constexpr double kInfinity = std::numeric_limits<double>::infinity();

    explicit TargetNorm(double q = 2.0) : q_(q) {
        if (!(q >= 1.0)) throw ArgumentError("target norm exponent q must be in [1, inf]");
    }
    static TargetNorm euclidean() { return TargetNorm(2.0); }
    static TargetNorm sup() { return TargetNorm(kInfinity); }

    double q() const { return q_; }
    bool is_infinite() const { return std::isinf(q_); }
    bool is_euclidean() const { return q_ == 2.0; }

    template <typename Derived>
    double operator()(const Eigen::MatrixBase<Derived>& v) const {
        if (is_infinite()) return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
        if (q_ == 1.0) return v.cwiseAbs().sum();
        if (q_ == 2.0) return v.norm();
        return std::pow(v.cwiseAbs().array().pow(q_).sum(), 1.0 / q_);
    }

private:
    double q_;
};

template <typename Derived>
double vector_norm(const Eigen::MatrixBase<Derived>& v, const TargetNorm& tn) {
    return tn(v);
}

/// psi(t) = t^p log^alpha(e + t^p). alpha in (-1, 0) yields an increasing but
/// possibly non-convex gauge; it is only meaningful for the two-point check.
class OrliczGauge {
public:
    OrliczGauge(double p, double alpha) : p_(p), alpha_(alpha) {
        if (!(p >= 1.0)) throw ArgumentError("Orlicz gauge needs p >= 1");
        if (!(alpha > -1.0)) throw ArgumentError("Orlicz gauge needs alpha > -1");
    }
    /// L_p(log L)^{p/2}, the Talagrand-type gauge.
    static OrliczGauge talagrand(double p) { return {p, p / 2.0}; }

    double p() const { return p_; }
    double alpha() const { return alpha_; }

    double operator()(double t) const {
        if (t <= 0.0) return 0.0;
        const double tp = std::pow(t, p_);
        if (alpha_ == 0.0) return tp;
        return tp * std::pow(std::log(std::numbers::e + tp), alpha_);
    }

private:
    double p_;
    double alpha_;
};

/// Pointwise norms ||f(x)||_E.
std::vector<double> magnitudes(const CubeFunction& f, const TargetNorm& tn);

/// x -> ||f(x)||_E as a scalar function.
CubeFunction pointwise_norm(const CubeFunction& f, const TargetNorm& tn);

/// (E_mu |v|^p)^{1/p} over a finite probability space; empty weights mean uniform.
double lp_norm(std::span<const double> values, double p, std::span<const double> weights = {});

double lp_norm(const CubeFunction& f, double p, const TargetNorm& tn);

inline constexpr double kDefaultOrliczTolerance = 1e-10;

/// Luxemburg norm inf{gamma > 0 : E_mu psi(|v|/gamma) <= 1} by bracketing
/// from the L_p norm followed by bisection. Returns 0 for v = 0.
double orlicz_norm(std::span<const double> values, const OrliczGauge& g,
                   std::span<const double> weights = {},
                   double tol = kDefaultOrliczTolerance);

double orlicz_norm(const CubeFunction& f, const OrliczGauge& g, const TargetNorm& tn,
                   double tol = kDefaultOrliczTolerance);

/// ||1||_psi = 1 / psi^{-1}(1): the norm of the unit constant.
double orlicz_norm_of_one(const OrliczGauge& g);

/// Componentwise mean under the uniform measure.
Vector<double> expectation(const CubeFunction& f);

/// f - E f.
CubeFunction centered(const CubeFunction& f);

}  // namespace cubelsi

#endif  // CUBELSI_NORMS_HPP
