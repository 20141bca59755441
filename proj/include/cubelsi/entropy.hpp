#ifndef CUBELSI_ENTROPY_HPP
#define CUBELSI_ENTROPY_HPP

#include <span>

#include "cubelsi/norms.hpp"

namespace cubelsi {

/// sign(log x) |log x|^alpha; increasing in x, zero at x = 1.
double signed_log_alpha(double x, double alpha);

/// Ent(h) = E h log h - (E h) log(E h) with 0 log 0 = 0. Generic finite
/// probability space; empty weights mean uniform.
double ent(std::span<const double> h, std::span<const double> weights = {});
double ent(const CubeFunction& h);

/// Ent^alpha(h) = E h log^alpha(h / E h) with 0 log^alpha 0 = 0.
double ent_alpha(std::span<const double> h, double alpha, std::span<const double> weights = {});
double ent_alpha(const CubeFunction& h, double alpha);

/// Constants of the two-sided Orlicz/entropy comparison:
///   c^{-1} max{||f||_p^p, Ent^a(||f||^p)} <= ||f||_{L_p(log L)^a}^p <= C max{...}
struct EntropyBoundsConstants {
    double p;
    double alpha;
    double c_alpha;
    double K_alpha;
    double C_alpha;
    double B;  // breakpoint (2^{1/a} + e - 1) / (2^{1/a} - 1) used by K_alpha
};

EntropyBoundsConstants entropy_bounds_constants(double p, double alpha);

struct OrliczEntropyCheck {
    double lp_power = 0;     // ||f||_{L_p(E)}^p
    double entropy = 0;      // Ent^alpha(||f||_E^p)
    double lower = 0;
    double middle = 0;       // ||f||_{L_p(log L)^alpha(E)}^p
    double upper = 0;
    bool holds = true;
};

/// Both sides with explicit constants lower_const and upper_const:
/// lower_const * max{...} <= middle <= upper_const * max{...}.
OrliczEntropyCheck check_orlicz_entropy_bounds(std::span<const double> magnitudes, double p,
                                               double alpha, double lower_const, double upper_const,
                                               std::span<const double> weights = {});

/// The lemma with c_alpha^{-1} and C_alpha.
OrliczEntropyCheck check_orlicz_entropy_equivalence(const CubeFunction& f, double p, double alpha,
                                                    const TargetNorm& tn);

/// p = 2, alpha = 1 with the rounder constants 1/2 and 14.
OrliczEntropyCheck check_l2logl_entropy_equivalence(const CubeFunction& f, const TargetNorm& tn);

/// K_alpha + 2 y log^alpha(y) - y log^alpha(e + y); nonnegative for all y > 0.
double elementary_inequality_slack(double y, double alpha);

}  // namespace cubelsi

#endif  // CUBELSI_ENTROPY_HPP
