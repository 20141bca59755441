#ifndef CUBELSI_INEQUALITIES_HPP
#define CUBELSI_INEQUALITIES_HPP

// Both sides of each named inequality, evaluated with every unspecified
// multiplicative constant set to 1. Explicit dimension-dependent factors that
// belong to a display (e.g. 2(log n + 1), pi, (2 - q)) are kept. The ratio
// lhs / rhs_unit is the empirical stand-in for the missing constant.

#include <Eigen/Sparse>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubelsi/gradients.hpp"

namespace cubelsi {

enum class InequalityId {
    TalagrandLSI,         // ||f - Ef||_{L_p(log L)^{p/2}} <= C ||grad f||_p, scalar
    PoincareLp,           // ||f - Ef||_p <= C ||grad f||_p, scalar
    IVVPoincare,          // ||f - Ef||_{L_p(E)} <= C G_p(f)
    MainLSI,              // ||f - Ef||_{L_p(log L)^{p/2}(E)} <= K G_p(f)
    StrongPisier,         // ... <= K G_p(f) + 2(log n + 1) G_1(f)
    PisierLogN,           // ||f - Ef||_{L_p(E)} <= (log n + 1) G_p(f)
    TalagrandAsym,        // ||h||_{L_p(log L)^{p/2}} <= k ||Mh||_p, h >= 0, sigma{h = 0} >= 1/2
    TypeLSI,              // ||f - Ef||_{L_p(log L)^{p/2}(E)} <= tau (sum_i ||d_i f||_p^p)^{1/p}, p in [1, 2]
    Beckner,              // ||f||_2^2 - ||f||_q^2 <= B (2 - q) G_2(f)^2, E f = 0
    IsopFunctional,       // ||f||_p (1 + sqrt(log(||f||_p / ||f||_1))) <= eta^{-1} G_p(f), E f = 0
    MostGeneral,          // ... <= k G_p(f) + pi int_0^inf E||sum delta_i(t) d_i f||_1 dt / sqrt(e^{2t} - 1)
    OrliczHypercontract,  // ||P_t f||_{L_p(log L)^a(E)} <= L t^{-2a/(p p*)} ||f||_{L_p(E)}, t in (0, 1)
    RieszP2,              // ||grad P_t h||_2 <= A (e^{2t} - 1)^{-1/2} ||h - Eh||_2
};

inline constexpr InequalityId kAllInequalities[] = {
    InequalityId::TalagrandLSI, InequalityId::PoincareLp,     InequalityId::IVVPoincare,
    InequalityId::MainLSI,      InequalityId::StrongPisier,   InequalityId::PisierLogN,
    InequalityId::TalagrandAsym, InequalityId::TypeLSI,       InequalityId::Beckner,
    InequalityId::IsopFunctional, InequalityId::MostGeneral,  InequalityId::OrliczHypercontract,
    InequalityId::RieszP2,
};

std::string_view to_string(InequalityId id);
std::optional<InequalityId> parse_inequality_id(std::string_view name);
/// Scalar-only inequalities (d must be 1).
bool is_scalar_only(InequalityId id);

struct InequalityParams {
    double p = 2.0;
    /// Orlicz exponent for OrliczHypercontract; defaults to the endpoint p/2.
    std::optional<double> alpha;
    double t = 0.5;
    double beckner_q = 1.5;
    GradientTermConfig gradient{};
    QuadratureConfig quadrature{};
};

struct InequalityReport {
    std::string id;
    InequalityParams params;
    double target_q = 2.0;
    int n = 0;
    int d = 0;
    double lhs = 0;
    double rhs_unit = 0;
    double ratio = 0;
    std::optional<CubeFunction> witness;
};

/// lhs / rhs; 0/0 is reported as 0. A positive lhs against a zero rhs is a
/// bug for a proven inequality and throws std::logic_error. `scale` sets what
/// counts as zero for lhs.
double report_ratio(double lhs, double rhs, double scale, std::string_view id);

InequalityReport evaluate(InequalityId id, const CubeFunction& f, const TargetNorm& tn,
                          const InequalityParams& params = {});

/// A probability space of m atoms with weights mu and a nonnegative kernel beta.
struct DirichletKernel {
    std::vector<double> mu;
    Eigen::SparseMatrix<double, Eigen::RowMajor> beta;
};

/// beta(x, flip_i x) = weight for every ordered pair. weight = 1 / (4 2^n)
/// turns sum beta |f(x) - f(y)|^2 into sum_i ||d_i f||_2^2.
DirichletKernel cube_kernel(int n, double weight);

struct KernelFormReport {
    double vector_lhs = 0;   // ||f - Ef||_{L_p(E)}^p
    double vector_rhs = 0;   // sum beta ||f(x) - f(y)||^p
    double scalar_lhs = 0;   // ||h - Eh||_{L_p(log L)^a}^p, h = ||f - Ef||_E
    double scalar_rhs = 0;   // sum beta |h(x) - h(y)|^p
    double boosted_lhs = 0;  // ||f - Ef||_{L_p(log L)^a(E)}^p
    double boosted_rhs = 0;  // sum beta ||f(x) - f(y)||^p (combined constant left to the caller)
};

KernelFormReport evaluate_kernel_form(const DirichletKernel& kernel, const CubeTable<double>& f,
                                      const TargetNorm& tn, double p, double alpha);

/// 2^{p-1} (C^p + 1), the combined constant of the boosting argument.
double boost_constant(double p, double scalar_constant);

/// The same argument with the norm of the unit constant kept:
/// 2^{p-1} (C^p + ||1||_psi^p A), A the vector Poincare constant.
double boost_constant_with_unit_norm(double p, double alpha, double scalar_constant,
                                     double poincare_constant = 1.0);

struct SearchConfig {
    std::uint64_t budget = 10000;        // total objective evaluations
    std::uint64_t restart_evals = 500;   // evaluations per restart (fixed schedule)
    std::uint64_t seed = 0;
    InequalityParams params{};
    std::optional<CubeFunction> warm_start;  // used as the first restart's start
};

struct SearchResult {
    InequalityReport best;
    std::uint64_t evaluations = 0;
    std::uint64_t best_restart = 0;
};

/// Multi-start maximization of the ratio: Walsh-sparse, structured and
/// random starts, simulated annealing then coordinate pattern search.
/// Deterministic in the seed; the best ratio is nondecreasing in the budget.
SearchResult extremize(InequalityId id, int n, int d, const TargetNorm& tn, const SearchConfig& cfg);

struct BecknerRow {
    double q;
    double value;  // (||f||_2^2 - ||f||_q^2) / (1/q - 1/2)
};

struct BecknerTable {
    std::vector<BecknerRow> rows;
    bool nondecreasing = true;
};

/// Centers f first. Nondecreasing up to 1e-9 relative slack.
BecknerTable beckner_monotonicity(const CubeFunction& f, std::span<const double> qs,
                                  const TargetNorm& tn = TargetNorm::euclidean());

/// q -> 2 limit of the Beckner quotient: 2 Ent(||f - Ef||^2).
double beckner_limit(const CubeFunction& f, const TargetNorm& tn = TargetNorm::euclidean());

/// Smallest C for which (xy)^{p/2} <= (C/2)(x^p log^a(e + x^p) + y^p log^{-a}(e + y^p)).
double two_point_threshold(double x, double y, double p, double alpha);

/// Checks the two-point inequality for a given constant.
bool two_point_holder_check(double x, double y, double p, double alpha, double constant);

struct TwoPointConstant {
    double constant = 0;
    double argmax_x = 0;
    double argmax_y = 0;
};

/// Log-spaced grid over (x^p, y^p) followed by pattern-search refinement.
TwoPointConstant estimate_two_point_constant(double p, double alpha, int grid = 801);

struct RieszBound {
    double t = 0;
    int n = 0;
    double closed_form = 0;        // max_{1 <= k <= n} sqrt(k) e^{-tk}
    double closed_form_all_k = 0;  // sup over all integers k >= 1
    double power_iteration = 0;    // randomized estimate on the n-cube
    double a2_closed = 0;          // closed_form * sqrt(e^{2t} - 1)
    double a2_power = 0;
};

/// Operator norm of h -> grad P_t h on mean-zero functions of n variables.
RieszBound riesz_p2_bound(double t, int n, std::uint64_t seed = 0, int iterations = 300);

}  // namespace cubelsi

#endif  // CUBELSI_INEQUALITIES_HPP
