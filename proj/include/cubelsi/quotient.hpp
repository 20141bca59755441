#ifndef CUBELSI_QUOTIENT_HPP
#define CUBELSI_QUOTIENT_HPP

// Quotients of the Hamming cube by an equivalence relation. Distances use
// rho(x, y) = ||x - y||_1, so neighbouring points are at distance 2.

#include <cstdint>
#include <utility>
#include <vector>

#include "cubelsi/norms.hpp"

namespace cubelsi {

using PointPair = std::pair<std::uint32_t, std::uint32_t>;

/// ||x - y||_1 = 2 * (number of differing coordinates).
inline int hamming_distance(std::uint32_t u, std::uint32_t v) { return 2 * std::popcount(u ^ v); }

class EquivalenceRelation {
public:
    /// Smallest equivalence relation containing the pairs (union-find closure).
    static EquivalenceRelation from_pairs(int n, const std::vector<PointPair>& pairs);

    int dimension() const { return n_; }
    std::uint32_t points() const { return static_cast<std::uint32_t>(class_of_.size()); }
    std::uint32_t classes() const { return classes_; }
    std::uint32_t class_of(std::uint32_t u) const { return class_of_[u]; }
    const std::vector<std::uint32_t>& class_table() const { return class_of_; }
    /// Members of each class in increasing index order.
    std::vector<std::vector<std::uint32_t>> members() const;

private:
    EquivalenceRelation(int n, std::vector<std::uint32_t> class_of, std::uint32_t classes)
        : n_(n), class_of_(std::move(class_of)), classes_(classes) {}

    int n_;
    std::vector<std::uint32_t> class_of_;
    std::uint32_t classes_;
};

inline EquivalenceRelation relation_from_pairs(int n, const std::vector<PointPair>& pairs) {
    return EquivalenceRelation::from_pairs(n, pairs);
}

EquivalenceRelation diagonal_relation(int n);
/// x ~ -x.
EquivalenceRelation antipodal_relation(int n);
/// Quotient by the subgroup generated by flipping the coordinate sets in masks.
EquivalenceRelation subgroup_relation(int n, const std::vector<std::uint32_t>& masks);
/// Closure of `pair_count` uniformly random pairs.
EquivalenceRelation random_relation(int n, std::size_t pair_count, Rng& rng);

class QuotientMetric {
public:
    explicit QuotientMetric(Eigen::MatrixXd distances) : d_(std::move(distances)) {}
    double operator()(std::uint32_t a, std::uint32_t b) const { return d_(a, b); }
    std::uint32_t size() const { return static_cast<std::uint32_t>(d_.rows()); }
    const Eigen::MatrixXd& matrix() const { return d_; }
    /// Symmetry, zero diagonal and triangle inequality, exactly.
    bool satisfies_metric_axioms() const;

private:
    Eigen::MatrixXd d_;
};

/// Class graph with edge weight min_{eta in a, zeta in b} rho(eta, zeta),
/// then Floyd-Warshall. Cubic in the number of classes.
QuotientMetric quotient_metric(const EquivalenceRelation& rel);

/// {eps : [eps] != [flip_i eps]}.
std::vector<std::uint32_t> boundary(const EquivalenceRelation& rel, int i);
double boundary_measure(const EquivalenceRelation& rel, int i);

enum class ProductSpaceMode {
    Auto,           // Cube when n <= 7, otherwise ClassHistogram
    Cube,           // the distance function as a function on C_{2n}
    ClassHistogram  // atoms (a, b) with weight |a||b| / 4^n
};

inline constexpr int kMaxProductCubeDimension = 7;

struct DistortionBound {
    double numerator = 0;    // ||rho_quotient||_{L_p(log L)^alpha(C_n x C_n)}
    double denominator = 0;  // (sum_i sigma(d_i R))^{1/p}
    double bound_without_c = 0;
    bool degenerate = false;  // single class: bound reported as 0
};

/// T^{-1} * numerator / denominator. alpha = 0 gives the L_p version.
DistortionBound distortion_lower_bound(const EquivalenceRelation& rel, double p, double alpha,
                                       double type_constant,
                                       ProductSpaceMode mode = ProductSpaceMode::Auto);

/// F(eps) = g(class_of(eps)); g has one row per class.
CubeFunction lift(const EquivalenceRelation& rel, const CubeTable<double>& g);

}  // namespace cubelsi

#endif  // CUBELSI_QUOTIENT_HPP
