#ifndef CUBELSI_SYMGROUP_HPP
#define CUBELSI_SYMGROUP_HPP

// Functions on the symmetric group S_n with the uniform measure, and the
// transposition Dirichlet form sum_tau E_pi ||f(pi) - f(tau o pi)||^2.
// Permutations are 0-based arrays: pi[j] is the image of j.

#include <cstdint>
#include <span>
#include <vector>

#include "cubelsi/inequalities.hpp"

namespace cubelsi {

inline constexpr int kMinPermDegree = 3;
inline constexpr int kMaxPermDegree = 8;

using Permutation = std::vector<int>;

std::uint64_t factorial(int n);

/// Lehmer rank: sum_j c_j (n-1-j)!, c_j = #{k > j : pi[k] < pi[j]}. Identity -> 0.
std::uint64_t perm_rank(std::span<const int> perm);
Permutation perm_unrank(int n, std::uint64_t rank);

/// sign(pi) in {-1, +1}.
int perm_sign(std::span<const int> perm);

/// (a o b)[j] = a[b[j]].
Permutation compose(std::span<const int> a, std::span<const int> b);

class PermFunction {
public:
    PermFunction(int n, int d);
    PermFunction(int n, CubeTable<double> values);

    template <typename Gen>
    static PermFunction generate(int n, int d, Gen&& gen) {
        PermFunction f(n, d);
        for (std::uint64_t r = 0; r < f.size(); ++r) f.values_.row(static_cast<Eigen::Index>(r)) = gen(perm_unrank(n, r));
        return f;
    }

    int degree() const { return n_; }
    int target_dim() const { return static_cast<int>(values_.cols()); }
    std::uint64_t size() const { return static_cast<std::uint64_t>(values_.rows()); }
    bool is_scalar() const { return values_.cols() == 1; }
    const CubeTable<double>& values() const { return values_; }
    CubeTable<double>& values() { return values_; }
    auto row(std::uint64_t r) { return values_.row(static_cast<Eigen::Index>(r)); }
    auto row(std::uint64_t r) const { return values_.row(static_cast<Eigen::Index>(r)); }
    double& operator[](std::uint64_t r) { return values_(static_cast<Eigen::Index>(r), 0); }
    double operator[](std::uint64_t r) const { return values_(static_cast<Eigen::Index>(r), 0); }

private:
    int n_;
    CubeTable<double> values_;
};

/// The scalar function pi -> sign(pi).
PermFunction sign_function(int n);

/// rank(tau o pi) for the transposition tau = (a b), indexed [tau][rank(pi)].
/// Transpositions are listed as (0 1), (0 2), ..., (n-2 n-1).
std::vector<std::vector<std::uint32_t>> transposition_table(int n);

/// sum over all transpositions of E_pi ||f(pi) - f(tau o pi)||_E^2.
double transposition_dirichlet(const PermFunction& f, const TargetNorm& tn);

/// Ent(f^2) against (6 log n / (n - 1)) * Dirichlet. Scalar f only.
InequalityReport evaluate_dsc(const PermFunction& f);

/// ||f - Ef||_{L_2(E)}^2 against (2 m2^2 / (n - 1)) * Dirichlet.
InequalityReport evaluate_kn(const PermFunction& f, const TargetNorm& tn, double m2 = 1.0);

/// ||f - Ef||_{L_2(log L)(E)}^2 against (log n / (n - 1)) * Dirichlet.
InequalityReport evaluate_sym_lsi(const PermFunction& f, const TargetNorm& tn);

/// Uniform weights and beta(pi, tau o pi) = weight / n! for every transposition,
/// so that sum beta ||f(x) - f(y)||^2 = weight * Dirichlet.
DirichletKernel symmetric_group_kernel(int n, double weight);

}  // namespace cubelsi

#endif  // CUBELSI_SYMGROUP_HPP
