#ifndef CUBELSI_CUBE_HPP
#define CUBELSI_CUBE_HPP

// Hamming cube {-1,1}^n: point encoding, discrete derivatives, Walsh
// transform, multilinear extension and the heat semigroup.
//
// Bit convention (the only place it is defined): bit (i-1) of a point index
// equal to 0 means x_i = +1, equal to 1 means x_i = -1. With this convention
// the Walsh character w_S(x) = prod_{i in S} x_i equals (-1)^popcount(S & u),
// which is exactly the Hadamard butterfly sign.
//
// Conventions that are not spelled out by the underlying analysis and are
// fixed here: P_t multiplies the Walsh coefficient of level |S| by
// exp(-t|S|), and the Laplacian is the nonnegative operator sum_i d_i with
// spectrum |S|.

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubelsi/common.hpp"

namespace cubelsi {

inline constexpr int kMaxDimension = 24;
/// Largest n for routines that enumerate all (x, delta) pairs.
inline constexpr int kMaxExactDimension = 14;

template <typename Scalar>
using CubeTable = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline void check_dimension(int n, int limit = kMaxDimension) {
    if (n < 1 || n > limit)
        throw ArgumentError("cube dimension n=" + std::to_string(n) + " outside [1, " +
                            std::to_string(limit) + "]");
}

inline void check_direction(int n, int i) {
    if (i < 1 || i > n)
        throw ArgumentError("direction i=" + std::to_string(i) + " outside [1, " +
                            std::to_string(n) + "]");
}

struct CubePoint {
    std::uint32_t index = 0;
    int n = 1;

    /// x_i in {-1, +1}, i is 1-based.
    int coordinate(int i) const { return ((index >> (i - 1)) & 1u) ? -1 : 1; }

    friend bool operator==(const CubePoint&, const CubePoint&) = default;
};

inline int coordinate(std::uint32_t index, int i) { return ((index >> (i - 1)) & 1u) ? -1 : 1; }

inline std::uint32_t flip_index(std::uint32_t index, int i) { return index ^ (1u << (i - 1)); }

inline CubePoint flip(CubePoint x, int i) {
    check_direction(x.n, i);
    return {flip_index(x.index, i), x.n};
}

/// w_S(u) = (-1)^{|S & u|}.
inline int walsh_sign(std::uint32_t subset, std::uint32_t index) {
    return (std::popcount(subset & index) & 1) ? -1 : 1;
}

inline int level(std::uint32_t subset) { return std::popcount(subset); }

struct FunctionTag {};
struct SpectrumTag {};

/// A table of 2^n rows of d entries. Tag separates point-indexed values
/// (functions) from subset-indexed values (Walsh coefficients).
template <typename Scalar, typename Tag>
class BasicCubeArray {
public:
    using scalar_type = Scalar;
    using Table = CubeTable<Scalar>;

    BasicCubeArray() = default;

    BasicCubeArray(int n, int d) : n_(n) {
        check_dimension(n);
        if (d < 1) throw ArgumentError("target dimension d must be positive");
        values_ = Table::Zero(Eigen::Index{1} << n, d);
    }

    BasicCubeArray(int n, Table values) : n_(n), values_(std::move(values)) {
        check_dimension(n);
        if (values_.rows() != (Eigen::Index{1} << n))
            throw ArgumentError("table must have exactly 2^n rows");
        if (values_.cols() < 1) throw ArgumentError("target dimension d must be positive");
        if (!values_.allFinite()) throw ArgumentError("table entries must be finite");
    }

    /// Builds the table row by row from gen(CubePoint) -> vector of length d.
    template <typename Gen>
    static BasicCubeArray generate(int n, int d, Gen&& gen) {
        BasicCubeArray out(n, d);
        for (std::uint32_t u = 0; u < out.size(); ++u) out.values_.row(u) = gen(CubePoint{u, n});
        if (!out.values_.allFinite()) throw ArgumentError("table entries must be finite");
        return out;
    }

    int dimension() const { return n_; }
    int target_dim() const { return static_cast<int>(values_.cols()); }
    std::uint32_t size() const { return static_cast<std::uint32_t>(values_.rows()); }
    bool is_scalar() const { return values_.cols() == 1; }

    const Table& values() const& { return values_; }
    Table& values() & { return values_; }
    Table values() && { return std::move(values_); }

    auto row(std::uint32_t u) const { return values_.row(u); }
    auto row(std::uint32_t u) { return values_.row(u); }

    /// Scalar access for d = 1 tables.
    Scalar operator[](std::uint32_t u) const { return values_(u, 0); }
    Scalar& operator[](std::uint32_t u) { return values_(u, 0); }

    friend BasicCubeArray operator+(const BasicCubeArray& a, const BasicCubeArray& b) {
        return BasicCubeArray(a.n_, Table(a.values_ + b.values_));
    }
    friend BasicCubeArray operator-(const BasicCubeArray& a, const BasicCubeArray& b) {
        return BasicCubeArray(a.n_, Table(a.values_ - b.values_));
    }
    friend BasicCubeArray operator*(Scalar c, const BasicCubeArray& a) {
        return BasicCubeArray(a.n_, Table(c * a.values_));
    }

private:
    int n_ = 0;
    Table values_;
};

template <typename Scalar>
using BasicCubeFunction = BasicCubeArray<Scalar, FunctionTag>;
template <typename Scalar>
using BasicWalshSpectrum = BasicCubeArray<Scalar, SpectrumTag>;

using CubeFunction = BasicCubeFunction<double>;
using WalshSpectrum = BasicWalshSpectrum<double>;

template <typename Scalar>
BasicCubeFunction<Scalar> constant_function(int n, const Vector<Scalar>& c) {
    BasicCubeFunction<Scalar> f(n, static_cast<int>(c.size()));
    f.values().rowwise() = c.transpose();
    return f;
}

inline CubeFunction constant_function(int n, double c) {
    return constant_function<double>(n, Vector<double>::Constant(1, c));
}

/// Scalar Walsh character w_S as a function.
template <typename Scalar = double>
BasicCubeFunction<Scalar> walsh_function(int n, std::uint32_t subset) {
    BasicCubeFunction<Scalar> f(n, 1);
    for (std::uint32_t u = 0; u < f.size(); ++u) f[u] = Scalar(walsh_sign(subset, u));
    return f;
}

/// The same function viewed on C_n (n >= f.dimension()), ignoring the new coordinates.
template <typename Scalar>
BasicCubeFunction<Scalar> extend_dimension(const BasicCubeFunction<Scalar>& f, int n) {
    if (n < f.dimension()) throw ArgumentError("extend_dimension: cannot shrink");
    check_dimension(n);
    const std::uint32_t mask = static_cast<std::uint32_t>(f.size()) - 1;
    BasicCubeFunction<Scalar> out(n, f.target_dim());
    for (std::uint32_t u = 0; u < out.size(); ++u) out.row(u) = f.row(u & mask);
    return out;
}

/// (d_i f)(x) = (f(x) - f(flip_i x)) / 2, componentwise.
template <typename Scalar>
BasicCubeFunction<Scalar> partial_derivative(const BasicCubeFunction<Scalar>& f, int i) {
    check_direction(f.dimension(), i);
    CubeTable<Scalar> out(f.size(), f.target_dim());
    const auto& v = f.values();
    for (std::uint32_t u = 0; u < f.size(); ++u)
        out.row(u) = (v.row(u) - v.row(flip_index(u, i))) / Scalar(2);
    return {f.dimension(), std::move(out)};
}

namespace detail {

/// Unnormalized in-place Hadamard butterfly over the rows of a row-major table.
template <typename Scalar>
void hadamard_rows(CubeTable<Scalar>& table) {
    const std::size_t rows = static_cast<std::size_t>(table.rows());
    const std::size_t d = static_cast<std::size_t>(table.cols());
    Scalar* data = table.data();
    for (std::size_t half = 1; half < rows; half <<= 1) {
        for (std::size_t block = 0; block < rows; block += 2 * half) {
            for (std::size_t j = block; j < block + half; ++j) {
                Scalar* a = data + j * d;
                Scalar* b = data + (j + half) * d;
                for (std::size_t k = 0; k < d; ++k) {
                    const Scalar x = a[k];
                    const Scalar y = b[k];
                    a[k] = x + y;
                    b[k] = x - y;
                }
            }
        }
    }
}

}  // namespace detail

/// coeffs[S] = E_x f(x) w_S(x). Cost O(d n 2^n).
template <typename Scalar>
BasicWalshSpectrum<Scalar> walsh_transform(const BasicCubeFunction<Scalar>& f) {
    CubeTable<Scalar> t = f.values();
    detail::hadamard_rows(t);
    t /= Scalar(f.size());
    return {f.dimension(), std::move(t)};
}

/// f(x) = sum_S coeffs[S] w_S(x); no normalization.
template <typename Scalar>
BasicCubeFunction<Scalar> inverse_walsh(const BasicWalshSpectrum<Scalar>& s) {
    CubeTable<Scalar> t = s.values();
    detail::hadamard_rows(t);
    return {s.dimension(), std::move(t)};
}

/// Multilinear extension F(y) = sum_S coeffs[S] prod_{i in S} y_i, evaluated
/// by folding one coordinate at a time (2^n d operations).
template <typename Scalar>
Vector<Scalar> multilinear_eval(const BasicWalshSpectrum<Scalar>& s, std::span<const Scalar> y) {
    const int n = s.dimension();
    if (static_cast<int>(y.size()) != n) throw ArgumentError("multilinear_eval: y must have n entries");
    CubeTable<Scalar> c = s.values();
    for (int i = n - 1; i >= 0; --i) {
        const Eigen::Index half = Eigen::Index{1} << i;
        c.topRows(half) += y[static_cast<std::size_t>(i)] * c.middleRows(half, half);
    }
    return c.row(0).transpose();
}

/// Multiplies each Walsh coefficient by mult(|S|).
template <typename Scalar, typename Multiplier>
BasicCubeFunction<Scalar> level_multiplier(const BasicCubeFunction<Scalar>& f, Multiplier&& mult) {
    auto s = walsh_transform(f);
    std::vector<Scalar> per_level(static_cast<std::size_t>(f.dimension()) + 1);
    for (int k = 0; k <= f.dimension(); ++k) per_level[static_cast<std::size_t>(k)] = mult(k);
    for (std::uint32_t S = 0; S < s.size(); ++S) s.row(S) *= per_level[static_cast<std::size_t>(level(S))];
    return inverse_walsh(s);
}

/// Heat semigroup P_t: multiplier exp(-t|S|).
template <typename Scalar>
BasicCubeFunction<Scalar> heat_semigroup(const BasicCubeFunction<Scalar>& f, Scalar t) {
    if (!(t >= Scalar(0))) throw ArgumentError("heat_semigroup: t must be nonnegative");
    if (t == Scalar(0)) return f;
    return level_multiplier(f, [t](int k) { return std::exp(-t * Scalar(k)); });
}

/// Laplacian sum_i d_i f (spectrum |S|), computed from the derivatives.
template <typename Scalar>
BasicCubeFunction<Scalar> laplacian(const BasicCubeFunction<Scalar>& f) {
    CubeTable<Scalar> out = CubeTable<Scalar>::Zero(f.size(), f.target_dim());
    const auto& v = f.values();
    for (int i = 1; i <= f.dimension(); ++i)
        for (std::uint32_t u = 0; u < f.size(); ++u)
            out.row(u) += (v.row(u) - v.row(flip_index(u, i))) / Scalar(2);
    return {f.dimension(), std::move(out)};
}

/// delta_i(t) = (xi_i(t) - e^{-t}) / sqrt(1 - e^{-2t}) with
/// P{xi_i(t) = 1} = (1 + e^{-t}) / 2; mean 0, variance 1.
struct BiasedDeltaLaw {
    double plus_value;   // value when xi = +1
    double minus_value;  // value when xi = -1
    double plus_prob;
};

inline BiasedDeltaLaw biased_delta_law(double t) {
    if (!(t > 0.0)) throw ArgumentError("biased delta: t must be positive");
    const double a = std::exp(-t);
    const double s = std::sqrt(-std::expm1(-2.0 * t));
    return {(1.0 - a) / s, (-1.0 - a) / s, (1.0 + a) / 2.0};
}

inline std::vector<double> sample_biased_delta(double t, int n, Rng& rng) {
    const auto law = biased_delta_law(t);
    check_dimension(n);
    std::vector<double> out(static_cast<std::size_t>(n));
    for (auto& v : out) v = rng.uniform() < law.plus_prob ? law.plus_value : law.minus_value;
    return out;
}

}  // namespace cubelsi

#endif  // CUBELSI_CUBE_HPP
