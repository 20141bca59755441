#include "cubelsi/random_functions.hpp"

namespace cubelsi {

namespace {

std::uint32_t random_subset(int n, int lev, Rng& rng) {
    std::uint32_t S = 0;
    while (level(S) < lev) S |= std::uint32_t{1} << rng.below(static_cast<std::uint64_t>(n));
    return S;
}

void fill_row_gaussian(CubeTable<double>& t, Eigen::Index r, Rng& rng) {
    for (Eigen::Index k = 0; k < t.cols(); ++k) t(r, k) = rng.normal();
}

}  // namespace

CubeFunction random_gaussian_function(int n, int d, Rng& rng) {
    CubeFunction f(n, d);
    for (std::uint32_t u = 0; u < f.size(); ++u) fill_row_gaussian(f.values(), u, rng);
    return f;
}

CubeFunction random_walsh_sparse(int n, int d, int terms, int max_level, Rng& rng) {
    if (terms < 1 || max_level < 0) throw ArgumentError("random_walsh_sparse: bad term count or level");
    WalshSpectrum s(n, d);
    const int top = std::min(max_level, n);
    for (int j = 0; j < terms; ++j) {
        const int lev = static_cast<int>(rng.below(static_cast<std::uint64_t>(top) + 1));
        const std::uint32_t S = random_subset(n, lev, rng);
        for (int k = 0; k < d; ++k) s.values()(S, k) += rng.normal();
    }
    return inverse_walsh(s);
}

CubeFunction random_indicator(int n, double density, Rng& rng) {
    CubeFunction f(n, 1);
    for (std::uint32_t u = 0; u < f.size(); ++u) f[u] = rng.uniform() < density ? 1.0 : 0.0;
    return f;
}

CubeFunction random_mixed_function(int n, int d, Rng& rng) {
    const std::uint32_t N = std::uint32_t{1} << n;
    switch (rng.below(6)) {
        case 0:
            return random_gaussian_function(n, d, rng);
        case 1:
            return random_walsh_sparse(n, d, 1 + static_cast<int>(rng.below(4)), 1 + static_cast<int>(rng.below(3)), rng);
        case 2: {  // sparse support
            CubeFunction f(n, d);
            const double density = rng.uniform(0.0, 0.4);
            for (std::uint32_t u = 0; u < N; ++u)
                if (rng.uniform() < density) fill_row_gaussian(f.values(), u, rng);
            return f;
        }
        case 3: {  // heavy tails
            CubeFunction f(n, d);
            for (std::uint32_t u = 0; u < N; ++u)
                for (int k = 0; k < d; ++k) f.values()(u, k) = std::exp(2.0 * rng.normal()) * (rng.coin() ? 1 : -1);
            return f;
        }
        case 4: {  // subcube indicator times a vector
            CubeFunction f(n, d);
            const std::uint32_t fixed = random_subset(n, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))), rng);
            const std::uint32_t pattern = static_cast<std::uint32_t>(rng()) & fixed;
            Vector<double> v(d);
            for (int k = 0; k < d; ++k) v(k) = rng.normal();
            for (std::uint32_t u = 0; u < N; ++u)
                if ((u & fixed) == pattern) f.row(u) = v.transpose();
            return f;
        }
        default: {  // near-constant
            CubeFunction f(n, d);
            Vector<double> c(d);
            for (int k = 0; k < d; ++k) c(k) = rng.normal();
            for (std::uint32_t u = 0; u < N; ++u)
                for (int k = 0; k < d; ++k) f.values()(u, k) = c(k) + 1e-3 * rng.normal();
            return f;
        }
    }
}

CubeFunction random_half_zero_function(int n, Rng& rng) {
    CubeFunction g = random_mixed_function(n, 1, rng);
    const double m = lower_median(g);
    g.values().array() -= m;
    return positive_part(g);
}

PermFunction random_perm_function(int n, int d, Rng& rng) {
    PermFunction f(n, d);
    const std::uint64_t m = f.size();
    switch (rng.below(4)) {
        case 0:
            for (std::uint64_t r = 0; r < m; ++r)
                for (int k = 0; k < d; ++k) f.values()(static_cast<Eigen::Index>(r), k) = rng.normal();
            break;
        case 1: {  // sparse support
            const double density = rng.uniform(0.0, 0.3);
            for (std::uint64_t r = 0; r < m; ++r)
                if (rng.uniform() < density)
                    for (int k = 0; k < d; ++k) f.values()(static_cast<Eigen::Index>(r), k) = rng.normal();
            break;
        }
        case 2: {  // depends on pi(0) only
            std::vector<double> table(static_cast<std::size_t>(n * d));
            for (double& v : table) v = rng.normal();
            for (std::uint64_t r = 0; r < m; ++r) {
                const int first = perm_unrank(n, r)[0];
                for (int k = 0; k < d; ++k)
                    f.values()(static_cast<Eigen::Index>(r), k) = table[static_cast<std::size_t>(first * d + k)];
            }
            break;
        }
        default:  // heavy tails
            for (std::uint64_t r = 0; r < m; ++r)
                for (int k = 0; k < d; ++k)
                    f.values()(static_cast<Eigen::Index>(r), k) = std::exp(1.5 * rng.normal());
    }
    return f;
}

}  // namespace cubelsi
