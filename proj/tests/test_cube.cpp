#include "doctest.h"

#include <array>
#include <cmath>

#include "cubelsi/cube.hpp"
#include "cubelsi/random_functions.hpp"

using namespace cubelsi;

namespace {

double max_abs_diff(const CubeFunction& a, const CubeFunction& b) {
    return (a.values() - b.values()).cwiseAbs().maxCoeff();
}

// f(x) = x_1 (+ x_1 x_2 when with_pair) on n = 2.
CubeFunction x1_plus(bool with_pair) {
    return CubeFunction::generate(2, 1, [&](CubePoint x) {
        Vector<double> v(1);
        v[0] = x.coordinate(1) + (with_pair ? x.coordinate(1) * x.coordinate(2) : 0);
        return v;
    });
}

}  // namespace

TEST_CASE("flip toggles the coordinate bit") {
    CHECK(flip(CubePoint{0, 2}, 1).index == 1);
    CHECK(flip(CubePoint{3, 2}, 2).index == 1);
    for (std::uint32_t u = 0; u < 8; ++u)
        for (int i = 1; i <= 3; ++i) {
            const CubePoint x{u, 3};
            CHECK(flip(flip(x, i), i) == x);
            CHECK(flip(x, i).coordinate(i) == -x.coordinate(i));
        }
    CHECK_THROWS_AS(flip(CubePoint{0, 2}, 3), ArgumentError);
    CHECK_THROWS_AS(flip(CubePoint{0, 2}, 0), ArgumentError);
}

TEST_CASE("bit 0 means +1") {
    CHECK(CubePoint{0, 3}.coordinate(1) == 1);
    CHECK(CubePoint{1, 3}.coordinate(1) == -1);
    CHECK(CubePoint{4, 3}.coordinate(3) == -1);
    CHECK(walsh_sign(0b11, 0b01) == -1);
    CHECK(walsh_sign(0b11, 0b11) == 1);
}

TEST_CASE("table invariants") {
    CHECK_THROWS_AS(CubeFunction(0, 1), ArgumentError);
    CHECK_THROWS_AS(CubeFunction(25, 1), ArgumentError);
    CHECK_THROWS_AS(CubeFunction(2, 0), ArgumentError);
    CHECK_THROWS_AS(CubeFunction(2, CubeTable<double>::Zero(3, 1)), ArgumentError);
    CubeTable<double> bad = CubeTable<double>::Zero(4, 1);
    bad(2, 0) = std::nan("");
    CHECK_THROWS_AS(CubeFunction(2, bad), ArgumentError);
}

TEST_CASE("partial derivative examples") {
    const auto x1 = walsh_function(2, 0b01);
    CHECK(max_abs_diff(partial_derivative(x1, 1), x1) == 0);
    CHECK(partial_derivative(x1, 2).values().cwiseAbs().maxCoeff() == 0);
    const auto w12 = walsh_function(2, 0b11);
    CHECK(max_abs_diff(partial_derivative(w12, 1), w12) == 0);
    CHECK_THROWS_AS(partial_derivative(x1, 3), ArgumentError);
}

TEST_CASE("partial derivative is idempotent with spectrum on S containing i") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const int d = 1 + static_cast<int>(rng.below(3));
        const auto f = random_gaussian_function(n, d, rng);
        for (int i = 1; i <= n; ++i) {
            const auto di = partial_derivative(f, i);
            CHECK(max_abs_diff(partial_derivative(di, i), di) == 0);
            const auto s = walsh_transform(di);
            double off = 0;
            for (std::uint32_t S = 0; S < s.size(); ++S)
                if (!((S >> (i - 1)) & 1u)) off = std::max(off, s.row(S).cwiseAbs().maxCoeff());
            CHECK(off < 1e-13);
        }
    }
}

TEST_CASE("walsh transform of characters and constants") {
    const int n = 4;
    for (std::uint32_t S = 0; S < 16; ++S) {
        const auto s = walsh_transform(walsh_function(n, S));
        for (std::uint32_t T = 0; T < 16; ++T) CHECK(s[T] == (T == S ? 1.0 : 0.0));
    }
    const auto c = walsh_transform(constant_function(n, 2.5));
    CHECK(c[0] == 2.5);
    for (std::uint32_t T = 1; T < 16; ++T) CHECK(c[T] == 0.0);
}

TEST_CASE("walsh roundtrip and Parseval") {
    Rng rng(5);
    for (int n : {1, 3, 8, 12}) {
        const auto f = random_gaussian_function(n, 3, rng);
        const auto s = walsh_transform(f);
        CHECK(max_abs_diff(inverse_walsh(s), f) < 1e-12);
        const double energy = f.values().squaredNorm() / f.size();
        CHECK(std::abs(energy - s.values().squaredNorm()) < 1e-10 * std::max(1.0, energy));
    }
}

TEST_CASE("float tables work through the template") {
    BasicCubeFunction<float> f(3, 1);
    for (std::uint32_t u = 0; u < 8; ++u) f[u] = static_cast<float>(u);
    const auto back = inverse_walsh(walsh_transform(f));
    CHECK((back.values() - f.values()).cwiseAbs().maxCoeff() < 1e-5f);
}

TEST_CASE("multilinear extension") {
    const auto w12 = walsh_function(2, 0b11);
    const std::array<double, 2> half{0.5, 0.5};
    CHECK(multilinear_eval(walsh_transform(w12), std::span<const double>(half))[0] == doctest::Approx(0.25));

    Rng rng(3);
    const auto f = random_walsh_sparse(5, 2, 6, 3, rng);
    const auto s = walsh_transform(f);
    std::array<double, 5> zero{};
    CHECK((multilinear_eval(s, std::span<const double>(zero)) - s.row(0).transpose()).norm() == 0);
    for (std::uint32_t u = 0; u < f.size(); ++u) {
        std::array<double, 5> y{};
        for (int i = 1; i <= 5; ++i) y[static_cast<std::size_t>(i - 1)] = coordinate(u, i);
        const auto v = multilinear_eval(s, std::span<const double>(y));
        CHECK((v - f.row(u).transpose()).cwiseAbs().maxCoeff() < 1e-12);
    }
    // Affine in each coordinate: F at the midpoint is the average of the ends.
    std::array<double, 5> a{0.3, -0.7, 1.9, 0.1, -2.0}, b = a, m = a;
    b[2] = -4.0;
    m[2] = (a[2] + b[2]) / 2;
    const auto fa = multilinear_eval(s, std::span<const double>(a));
    const auto fb = multilinear_eval(s, std::span<const double>(b));
    const auto fm = multilinear_eval(s, std::span<const double>(m));
    CHECK((fm - (fa + fb) / 2).norm() < 1e-12);
    CHECK_THROWS_AS(multilinear_eval(s, std::span<const double>(half)), ArgumentError);
}

TEST_CASE("heat semigroup") {
    const auto w = walsh_function(4, 0b1011);
    const auto pw = heat_semigroup(w, 0.7);
    CHECK(max_abs_diff(pw, std::exp(-2.1) * w) < 1e-15);
    CHECK(max_abs_diff(heat_semigroup(w, 0.0), w) == 0);
    CHECK_THROWS_AS(heat_semigroup(w, -0.1), ArgumentError);

    Rng rng(8);
    const auto f = random_gaussian_function(6, 2, rng);
    CHECK(max_abs_diff(heat_semigroup(heat_semigroup(f, 2.0), 1.0), heat_semigroup(f, 3.0)) < 1e-12);
    const Vector<double> before = f.values().colwise().mean().transpose();
    const Vector<double> after = heat_semigroup(f, 1.3).values().colwise().mean().transpose();
    CHECK((before - after).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("laplacian") {
    const auto w = walsh_function(4, 0b0110);
    CHECK(max_abs_diff(laplacian(w), 2.0 * w) < 1e-15);
    CHECK(laplacian(constant_function(3, 4.0)).values().cwiseAbs().maxCoeff() == 0);
    CHECK(max_abs_diff(laplacian(x1_plus(true)), x1_plus(false) + 2.0 * walsh_function(2, 0b11)) == 0);

    // Spectral and derivative forms agree.
    Rng rng(21);
    const auto f = random_gaussian_function(5, 2, rng);
    const auto spectral = level_multiplier(f, [](int k) { return double(k); });
    CHECK(max_abs_diff(spectral, laplacian(f)) < 1e-12);
}

TEST_CASE("reproduction formula f = 2 int P_t Delta P_t f dt for mean-zero f") {
    // P_t Delta P_t multiplies level k by k e^{-2tk}; integrate numerically
    // per level in u = e^{-2t} and compare with the identity.
    Rng rng(2);
    auto f = random_gaussian_function(4, 1, rng);
    f.values().array() -= f.values().mean();
    CubeTable<double> acc = CubeTable<double>::Zero(f.size(), 1);
    const int steps = 4000;
    const double T = 20.0, h = T / steps;
    for (int j = 0; j <= steps; ++j) {
        const double t = j * h;
        const double w = (j == 0 || j == steps) ? 0.5 : 1.0;
        acc += w * h * heat_semigroup(laplacian(heat_semigroup(f, t)), t).values();
    }
    CHECK((2.0 * acc - f.values()).cwiseAbs().maxCoeff() < 1e-3);
}

TEST_CASE("biased delta law") {
    CHECK_THROWS_AS(biased_delta_law(0.0), ArgumentError);
    const auto far = biased_delta_law(40.0);
    CHECK(far.plus_value == doctest::Approx(1.0));
    CHECK(far.minus_value == doctest::Approx(-1.0));
    CHECK(far.plus_prob == doctest::Approx(0.5));

    Rng rng(1);
    const int draws = 1000000;
    double sum = 0, sq = 0;
    for (int k = 0; k < draws / 4; ++k)
        for (double v : sample_biased_delta(0.5, 4, rng)) {
            sum += v;
            sq += v * v;
        }
    const double mean = sum / draws;
    const double var = sq / draws - mean * mean;
    CHECK(std::abs(mean) <= 0.005);
    CHECK(var >= 0.99);
    CHECK(var <= 1.01);
}

TEST_CASE("extend_dimension ignores new coordinates") {
    Rng rng(4);
    const auto f = random_gaussian_function(3, 2, rng);
    const auto g = extend_dimension(f, 5);
    CHECK(g.dimension() == 5);
    for (int i = 4; i <= 5; ++i) CHECK(partial_derivative(g, i).values().cwiseAbs().maxCoeff() == 0);
    CHECK_THROWS_AS(extend_dimension(f, 2), ArgumentError);
}
