#include "doctest.h"

#include <cmath>

#include "cubelsi/norms.hpp"
#include "cubelsi/random_functions.hpp"

using namespace cubelsi;

TEST_CASE("target norms") {
    Eigen::Vector2d v(3, 4);
    CHECK(TargetNorm(2)(v) == 5);
    CHECK(TargetNorm::sup()(v) == 4);
    CHECK(TargetNorm(1)(Eigen::Vector3d(1, 1, 1)) == 3);
    CHECK(TargetNorm(3)(v) == doctest::Approx(std::cbrt(91.0)));
    CHECK_THROWS_AS(TargetNorm(0.5), ArgumentError);
}

TEST_CASE("lp norm examples") {
    Vector<double> c(2);
    c << 3, 4;
    CHECK(lp_norm(constant_function<double>(3, c), 1.7, TargetNorm(2)) == doctest::Approx(5.0));
    const auto x1 = walsh_function(4, 1);
    for (double p : {1.0, 1.5, 2.0, 7.0}) CHECK(lp_norm(x1, p, TargetNorm(2)) == doctest::Approx(1.0));
    CubeFunction half(3, 1);
    for (std::uint32_t u = 0; u < 8; ++u) half[u] = (u & 1u) ? 0.0 : 1.0;
    CHECK(lp_norm(half, 2, TargetNorm(2)) == doctest::Approx(1 / std::sqrt(2.0)));
}

TEST_CASE("Orlicz with alpha 0 is the Lp norm") {
    Rng rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_mixed_function(1 + static_cast<int>(rng.below(7)), 2, rng);
        for (double p : {1.0, 2.0, 3.5}) {
            const double lp = lp_norm(f, p, TargetNorm(2));
            const double orl = orlicz_norm(f, OrliczGauge(p, 0.0), TargetNorm(2));
            CHECK(std::abs(orl - lp) <= 1e-9 * std::max(1.0, lp));
        }
    }
}

TEST_CASE("norm of the unit constant") {
    // 1/x* where x log(e + x) = 1, by an independent bisection.
    double lo = 0, hi = 1;
    for (int k = 0; k < 200; ++k) {
        const double mid = (lo + hi) / 2;
        (mid * std::log(std::numbers::e + mid) < 1 ? lo : hi) = mid;
    }
    const double expected = 1 / lo;
    CHECK(expected == doctest::Approx(1.257).epsilon(1e-3));
    const OrliczGauge g(1, 1);
    CHECK(orlicz_norm(constant_function(3, 1.0), g, TargetNorm(2)) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(orlicz_norm_of_one(g) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(orlicz_norm_of_one(OrliczGauge(2, 0)) == doctest::Approx(1.0));
}

TEST_CASE("Orlicz homogeneity, zero, monotonicity and triangle inequality") {
    Rng rng(23);
    const TargetNorm tn(2);
    CHECK(orlicz_norm(CubeFunction(3, 2), OrliczGauge(2, 1), tn) == 0);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const auto f = random_mixed_function(n, 2, rng);
        const auto g = random_mixed_function(n, 2, rng);
        const OrliczGauge gauge(1 + 2 * rng.uniform(), 2 * rng.uniform());
        const double nf = orlicz_norm(f, gauge, tn);
        const double ng = orlicz_norm(g, gauge, tn);
        const double scale = std::max({1.0, nf, ng});
        CHECK(std::abs(orlicz_norm(2.0 * f, gauge, tn) - 2 * nf) <= 1e-9 * scale);
        CHECK(orlicz_norm(f + g, gauge, tn) <= nf + ng + 1e-9 * scale);

        // |f| <= |f| + |g| pointwise for scalar magnitudes.
        const auto a = pointwise_norm(f, tn);
        const auto b = pointwise_norm(g, tn);
        CHECK(orlicz_norm(a, gauge, tn) <= orlicz_norm(a + b, gauge, tn) + 1e-9 * scale);
    }
}

TEST_CASE("gauge validation") {
    CHECK_THROWS_AS(OrliczGauge(0.5, 1), ArgumentError);
    CHECK_THROWS_AS(OrliczGauge(2, -1), ArgumentError);
    CHECK(OrliczGauge::talagrand(3).alpha() == 1.5);
    CHECK(OrliczGauge(2, 1)(0.0) == 0);
}

TEST_CASE("expectation") {
    CHECK(expectation(walsh_function(3, 0b101))[0] == 0);
    CHECK(expectation(constant_function(3, -2.0))[0] == -2.0);
    Rng rng(9);
    const auto f = random_gaussian_function(7, 3, rng);
    CHECK((expectation(f) - walsh_transform(f).row(0).transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(expectation(centered(f)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("weighted lp norm over a generic space") {
    const std::vector<double> v{1, 3};
    const std::vector<double> w{0.75, 0.25};
    CHECK(lp_norm(v, 2, w) == doctest::Approx(std::sqrt(0.75 + 2.25)));
}
