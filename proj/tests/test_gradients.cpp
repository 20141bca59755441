#include "doctest.h"

#include <cmath>

#include "cubelsi/gradients.hpp"
#include "cubelsi/random_functions.hpp"

using namespace cubelsi;

namespace {

CubeFunction coordinates_as_vector(int n) {
    return CubeFunction::generate(n, n, [n](CubePoint x) {
        Vector<double> v(n);
        for (int i = 1; i <= n; ++i) v[i - 1] = x.coordinate(i);
        return v;
    });
}

}  // namespace

TEST_CASE("scalar gradient norm") {
    for (double p : {1.0, 2.0, 4.0}) CHECK(gradient_lp(walsh_function(3, 1), p) == doctest::Approx(1));
    CHECK(gradient_lp(constant_function(3, 2.0), 2) == 0);
    CHECK(gradient_lp(walsh_function(2, 1) + walsh_function(2, 2), 2) == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(gradient_lp(coordinates_as_vector(2), 2), ArgumentError);
}

TEST_CASE("Rademacher gradient") {
    CHECK(rademacher_gradient(constant_function(4, 1.0), 2, TargetNorm(2)).value == 0);
    CHECK(rademacher_gradient(coordinates_as_vector(2), 2, TargetNorm(2)).value == doctest::Approx(std::sqrt(2.0)));

    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(7));
        const auto f = random_gaussian_function(n, 3, rng);
        const double g2 = rademacher_gradient(f, 2, TargetNorm(2)).value;
        double sum = 0;
        for (int i = 1; i <= n; ++i) sum += std::pow(lp_norm(partial_derivative(f, i), 2, TargetNorm(2)), 2);
        CHECK(std::abs(g2 * g2 - sum) <= 1e-10 * std::max(1.0, sum));
        const double gp = rademacher_gradient(f, 3, TargetNorm::sup()).value;
        CHECK(rademacher_gradient(-2.5 * f, 3, TargetNorm::sup()).value == doctest::Approx(2.5 * gp).epsilon(1e-10));
    }
    CHECK_THROWS_AS(rademacher_gradient(CubeFunction(15, 1), 2, TargetNorm(2)), CapabilityError);
}

TEST_CASE("Monte Carlo gradient agrees with exact") {
    Rng rng(3);
    const auto f = random_gaussian_function(8, 2, rng);
    const double exact = rademacher_gradient(f, 1.5, TargetNorm(2)).value;
    GradientTermConfig mc{GradientMode::MonteCarlo, 20000, 4};
    const auto est = rademacher_gradient(f, 1.5, TargetNorm(2), mc);
    CHECK(!est.exact);
    CHECK(est.std_error > 0);
    CHECK(std::abs(est.value - exact) <= 3 * est.std_error);
}

TEST_CASE("biased gradient") {
    CHECK_THROWS_AS(rademacher_gradient_biased(walsh_function(2, 1), 1, TargetNorm(2), 0.0), ArgumentError);
    CHECK(rademacher_gradient_biased(constant_function(3, 1.0), 1, TargetNorm(2), 0.5).value == 0);
    // f = x_1, p = 1: E|delta_1(t)| from the two-point law.
    const double t = 0.4;
    const auto law = biased_delta_law(t);
    const double expected = law.plus_prob * std::abs(law.plus_value) + (1 - law.plus_prob) * std::abs(law.minus_value);
    CHECK(rademacher_gradient_biased(walsh_function(3, 1), 1, TargetNorm(2), t).value == doctest::Approx(expected));

    Rng rng(6);
    const auto f = random_gaussian_function(5, 2, rng);
    const double g = rademacher_gradient(f, 1, TargetNorm(2)).value;
    CHECK(rademacher_gradient_biased(f, 1, TargetNorm(2), 30.0).value == doctest::Approx(g).epsilon(1e-9));
    GradientTermConfig mc{GradientMode::MonteCarlo, 20000, 9};
    const auto est = rademacher_gradient_biased(f, 1, TargetNorm(2), 30.0, mc);
    CHECK(std::abs(est.value - g) <= 3 * est.std_error);
}

TEST_CASE("semigroup gradient integral") {
    CHECK(semigroup_gradient_integral(constant_function(3, 1.0), TargetNorm(2)).value == 0);
    // f = x_1: integrand is E|delta_1(t)| = 2 sqrt(p(1-p)) with p = (1+e^{-t})/2,
    // i.e. sqrt(1 - e^{-2t}); times 1/sqrt(e^{2t}-1) gives e^{-t}, integral 1.
    const auto r = semigroup_gradient_integral(walsh_function(3, 1), TargetNorm(2));
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(r.tail_bound < 1e-12);

    Rng rng(14);
    for (int trial = 0; trial < 4; ++trial) {
        const auto f = random_gaussian_function(2 + static_cast<int>(rng.below(5)), 2, rng);
        QuadratureConfig coarse;
        QuadratureConfig fine;
        fine.near_panels *= 2;
        fine.far_panels *= 2;
        const double a = semigroup_gradient_integral(f, TargetNorm(2), coarse).value;
        const double b = semigroup_gradient_integral(f, TargetNorm(2), fine).value;
        CHECK(std::abs(a - b) < 0.01 * b);
    }
}

TEST_CASE("asymmetric gradient, positive part and median") {
    const auto x1 = walsh_function(2, 1);
    const auto m = asymmetric_gradient(x1);
    for (std::uint32_t u = 0; u < 4; ++u) CHECK(m[u] == (coordinate(u, 1) == 1 ? 1.0 : 0.0));
    CHECK(asymmetric_gradient(constant_function(3, 2.0)).values().maxCoeff() == 0);
    const auto pp = positive_part(x1);
    for (std::uint32_t u = 0; u < 4; ++u) CHECK(pp[u] == (coordinate(u, 1) == 1 ? 1.0 : 0.0));

    CHECK(lower_median(constant_function(3, 1.5)) == 1.5);
    CubeFunction two(1, 1);
    two[1] = 2;
    CHECK(lower_median(two) == 0);

    Rng rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const auto h = random_mixed_function(n, 1, rng);
        const auto mh = asymmetric_gradient(h);
        const auto mplus = asymmetric_gradient(positive_part(h));
        CubeTable<double> full = CubeTable<double>::Zero(h.size(), 1);
        for (int i = 1; i <= n; ++i) full += partial_derivative(h, i).values().cwiseAbs2();
        for (std::uint32_t u = 0; u < h.size(); ++u) {
            CHECK(mh[u] <= std::sqrt(full(u, 0)) * (1 + 1e-15));
            CHECK(mplus[u] <= mh[u] * (1 + 1e-12) + 1e-300);
        }
        // Shift invariance holds exactly for integer-valued tables.
        CubeFunction k(n, 1);
        for (std::uint32_t u = 0; u < k.size(); ++u) k[u] = std::round(10 * h[u]);
        CHECK((asymmetric_gradient(k + constant_function(n, 7.0)).values() - asymmetric_gradient(k).values())
                  .cwiseAbs()
                  .maxCoeff() == 0);

        const auto a = pointwise_norm(h, TargetNorm(2));
        CHECK(lower_median(a) <= 2 * lp_norm(a, 1, TargetNorm(2)) + 1e-12);
    }
}

TEST_CASE("pointwise control of the asymmetric gradient of the norm") {
    const auto zero = m_control_rhs_all(constant_function(3, 1.0), TargetNorm(2));
    for (double v : zero) CHECK(v == 0);

    Rng rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(8));
        const int d = 1 + static_cast<int>(rng.below(4));
        const auto f = random_mixed_function(n, d, rng);
        // Euclidean closed form.
        const auto rhs2 = m_control_rhs_all(f, TargetNorm(2));
        for (std::uint32_t u = 0; u < f.size(); ++u) {
            double s = 0;
            for (int i = 1; i <= n; ++i) s += partial_derivative(f, i).row(u).squaredNorm();
            CHECK(rhs2[u] == doctest::Approx(std::sqrt(s)).epsilon(1e-12));
        }
        for (TargetNorm tn : {TargetNorm(1), TargetNorm(2), TargetNorm::sup()}) {
            const auto lhs = asymmetric_gradient(pointwise_norm(f, tn));
            const auto rhs = m_control_rhs_all(f, tn);
            for (std::uint32_t u = 0; u < f.size(); ++u) CHECK(lhs[u] <= rhs[u] * (1 + 1e-12) + 1e-300);
            CHECK(m_control_rhs(f, CubePoint{0, n}, tn) == rhs[0]);
        }
    }
}

TEST_CASE("sum of partial norms") {
    const auto f = coordinates_as_vector(3);
    CHECK(sum_partial_lp_power(f, 1.5, TargetNorm(2)) == doctest::Approx(3));
}
