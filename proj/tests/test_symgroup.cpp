#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "cubelsi/random_functions.hpp"
#include "cubelsi/symgroup.hpp"

using namespace cubelsi;

TEST_CASE("Lehmer ranks") {
    Permutation id(5);
    std::iota(id.begin(), id.end(), 0);
    CHECK(perm_rank(id) == 0);
    for (std::uint64_t r = 0; r < 24; ++r) CHECK(perm_rank(perm_unrank(4, r)) == r);
    std::set<Permutation> seen;
    for (std::uint64_t r = 0; r < 6; ++r) seen.insert(perm_unrank(3, r));
    CHECK(seen.size() == 6);
    Permutation p{0, 1, 2};
    do {
        CHECK(perm_unrank(3, perm_rank(p)) == p);
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK_THROWS_AS(perm_rank(std::vector<int>{0, 0, 1}), ArgumentError);
    CHECK_THROWS_AS(perm_unrank(3, 6), ArgumentError);
}

TEST_CASE("sign and composition") {
    CHECK(perm_sign(std::vector<int>{0, 1, 2}) == 1);
    CHECK(perm_sign(std::vector<int>{1, 0, 2}) == -1);
    CHECK(perm_sign(std::vector<int>{1, 2, 0}) == 1);
    const Permutation a{1, 2, 0}, b{1, 0, 2};
    CHECK(compose(a, b) == Permutation{2, 1, 0});
    for (std::uint64_t r = 0; r < 24; ++r)
        for (std::uint64_t s = 0; s < 24; ++s) {
            const auto x = perm_unrank(4, r), y = perm_unrank(4, s);
            CHECK(perm_sign(compose(x, y)) == perm_sign(x) * perm_sign(y));
        }
}

TEST_CASE("function tables") {
    CHECK(PermFunction(4, 2).size() == 24);
    CHECK_THROWS_AS(PermFunction(2, 1), ArgumentError);
    CHECK_THROWS_AS(PermFunction(9, 1), ArgumentError);
    CHECK_THROWS_AS(PermFunction(3, CubeTable<double>::Zero(5, 1)), ArgumentError);
}

TEST_CASE("transposition table uses left composition") {
    const auto table = transposition_table(4);
    CHECK(table.size() == 6);
    const Permutation pi = perm_unrank(4, 17);
    const Permutation tau{1, 0, 2, 3};  // the first transposition (0 1)
    CHECK(table[0][17] == perm_rank(compose(tau, pi)));
}

TEST_CASE("Dirichlet form") {
    const TargetNorm tn(2);
    CHECK(transposition_dirichlet(PermFunction(5, 2), tn) == 0);
    CHECK(transposition_dirichlet(sign_function(3), tn) == doctest::Approx(12));
    Rng rng(3);
    auto f = random_perm_function(5, 2, rng);
    const double before = transposition_dirichlet(f, tn);
    f.values().rowwise() += Eigen::RowVector2d(4, -1);
    CHECK(transposition_dirichlet(f, tn) == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("Dirichlet form is invariant under right translation") {
    Rng rng(12);
    for (int n = 3; n <= 5; ++n) {
        PermFunction f(n, 1);
        for (std::uint64_t r = 0; r < f.size(); ++r) f[r] = static_cast<double>(rng.below(9));
        const double base = transposition_dirichlet(f, TargetNorm(2));
        for (std::uint64_t gr = 0; gr < factorial(n); ++gr) {
            const auto g = perm_unrank(n, gr);
            PermFunction h(n, 1);
            for (std::uint64_t r = 0; r < f.size(); ++r) h[r] = f[perm_rank(compose(perm_unrank(n, r), g))];
            CHECK(transposition_dirichlet(h, TargetNorm(2)) == base);
        }
    }
}

TEST_CASE("symmetric-group inequalities") {
    const auto c = evaluate_dsc(PermFunction::generate(4, 1, [](const Permutation&) { return Eigen::VectorXd::Constant(1, 2.0); }));
    CHECK(c.lhs == doctest::Approx(0).epsilon(1e-12));
    CHECK(c.ratio == 0);
    const auto s = evaluate_dsc(sign_function(3));
    CHECK(s.lhs == doctest::Approx(0).epsilon(1e-12));
    CHECK(s.rhs_unit == doctest::Approx(3 * std::log(3.0) * 12));
    CHECK_THROWS_AS(evaluate_dsc(PermFunction(3, 2)), ArgumentError);

    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(4));
        const auto f = random_perm_function(n, 1, rng);
        CHECK(evaluate_dsc(f).ratio <= 1 + 1e-9);
        const auto g = random_perm_function(n, 3, rng);
        const double r = evaluate_kn(g, TargetNorm(2)).ratio;
        CHECK(r <= 1 + 1e-9);
        CHECK(evaluate_kn(PermFunction(n, CubeTable<double>(-3.0 * g.values())), TargetNorm(2)).ratio ==
              doctest::Approx(r).epsilon(1e-12));
        CHECK(evaluate_sym_lsi(g, TargetNorm(2)).ratio >= 0);
    }
    CHECK(evaluate_kn(PermFunction(4, 2), TargetNorm(2)).ratio == 0);
    CHECK(evaluate_sym_lsi(PermFunction(4, 2), TargetNorm(2)).ratio == 0);
}

TEST_CASE("kernel matches the Dirichlet form") {
    Rng rng(8);
    const auto f = random_perm_function(4, 2, rng);
    const auto k = symmetric_group_kernel(4, 0.5);
    const auto rep = evaluate_kernel_form(k, f.values(), TargetNorm(2), 2, 1);
    CHECK(rep.vector_rhs == doctest::Approx(0.5 * transposition_dirichlet(f, TargetNorm(2))).epsilon(1e-12));
}
