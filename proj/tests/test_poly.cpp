#include <doctest.h>

#include <cmath>
#include <random>

#include "ngsum/poly.hpp"
#include "ngsum/verifier.hpp"

using namespace ngsum;

TEST_CASE("char_poly small fixtures") {
    const Polynomial p1 = char_poly(DenseMatrix::identity(2));
    REQUIRE(p1.c.size() == 3);
    CHECK(p1.c[0] == doctest::Approx(1.0));
    CHECK(p1.c[1] == doctest::Approx(-2.0));
    CHECK(p1.c[2] == doctest::Approx(1.0));

    const Polynomial p2 = char_poly(DenseMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(p2.c[0] == doctest::Approx(-1.0));
    CHECK(p2.c[1] == doctest::Approx(0.0));
    CHECK(p2.c[2] == doctest::Approx(1.0));
}

TEST_CASE("char_poly of M2 matches the closed cubic") {
    // h(x) = x^3 - (2k-1)x^2 + (-5k-1+s+a)x - k(2a+s-3k-1)
    std::mt19937 rng(99);
    for (int round = 0; round < 50; ++round) {
        const int k = 1 + static_cast<int>(rng() % 6);
        const int s = 1 + static_cast<int>(rng() % (3 * k));
        const int a = -static_cast<int>(rng() % (k * (k - 1) + 1));
        const FinalCaseInstance inst = build_final_case(k, s, a);
        REQUIRE(inst.h.c.size() == 4);
        CHECK(std::abs(inst.h.c[3] - 1.0) <= 1e-9);
        CHECK(std::abs(inst.h.c[2] - (-(2.0 * k - 1.0))) <= 1e-9);
        CHECK(std::abs(inst.h.c[1] - (-5.0 * k - 1.0 + s + a)) <= 1e-9);
        CHECK(std::abs(inst.h.c[0] - (-k * (2.0 * a + s - 3.0 * k - 1.0))) <= 1e-9);
    }
}

TEST_CASE("char_poly order cap") {
    CHECK_THROWS_AS(char_poly(DenseMatrix(17)), std::invalid_argument);
}

TEST_CASE("largest_real_root") {
    CHECK(*largest_real_root(Polynomial{{-1, 0, 1}}, -2, 2) == doctest::Approx(1.0).epsilon(1e-10));

    // f(x) = x^2 - 7x + 4 (the n = 3k branch at k = 2); largest root (7+sqrt(33))/2
    const double expect = (7.0 + std::sqrt(33.0)) / 2.0;
    CHECK(*largest_real_root(Polynomial{{4, -7, 1}}, 0, 12) ==
          doctest::Approx(expect).epsilon(1e-10));

    CHECK_FALSE(largest_real_root(Polynomial{{1, 0, 1}}, -2, 2).has_value());

    // repeated root below a simple root: (x-1)(x+2)^2 = x^3 + 3x^2 - 4
    const Polynomial p{{-4, 0, 3, 1}};
    CHECK(*largest_real_root(p, -5, 5) == doctest::Approx(1.0).epsilon(1e-9));

    // root exactly at the upper endpoint
    CHECK(*largest_real_root(Polynomial{{-4, 0, 1}}, -2, 2) == doctest::Approx(2.0).epsilon(1e-9));

    CHECK_THROWS_AS(largest_real_root(Polynomial{{1, 1}}, 2, -2), std::invalid_argument);
}

TEST_CASE("all_real_roots matches eigen-decomposition clusters (n <= 6)") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> val(-1.5, 1.5);
    for (int round = 0; round < 60; ++round) {
        const int n = 2 + static_cast<int>(rng() % 5);
        DenseMatrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) m.at(i, j) = m.at(j, i) = val(rng);
        const auto evals = sym_eigen_all(m);
        const double bound = m.inf_norm() + 1.0;
        const auto roots = all_real_roots(char_poly(m), -bound, bound);
        // every eigenvalue is near some isolated root and vice versa
        for (double ev : evals) {
            double dist = 1e300;
            for (double r : roots) dist = std::min(dist, std::abs(ev - r));
            CHECK(dist <= 1e-7);
        }
        for (double r : roots) {
            double dist = 1e300;
            for (double ev : evals) dist = std::min(dist, std::abs(ev - r));
            CHECK(dist <= 1e-7);
        }
    }
}

TEST_CASE("count_real_roots") {
    CHECK(count_real_roots(Polynomial{{-1, 0, 1}}, -2, 2) == 2);
    CHECK(count_real_roots(Polynomial{{-1, 0, 1}}, 0, 2) == 1);
    CHECK(count_real_roots(Polynomial{{1, 0, 1}}, -9, 9) == 0);
}

TEST_CASE("rho_r") {
    DenseMatrix d(3);
    d.at(0, 0) = 1;
    d.at(1, 1) = 5;
    d.at(2, 2) = -2;
    CHECK(rho_r(d) == doctest::Approx(5.0).epsilon(1e-10));

    // the 2x2 realization of phi at (c,v,s) = (4,2,1)
    CHECK(rho_r(DenseMatrix::from_rows({{3, 1}, {1, -2}})) ==
          doctest::Approx((1.0 + std::sqrt(29.0)) / 2.0).epsilon(1e-10));

    // rotation matrix: eigenvalues are +-i
    CHECK_THROWS_AS(rho_r(DenseMatrix::from_rows({{0, -1}, {1, 0}})), std::runtime_error);
}

TEST_CASE("rho_r of the Kronecker sum is the sum of the parts (k=1 instance)") {
    const FinalCaseInstance inst = build_final_case(1, 1, 0);
    const double left = rho_r(inst.m);
    const double right = rho_r(inst.m1) + rho_r(inst.m2);
    CHECK(left == doctest::Approx(right).epsilon(1e-9));

    // the full 6-point spectrum is the pairwise-sum set
    const double b1 = inst.m1.inf_norm() + 1, b2 = inst.m2.inf_norm() + 1;
    const auto alphas = all_real_roots(char_poly(inst.m1), -b1, b1);
    const auto betas = all_real_roots(inst.h, -b2, b2);
    REQUIRE(alphas.size() == 2);
    REQUIRE(betas.size() == 3);
    std::vector<double> sums;
    for (double x : alphas)
        for (double y : betas) sums.push_back(x + y);
    std::sort(sums.begin(), sums.end());
    const auto roots = all_real_roots(char_poly(inst.m), -(b1 + b2), b1 + b2);
    REQUIRE(roots.size() == 6);
    for (size_t i = 0; i < 6; ++i) CHECK(std::abs(roots[i] - sums[i]) <= 1e-7);
}

TEST_CASE("polynomial arithmetic") {
    const Polynomial p{{1, 1}};       // 1 + x
    const Polynomial q{{-1, 1}};      // -1 + x
    const Polynomial prod = p * q;    // x^2 - 1
    CHECK(prod.c[0] == doctest::Approx(-1.0));
    CHECK(prod.c[1] == doctest::Approx(0.0));
    CHECK(prod.c[2] == doctest::Approx(1.0));
    CHECK(prod.eval(3.0) == doctest::Approx(8.0));
    CHECK(prod.derivative().eval(3.0) == doctest::Approx(6.0));
    CHECK((p + q).eval(5.0) == doctest::Approx(10.0));
    CHECK((p - q).eval(5.0) == doctest::Approx(2.0));
    CHECK(Polynomial{{0.0, 0.0}}.degree() == -1);
}
