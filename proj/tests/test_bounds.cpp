#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ngsum/bounds.hpp"

using namespace ngsum;

namespace {

StaircaseMatrix fig1() { return StaircaseMatrix::from_profile({6, 4, 3, 3, 2, 1}); }
StaircaseMatrix fig1_a1() { return StaircaseMatrix::from_profile({6, 4, 3, 3, 3, 0}); }
StaircaseMatrix fig2() {  // row sums (4,3,3,3,4,0)
    return StaircaseMatrix::from_row_sums({4, 3, 3, 3, 4, 0});
}

StaircaseMatrix random_sstar(std::mt19937& rng, int n) {
    for (;;) {
        std::vector<int> mu(n);
        for (int& x : mu) x = static_cast<int>(rng() % (n + 1));
        std::sort(mu.rbegin(), mu.rend());
        const StaircaseMatrix a = StaircaseMatrix::from_profile(mu);
        if (membership(a).in_Sstar) return a;
    }
}

}  // namespace

TEST_CASE("phi_ell fixtures") {
    // regular case: ell = 1 on K4 gives rho exactly
    std::vector<int> k4r{3, 3, 3, 3};
    const StaircaseMatrix k4 = StaircaseMatrix::from_row_sums(k4r);
    CHECK(phi_ell(k4, 1) == doctest::Approx(3.0).epsilon(1e-12));

    // Figure 1 at ell = c+1 = 5: (1+sqrt(29))/2
    CHECK(phi_ell(fig1(), 5) == doctest::Approx((1 + std::sqrt(29.0)) / 2).epsilon(1e-12));

    // K2 v N4 at ell = 3: sorted row sums (5,5,2,2,2,2) hit the equality case,
    // so the bound equals rho = (1+sqrt(33))/2
    const StaircaseMatrix split = split_graph_staircase(6, 2);
    const double expect = (1 + std::sqrt(33.0)) / 2;
    CHECK(phi_ell(split, 3) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(phi_ell(split, 3) + 1e-9 >= sym_eigen_max(split.to_dense()));

    CHECK_THROWS_AS(phi_ell(fig1(), 0), std::invalid_argument);
    CHECK_THROWS_AS(phi_ell(fig1(), 7), std::invalid_argument);
}

TEST_CASE("phi fixtures") {
    for (int t = 2; t <= 5; ++t)
        CHECK(phi(clique_plus_nulls_staircase(6, t)) == doctest::Approx(t - 1.0).epsilon(1e-12));

    CHECK(phi(fig1()) == doctest::Approx((1 + std::sqrt(29.0)) / 2).epsilon(1e-12));

    // Figure 1's A1 has (c,v,s) = (4,3,1): phi strictly larger
    CHECK(phi(fig1_a1()) == doctest::Approx(1 + std::sqrt(5.0)).epsilon(1e-12));
    CHECK(phi(fig1_a1()) > phi(fig1()));

    // phi = phi_{c+1} on symmetric members (sorted row sums)
    for (int n = 4; n <= 8; ++n) {
        for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
            CHECK(std::abs(phi(a) - phi_ell(a, params(a).c + 1)) <= 1e-12);
        });
    }
}

TEST_CASE("phi_via_2x2 agrees with the closed form") {
    CHECK(phi_via_2x2(fig1()) == doctest::Approx(phi(fig1())).epsilon(1e-10));
    CHECK(phi_via_2x2(clique_plus_nulls_staircase(7, 4)) == doctest::Approx(3.0).epsilon(1e-10));

    std::mt19937 rng(555);
    for (int round = 0; round < 500; ++round) {
        const StaircaseMatrix a = random_sstar(rng, 8);
        const ParamTriple p = params(a);
        CHECK(std::abs(phi(a) - phi_via_2x2(a)) <= 1e-10);
        // second realization: rho([[2c-1, s],[1, v]]) - c
        const DenseMatrix m2 = DenseMatrix::from_rows(
            {{2.0 * p.c - 1.0, static_cast<double>(p.s)}, {1.0, static_cast<double>(p.v)}});
        CHECK(std::abs(phi(a) - (spectral_radius_nonneg(m2) - p.c)) <= 1e-9);
    }
}

TEST_CASE("phi handles v = 0 members (second 2x2 eigenvalue has larger modulus)") {
    // mu = (3,2,0): (c,v,s) = (2,0,1); the realization [[c-1,s],[1,v-c]]
    // has eigenvalues (-1 +- sqrt(13))/2, and only the largest REAL one is phi
    const StaircaseMatrix a = StaircaseMatrix::from_profile({3, 2, 0});
    const ParamTriple p = params(a);
    CHECK(p.c == 2);
    CHECK(p.v == 0);
    CHECK(p.s == 1);
    const double want = 0.5 * (-1.0 + std::sqrt(13.0));
    CHECK(phi(a) == doctest::Approx(want).epsilon(1e-12));
    CHECK(phi_via_2x2(a) == doctest::Approx(want).epsilon(1e-10));
    CHECK(p.c - 1 < phi(a));
    CHECK(phi(a) <= p.c);
    CHECK(spectral_radius_nonneg(a.to_dense()) <= phi(a) + 1e-8);
}

TEST_CASE("equality_case witnesses") {
    // (K2 v N3) + N0 at n=5: split witness with t = 3, numeric equality
    const StaircaseMatrix a = split_graph_staircase(5, 2);
    const auto w = equality_case(a);
    REQUIRE(w.has_value());
    CHECK(w->form == EqualityWitness::Form::split_plus_nulls);
    CHECK(w->t == 3);
    CHECK(rho_phi_equal(a));
    CHECK(sym_eigen_max(a.to_dense()) == doctest::Approx(3.0).epsilon(1e-10));

    // K4 + N2: clique witness, rho = phi = 3
    const StaircaseMatrix b = clique_plus_nulls_staircase(6, 4);
    const auto wb = equality_case(b);
    REQUIRE(wb.has_value());
    CHECK(wb->form == EqualityWitness::Form::clique_plus_nulls);
    CHECK(wb->m == 4);
    CHECK(phi(b) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(rho_phi_equal(b));

    // symmetric instance without a witness: strict gap
    const StaircaseMatrix c = StaircaseMatrix::from_profile({5, 3, 2, 1, 1});
    REQUIRE(c.is_symmetric());
    CHECK_FALSE(equality_case(c).has_value());
    CHECK(sym_eigen_max(c.to_dense()) < phi(c) - 1e-8);

    // nonsymmetric input is refused (Figure 2's A is nonsymmetric)
    CHECK_THROWS_AS(equality_case(fig2()), std::invalid_argument);
}

TEST_CASE("ef_terms") {
    ParamSix p{4, 2, 1, 3, 3, 3, 0};
    const auto [e, f] = ef_terms(p);
    CHECK(e == doctest::Approx(29.0));
    CHECK(f == doctest::Approx(16.0));  // (2*3-3-1)^2 + 12

    for (int k = 2; k <= 4; ++k) {
        // the (3k, 2k-1, 2k) shape: E = (3k-3)^2 + 4s, F = (3k-1)^2 + 4sbar
        ParamSix q{2 * k - 1, k, 3 * k - 2, 2 * k, k, k, 0};
        const auto [e1, f1] = ef_terms(q);
        CHECK(e1 == doctest::Approx((3.0 * k - 3) * (3.0 * k - 3) + 4 * (3 * k - 2)));
        CHECK(f1 == doctest::Approx((3.0 * k - 1) * (3.0 * k - 1) + 4 * k));
    }
}

TEST_CASE("g_quartic") {
    // symmetric collapse E = F, v = vbar: largest root is v - 1 + sqrt(E)
    ParamSix p{4, 3, 2, 4, 3, 2, 0};
    const auto [e, f] = ef_terms(p);
    CHECK(e == doctest::Approx(f));
    const Polynomial g = g_quartic(p);
    const double want = p.v - 1.0 + std::sqrt(e);
    CHECK(*largest_real_root(g, 0.0, 50.0) == doctest::Approx(want).epsilon(1e-9));

    // g vanishes at phi(A) + phi(Abar) for arbitrary members
    std::mt19937 rng(321);
    for (int round = 0; round < 200; ++round) {
        const StaircaseMatrix a = random_sstar(rng, 7);
        const ParamSix q = full_params(a);
        const double sum = phi_from_params(q.c, q.v, q.s) +
                           phi_from_params(q.cbar, q.vbar, q.sbar);
        const auto [e2, f2] = ef_terms(q);
        const double u = 2.0 * sum - q.v - q.vbar + 2.0;
        const double scale = u * u * u * u + 2.0 * (e2 + f2) * u * u + (e2 - f2) * (e2 - f2);
        CHECK(std::abs(g_quartic(q).eval(sum)) <= 1e-6 * std::max(1.0, scale));
    }

    // extremal (n,c,cbar) = (3k,2k-1,2k) fixture at k=2: g(rho0) = 0;
    // the (3k+1, 2k, 2k+1) fixture stays strictly positive
    const ParamSix case1{3, 2, 4, 4, 2, 2, -1};
    CHECK(std::abs(g_quartic(case1).eval(rho0(6).rho0)) <= 1e-6 * 1e4);
    const ParamSix case4{4, 2, 1, 5, 2, 3, -1};  // n = 7 = 3k+1, (c,cbar) = (2k,2k+1), k=2
    CHECK(g_quartic(case4).eval(rho0(7).rho0) > 1e-6);
}

TEST_CASE("rho0 breakdown") {
    const Rho0Breakdown b6 = rho0(6);
    CHECK(b6.rho0 == doctest::Approx((7 + std::sqrt(33.0)) / 2).epsilon(1e-12));
    CHECK(b6.k == 2);
    CHECK(b6.k_n == 1);
    CHECK(b6.best_q == std::vector<int>{2});

    const Rho0Breakdown b8 = rho0(8);
    CHECK(b8.rho0 == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(b8.k_n == 0);
    CHECK(b8.best_q == std::vector<int>{2, 3});

    const Rho0Breakdown b7 = rho0(7);
    CHECK(b7.rho0 == doctest::Approx((9 + std::sqrt(41.0)) / 2).epsilon(1e-12));
    CHECK(b7.u_n > 4.0 / 117.0);
    CHECK(b7.u_n < 2.0 / 57.0);

    CHECK_THROWS_AS(rho0(2), std::invalid_argument);

    for (int n = 3; n <= 60; ++n) {
        const Rho0Breakdown b = rho0(n);
        // single-formula route and the largest root of f agree
        CHECK(std::abs(b.rho0 - rho0_single_formula(n)) <= 1e-10);
        CHECK(std::abs(b.rho0 - *largest_real_root(b.f, 0.0, 2.0 * n)) <= 1e-10);
        // floor bound (4n-5)/3 and the residual u_n
        CHECK(b.rho0 + 1e-12 >= (4.0 * n - 5.0) / 3.0);
        CHECK(std::abs(b.u_n - (b.rho0 - (4.0 * n - 5.0) / 3.0)) <= 1e-9);
        // best_q is floor(n/3), plus ceil(n/3) exactly when n = 2 mod 3
        std::vector<int> want{n / 3};
        if (n % 3 == 2) want.push_back(n / 3 + 1);
        CHECK(b.best_q == want);
    }
}

TEST_CASE("split_rho") {
    const auto [r62, rb62] = split_rho(6, 2);
    CHECK(r62 == doctest::Approx((1 + std::sqrt(33.0)) / 2).epsilon(1e-12));
    CHECK(rb62 == doctest::Approx(3.0));

    for (int n : {4, 7, 11}) {
        const auto [st, sb] = split_rho(n, 1);
        CHECK(st == doctest::Approx(std::sqrt(n - 1.0)).epsilon(1e-12));
        CHECK(sb == doctest::Approx(n - 2.0));
    }

    const auto [r83, rb83] = split_rho(8, 3);
    CHECK(r83 + rb83 == doctest::Approx(9.0).epsilon(1e-12));

    CHECK_THROWS_AS(split_rho(6, 0), std::invalid_argument);
    CHECK_THROWS_AS(split_rho(6, 5), std::invalid_argument);

    // closed form vs eigensolver
    for (int n = 3; n <= 14; ++n)
        for (int q = 1; q <= n - 2; ++q) {
            const StaircaseMatrix a = split_graph_staircase(n, q);
            const auto [r, rb] = split_rho(n, q);
            CHECK(std::abs(r - sym_eigen_max(a.to_dense())) <= 1e-8);
            CHECK(std::abs(rb - sym_eigen_max(reflect_complement(a).to_dense())) <= 1e-8);
        }
}

TEST_CASE("s_sum_bound") {
    // K6 + N2 at n=8: c+cbar = 9 >= 8, bound 11 attained (vbar = n-c-1 = 2)
    const ParamSix p = full_params(clique_plus_nulls_staircase(8, 6));
    CHECK(p.vbar == 8 - p.c - 1);
    const auto [bound, tight] = s_sum_bound(p, 8);
    CHECK(bound == doctest::Approx(11.0));
    CHECK(tight);

    ParamSix small{2, 1, 1, 2, 1, 1, 0};
    CHECK_THROWS_AS(s_sum_bound(small, 8), std::invalid_argument);

    int checked = 0;
    for_each_sstar_sym(10, [&](const StaircaseMatrix& a) {
        const ParamSix q = full_params(a);
        if (q.c + q.cbar < 10) return;
        ++checked;
        const auto [b, t] = s_sum_bound(q, 10);
        CHECK(q.s + q.sbar <= b + 1e-9);
        if (q.vbar == 10 - q.c - 1) CHECK(t);
    });
    CHECK(checked > 50);
}

TEST_CASE("e_plus_f_closed branch values") {
    // (n,c,cbar) = (3k, 2k-1, 2k) at k=2: 18k^2 - 8k + 3/2 - T/2 with T = -1
    CHECK(e_plus_f_closed(6, 3, 4) == doctest::Approx(18 * 4 - 16 + 1.5 + 0.5));
    // (n,c,cbar) = (3k+2, 2k, 2k+2) at k=2: 18k^2 + 18k + 5 - T/2 with T = 0
    CHECK(e_plus_f_closed(8, 4, 6) == doctest::Approx(18 * 4 + 36 + 5.0));
    // symmetric instance c = cbar has T = 0: value depends only on n, c+cbar
    CHECK(e_plus_f_closed(9, 5, 5) ==
          doctest::Approx(1.5 * 100 - 17 * 10 + 2 * 81 - 18 + 1));
}

TEST_CASE("make_bound_report invariants") {
    const BoundReport r = make_bound_report(split_graph_staircase(6, 2));
    CHECK(r.rho == doctest::Approx((1 + std::sqrt(33.0)) / 2).epsilon(1e-10));
    CHECK(r.rho_bar == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(r.equality_case.has_value());
    CHECK(r.params.c == 4);

    for (int n = 4; n <= 8; ++n) {
        for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
            const BoundReport b = make_bound_report(a);
            CHECK(b.rho <= b.phi + 1e-8);
            CHECK(b.rho <= *std::min_element(b.phi_ell.begin(), b.phi_ell.end()) + 1e-8);
            CHECK(b.params.c - 1 < b.phi);
            CHECK(b.phi <= b.params.c + 1e-12);
        });
    }
}
