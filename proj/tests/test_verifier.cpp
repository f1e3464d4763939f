#include <doctest.h>

#include <cmath>
#include <set>

#include "ngsum/json_io.hpp"
#include "ngsum/verifier.hpp"

using namespace ngsum;

TEST_CASE("verify_bruteforce n=3") {
    const VerifyReport r = verify_bruteforce(3);
    CHECK(r.pass);
    CHECK(r.max_value == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-10));
    CHECK(std::abs(r.gap) <= 1e-9);
    CHECK(r.instances_checked == 8);
    REQUIRE(r.arg_max.size() == 2);
    std::set<std::string> fams;
    for (const auto& d : r.arg_max) fams.insert(d.family);
    CHECK(fams == std::set<std::string>{"K1vN2", "K2+N1"});
    CHECK(r.counterexamples.empty());
}

TEST_CASE("verify_bruteforce n=4 and n=5") {
    const VerifyReport r4 = verify_bruteforce(4);
    CHECK(r4.pass);
    CHECK(r4.max_value == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-10));
    CHECK(r4.arg_max.size() == 2);

    // n = 2 mod 3: both families appear
    const VerifyReport r5 = verify_bruteforce(5);
    CHECK(r5.pass);
    CHECK(r5.max_value == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(r5.arg_max.size() == 4);
}

TEST_CASE("verify_bruteforce order caps") {
    CHECK_THROWS_AS(verify_bruteforce(2), std::invalid_argument);
    CHECK_THROWS_AS(verify_bruteforce(8), std::invalid_argument);  // needs the opt-in
}

TEST_CASE("verify_staircase matches the closed form and the brute force") {
    const VerifyReport r9 = verify_staircase(9);
    CHECK(r9.pass);
    CHECK(r9.max_value == doctest::Approx(rho0(9).rho0).epsilon(1e-10));
    CHECK(r9.instances_checked == (1 << 8) - 2);
    CHECK(r9.arg_max.size() == 2);

    const VerifyReport r8 = verify_staircase(8);
    CHECK(r8.pass);
    CHECK(r8.arg_max.size() == 4);  // two families at n = 2 mod 3
    CHECK(std::abs(r8.gap) <= 1e-9);

    // n <= 7 runs the all-graphs cross-check internally
    const VerifyReport r6 = verify_staircase(6);
    CHECK(r6.pass);
    CHECK(r6.max_value == doctest::Approx((7.0 + std::sqrt(33.0)) / 2.0).epsilon(1e-10));
}

TEST_CASE("verify_bruteforce parallel equals serial") {
    const VerifyReport serial = verify_bruteforce(5, false, 1);
    const VerifyReport parallel = verify_bruteforce(5, false, 3);
    json a = to_json(serial), b = to_json(parallel);
    a.erase("elapsed");
    b.erase("elapsed");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("verify_staircase parallel equals serial") {
    const VerifyReport serial = verify_staircase(10, 1);
    const VerifyReport parallel = verify_staircase(10, 4);
    CHECK(serial.max_value == parallel.max_value);
    CHECK(serial.arg_max.size() == parallel.arg_max.size());
    json a = to_json(serial), b = to_json(parallel);
    a.erase("elapsed");
    b.erase("elapsed");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("verify reports are deterministic") {
    json a = to_json(verify_staircase(6));
    json b = to_json(verify_staircase(6));
    a.erase("elapsed");
    b.erase("elapsed");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("lemma_suite(10) passes everything") {
    const LemmaSuiteReport rep = lemma_suite(10);
    for (const auto& c : rep.checks) {
        INFO(c.id, ": ", c.first_failure);
        CHECK(c.pass);
        CHECK(c.instances > 0);
    }
    CHECK(rep.all_pass);
    CHECK_THROWS_AS(lemma_suite(2), std::invalid_argument);
    CHECK_THROWS_AS(lemma_suite(15), std::invalid_argument);
}

TEST_CASE("build_final_case k=1, s=1, a=0 matches the printed block form") {
    const FinalCaseInstance inst = build_final_case(1, 1, 0);
    const DenseMatrix want = DenseMatrix::from_rows({{2, 1, 3, 1, 0, 0},
                                                     {2, 3, 0, 0, 1, 0},
                                                     {1, 0, 2, 0, 0, 1},
                                                     {1, 0, 0, -1, 1, 3},
                                                     {0, 1, 0, 2, 0, 0},
                                                     {0, 0, 1, 1, 0, -1}});
    CHECK(inst.m == want);
    CHECK(inst.det_at_4k1 > 0.0);
    CHECK_THROWS_AS(build_final_case(1, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_final_case(2, 1, -3), std::invalid_argument);
    CHECK_THROWS_AS(build_final_case(2, 1, 1), std::invalid_argument);
}

TEST_CASE("final_case_certificate small sweep") {
    const CertificateReport rep = final_case_certificate(5);
    CHECK(rep.all_pass);
    REQUIRE(rep.rows.size() == 5);
    const long long want[5] = {3, 18, 63, 156, 315};  // 3k(k(k-1)+1)
    for (int k = 1; k <= 5; ++k) {
        CHECK(rep.rows[k - 1].instances == want[k - 1]);
        CHECK(rep.rows[k - 1].pass);
        CHECK(rep.rows[k - 1].min_margin > 1e-9);
    }
    CHECK(rep.instances_total == 3 + 18 + 63 + 156 + 315);
    CHECK_THROWS_AS(final_case_certificate(0), std::invalid_argument);
}

TEST_CASE("final_case_certificate parallel equals serial") {
    const CertificateReport a = final_case_certificate(4, 1);
    const CertificateReport b = final_case_certificate(4, 3);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].instances == b.rows[i].instances);
        CHECK(a.rows[i].min_margin == b.rows[i].min_margin);
    }
}

TEST_CASE("rooted_bound_check at k=1 (n=5 diamond plus isolated vertex)") {
    const StaircaseMatrix a = StaircaseMatrix::from_profile({4, 4, 2, 2, 0});
    const RootedBoundReport rep = rooted_bound_check(a);
    CHECK(rep.pass);
    CHECK(rep.k == 1);
    CHECK(rep.a == 0);  // the a-range degenerates to [0,0] at k=1
    CHECK(rep.hypotheses_ok);
    CHECK(rep.rooted_ok);
    CHECK(rep.quotient_ok);
    CHECK(rep.sums_ok);
    CHECK(rep.rho_abar <= rep.rhor_m3 + 1e-8);
    CHECK(rep.rhor_m3 == doctest::Approx(rep.rhor_m2).epsilon(1e-9));
}

TEST_CASE("rooted_bound_check across every regime instance at n=5 and n=8") {
    int found = 0;
    for (int n : {5, 8}) {
        const int k = n / 3;
        for_each_sstar_sym(n, [&](const StaircaseMatrix& a) {
            const ParamSix p = full_params(a);
            if (p.c != 2 * k + 1 || p.cbar != 2 * k + 1 || p.v != k + 1 || p.vbar != k) return;
            ++found;
            const RootedBoundReport rep = rooted_bound_check(a);
            INFO("n=", n, " detail=", rep.detail);
            CHECK(rep.pass);
        });
    }
    CHECK(found >= 2);
}

TEST_CASE("rooted_bound_check rejects other shapes") {
    CHECK_THROWS_AS(rooted_bound_check(split_graph_staircase(6, 2)), std::invalid_argument);
    CHECK_THROWS_AS(rooted_bound_check(split_graph_staircase(8, 2)), std::invalid_argument);
}

TEST_CASE("check_rooted_hypotheses flags violations") {
    // C = K3 against a 2x2 target that underestimates the block sums
    DenseMatrix c(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) c.at(i, j) = 1.0;
    Partition pi;
    pi.blocks = {{0, 1}, {2}};
    const DenseMatrix m = DenseMatrix::from_rows({{0.5, 9}, {0.5, 9}});
    const auto fail = check_rooted_hypotheses(c, pi, m);
    REQUIRE(fail.has_value());
    CHECK(fail->find("block") != std::string::npos);
}

TEST_CASE("fingerprints separate the families") {
    const Fingerprint split = fingerprint(split_graph_staircase(6, 2).to_dense());
    const Fingerprint clique = fingerprint(clique_plus_nulls_staircase(6, 4).to_dense());
    CHECK(split != clique);
    CHECK(split == fingerprint(split_graph_staircase(6, 2).to_dense()));
}
