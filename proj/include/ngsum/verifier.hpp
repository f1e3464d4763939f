#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ngsum/bounds.hpp"
#include "ngsum/poly.hpp"
#include "ngsum/staircase.hpp"
#include "ngsum/transforms.hpp"

namespace ngsum {

struct GraphDescription {
    std::string graph6;
    std::vector<int> degrees;  // nonincreasing
    std::string family;        // "K2vN4", "K4+N2", or "unidentified"
    std::vector<int> profile;  // staircase profile when available
    std::string note;
};

struct VerifyReport {
    int n = 0;
    std::string search_space;  // "all_graphs" or "staircase_sym"
    double max_value = 0.0;
    std::vector<GraphDescription> arg_max;
    double rho0_expected = 0.0;
    double gap = 0.0;
    std::vector<GraphDescription> counterexamples;
    long long instances_checked = 0;
    double elapsed = 0.0;
    bool pass = false;
};

// Exhaustive sweep over all 2^C(n,2) labeled graphs; 3 <= n <= 7 unless
// n = 8 is explicitly opted in.
VerifyReport verify_bruteforce(int n, bool allow_n8 = false, int workers = 1);

// Sweep over S*_s(n); for n <= 7 also cross-checks the maximum and the
// maximizer fingerprints against the all-graphs sweep. 3 <= n <= 24.
VerifyReport verify_staircase(int n, int workers = 1);

struct LemmaCheck {
    std::string id;
    std::string description;
    bool pass = true;
    long long instances = 0;
    std::string first_failure;
    std::string note;
};

struct LemmaSuiteReport {
    int n_max = 0;
    std::vector<LemmaCheck> checks;
    bool all_pass = false;
};

// Runs the per-lemma property suites (soundness, pinching, equality iff,
// monotonicity, caps, dichotomy, transform contracts, the quartic-bound
// facts) up to n_max <= 14.
LemmaSuiteReport lemma_suite(int n_max);

struct FinalCaseInstance {
    int k = 0, s = 0, a = 0;
    DenseMatrix m1, m2, m;
    Polynomial h;
    double det_at_4k1 = 0.0;
};

FinalCaseInstance build_final_case(int k, int s, int a);

struct CertificateRow {
    int k = 0;
    long long instances = 0;
    bool pass = true;
    std::string first_failure;
    double min_margin = 0.0;
    long long thin_count = 0;  // margins below 1e-6
};

struct CertificateReport {
    int k_max = 0;
    std::vector<CertificateRow> rows;
    bool all_pass = false;
    long long instances_total = 0;
    long long thin_total = 0;  // margins below 1e-6, for human review
    double elapsed = 0.0;
};

// The 6x6 final-case certificate: for k in [1,k_max], s in [1,3k],
// a in [-k(k-1),0], checks det((4k+1)I-M) > 0, the h sign pattern, the root
// interleaving, and rho_r(M) < 4k+1.
CertificateReport final_case_certificate(int k_max, int workers = 1);

struct RootedBoundReport {
    int k = 0, s = 0, a = 0;
    bool hypotheses_ok = false;
    bool rooted_ok = false;
    bool quotient_ok = false;
    bool chain_ok = false;
    bool sums_ok = false;
    double rho_abar = 0.0, rhor_m3 = 0.0, rhor_m2 = 0.0;
    std::string detail;
    bool pass = false;
};

// Checks the rooted upper bound rho(Abar) <= rho_r(M3) = rho_r(M2) on a
// final-case-regime instance ((n,c,cbar) = (3k+2,2k+1,2k+1), v=k+1, vbar=k).
RootedBoundReport rooted_bound_check(const StaircaseMatrix& a);

// Hypotheses of the rooted comparison bound: for a partition Pi of the
// index set of C and target M, block row sums of C must be dominated by M
// entries (last column exempt) and total row sums by M row sums.
std::optional<std::string> check_rooted_hypotheses(const DenseMatrix& c, const Partition& pi,
                                                   const DenseMatrix& m);

// degree-sequence + rounded-spectrum fingerprint used to identify maximizers
struct Fingerprint {
    std::vector<int> degrees;
    std::vector<long long> spectrum_millionths;
    auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const DenseMatrix& adj);

}  // namespace ngsum
