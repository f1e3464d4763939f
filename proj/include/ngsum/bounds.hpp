#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ngsum/poly.hpp"
#include "ngsum/staircase.hpp"

namespace ngsum {

// Structural witness for rho(A) = phi(A) on symmetric members:
// either A = A(K_m + N_{n-m}) with m = r_1 + 1, or
// A = A((K_{t-1} v N_{m+1-t}) + N_{n-m}) for some 2 <= t <= c+1.
struct EqualityWitness {
    enum class Form { clique_plus_nulls, split_plus_nulls };
    Form form;
    int m = 0;  // r_1 + 1, order of the nontrivial component
    int t = 0;  // meaningful for split_plus_nulls
    bool operator==(const EqualityWitness&) const = default;
};

struct BoundReport {
    double rho = 0.0;
    double rho_bar = 0.0;
    double phi = 0.0;
    double phi_bar = 0.0;
    std::vector<double> phi_ell;
    std::optional<EqualityWitness> equality_case;
    ParamSix params;
};

struct Rho0Breakdown {
    int n = 0;
    int k = 0;    // floor(n/3)
    int k_n = 0;  // 0 if n = 2 mod 3, else 1
    double rho0 = 0.0;
    double u_n = 0.0;  // rho0 - (4n-5)/3
    Polynomial f;      // quadratic with largest root rho0
    std::vector<int> best_q;
};

// Row-sum bound on rho(A) for (0,1)-matrices; the row sums are sorted
// nonincreasingly before the formula is applied. 1 <= ell <= n.
double phi_ell(const StaircaseMatrix& a, int ell);

// phi(A) = (v-1+sqrt((2c-v-1)^2+4s))/2, the ell = c+1 instance.
double phi(const StaircaseMatrix& a);
double phi_from_params(int c, int v, int s);

// Same value realized as the largest real eigenvalue of [[c-1,s],[1,v-c]].
double phi_via_2x2(const StaircaseMatrix& a);

// Structural equality witness; input must be in S*_s(n).
std::optional<EqualityWitness> equality_case(const StaircaseMatrix& a);

// Numeric side of the equality characterization: |rho(A) - phi(A)| <= tol.
bool rho_phi_equal(const StaircaseMatrix& a, double tol = 1e-8);

// E = (2c-v-1)^2 + 4s, F = (2cbar-vbar-1)^2 + 4sbar.
std::pair<double, double> ef_terms(const ParamSix& p);

// g(x) = (2x-v-vbar+2)^2 ((2x-v-vbar+2)^2 - 2(E+F)) + (E-F)^2, expanded;
// phi(A) + phi(Abar) is a zero.
Polynomial g_quartic(const ParamSix& p);

// Conjectured maximum of rho(G) + rho(Gbar) at order n, with the residue
// breakdown and the maximizing split sizes. n >= 3.
Rho0Breakdown rho0(int n);

// Single-formula variant of rho0 (cross-check target).
double rho0_single_formula(int n);

// (rho, rho_bar) of the complete split graph K_q v N_{n-q}, closed form.
std::pair<double, double> split_rho(int n, int q);

// RHS of the s + sbar bound for c+cbar >= n, and whether it is attained.
std::pair<double, bool> s_sum_bound(const ParamSix& p, int n);

// Closed form of E + F under v = n-cbar, vbar = n-c-1 and the s+sbar equality.
double e_plus_f_closed(int n, int c, int cbar);

BoundReport make_bound_report(const StaircaseMatrix& a);

}  // namespace ngsum
