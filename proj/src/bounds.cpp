#include "ngsum/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ngsum {

double phi_ell(const StaircaseMatrix& a, int ell) {
    const int n = a.order();
    if (ell < 1 || ell > n)
        throw std::invalid_argument("phi_ell: ell out of range [1," + std::to_string(n) + "]");
    std::vector<int> r = a.row_sums();
    std::sort(r.begin(), r.end(), std::greater<int>());
    const double rl = r[ell - 1];
    double excess = 0.0;
    for (int i = 0; i < ell - 1; ++i) excess += r[i] - rl;
    return 0.5 * (rl - 1.0 + std::sqrt((rl + 1.0) * (rl + 1.0) + 4.0 * excess));
}

double phi_from_params(int c, int v, int s) {
    const double d = 2.0 * c - v - 1.0;
    return 0.5 * (v - 1.0 + std::sqrt(d * d + 4.0 * s));
}

double phi(const StaircaseMatrix& a) {
    const ParamTriple p = params(a);
    return phi_from_params(p.c, p.v, p.s);
}

double phi_via_2x2(const StaircaseMatrix& a) {
    const ParamTriple p = params(a);
    const DenseMatrix m = DenseMatrix::from_rows(
        {{static_cast<double>(p.c - 1), static_cast<double>(p.s)},
         {1.0, static_cast<double>(p.v - p.c)}});
    return rho_r(m);
}

std::optional<EqualityWitness> equality_case(const StaircaseMatrix& a) {
    if (!a.is_symmetric())
        throw std::invalid_argument("equality_case: matrix not symmetric (needs S*_s(n))");
    if (!membership(a).in_Sstar)
        throw std::invalid_argument("equality_case: matrix not in S*(n)");
    const int n = a.order();
    const int m = a.row_sum(0) + 1;
    const auto& mu = a.profile();

    auto matches = [&](const StaircaseMatrix& pattern) { return mu == pattern.profile(); };

    if (m >= 2 && m <= n && matches(clique_plus_nulls_staircase(n, m))) {
        EqualityWitness w;
        w.form = EqualityWitness::Form::clique_plus_nulls;
        w.m = m;
        return w;
    }
    const int c = params(a).c;
    for (int t = 2; t <= c + 1 && t <= m; ++t) {
        // (K_{t-1} v N_{m+1-t}) + N_{n-m}
        std::vector<int> r(n, 0);
        for (int i = 0; i < t - 1; ++i) r[i] = m - 1;
        for (int i = t - 1; i < m; ++i) r[i] = t - 1;
        StaircaseMatrix pattern = StaircaseMatrix::from_row_sums(r);
        if (matches(pattern)) {
            EqualityWitness w;
            w.form = EqualityWitness::Form::split_plus_nulls;
            w.m = m;
            w.t = t;
            return w;
        }
    }
    return std::nullopt;
}

bool rho_phi_equal(const StaircaseMatrix& a, double tol) {
    if (!a.is_symmetric())
        throw std::invalid_argument("rho_phi_equal: matrix not symmetric");
    return std::abs(sym_eigen_max(a.to_dense()) - phi(a)) <= tol;
}

std::pair<double, double> ef_terms(const ParamSix& p) {
    const double de = 2.0 * p.c - p.v - 1.0;
    const double df = 2.0 * p.cbar - p.vbar - 1.0;
    return {de * de + 4.0 * p.s, df * df + 4.0 * p.sbar};
}

Polynomial g_quartic(const ParamSix& p) {
    const auto [e, f] = ef_terms(p);
    const double w = 2.0 - p.v - p.vbar;
    const Polynomial u2{{w * w, 4.0 * w, 4.0}};  // (2x + w)^2
    Polynomial g = u2 * u2 - (2.0 * (e + f)) * u2 + Polynomial{{(e - f) * (e - f)}};
    g.c.resize(5);
    return g;
}

Rho0Breakdown rho0(int n) {
    if (n < 3) throw std::invalid_argument("rho0: order must be >= 3");
    Rho0Breakdown b;
    b.n = n;
    const int k = n / 3;
    b.k = k;
    switch (n % 3) {
        case 0: {
            b.k_n = 1;
            b.rho0 = 0.5 * (5.0 * k - 3.0 + std::sqrt(9.0 * k * k - 2.0 * k + 1.0));
            const double t = 9.0 * k - 1.0;
            b.u_n = 4.0 / (3.0 * (t + std::sqrt(t * t + 8.0)));
            b.f = Polynomial{{4.0 * k * k - 7.0 * k + 2.0, -(5.0 * k - 3.0), 1.0}};
            break;
        }
        case 1: {
            b.k_n = 1;
            b.rho0 = 0.5 * (5.0 * k - 1.0 + std::sqrt(9.0 * k * k + 2.0 * k + 1.0));
            const double t = 9.0 * k + 1.0;
            b.u_n = 4.0 / (3.0 * (t + std::sqrt(t * t + 8.0)));
            b.f = Polynomial{{4.0 * k * k - 3.0 * k, -(5.0 * k - 1.0), 1.0}};
            break;
        }
        default: {
            b.k_n = 0;
            b.rho0 = 4.0 * k + 1.0;
            b.u_n = 0.0;
            b.f = Polynomial{{4.0 * k * k + k, -(5.0 * k + 1.0), 1.0}};
            break;
        }
    }
    double best = -1.0;
    for (int q = 1; q <= n - 2; ++q) {
        const auto [r, rb] = split_rho(n, q);
        best = std::max(best, r + rb);
    }
    for (int q = 1; q <= n - 2; ++q) {
        const auto [r, rb] = split_rho(n, q);
        if (r + rb >= best - 1e-9) b.best_q.push_back(q);
    }
    return b;
}

double rho0_single_formula(int n) {
    if (n < 3) throw std::invalid_argument("rho0_single_formula: order must be >= 3");
    const double k = n / 3;
    const double kn = (n % 3 == 2) ? 0.0 : 1.0;
    const double inner = (2.0 * n - 1.0) / 3.0 + k;
    return 0.5 * (2.0 * n - 3.0 - k + std::sqrt(inner * inner + 8.0 * kn / 9.0));
}

std::pair<double, double> split_rho(int n, int q) {
    if (q < 1 || q > n - 2)
        throw std::invalid_argument("split_rho: need 1 <= q <= n-2, got q=" + std::to_string(q));
    const double qm = q - 1.0;
    const double rho = 0.5 * (qm + std::sqrt(qm * qm + 4.0 * q * (n - q)));
    return {rho, static_cast<double>(n - q - 1)};
}

std::pair<double, bool> s_sum_bound(const ParamSix& p, int n) {
    const long long x = p.c + p.cbar;
    if (x < n)
        throw std::invalid_argument("s_sum_bound: requires c + cbar >= n (got " +
                                    std::to_string(x) + " < " + std::to_string(n) + ")");
    const long long y = p.c - p.cbar;
    // 4*bound is integral: -3x^2 + 4(n+1)x - y^2 - 4v - 4cbar
    const long long num4 = -3 * x * x + 4LL * (n + 1) * x - y * y - 4LL * p.v - 4LL * p.cbar;
    const bool tight = 4LL * (p.s + p.sbar) == num4;
    return {static_cast<double>(num4) / 4.0, tight};
}

double e_plus_f_closed(int n, int c, int cbar) {
    const double x = c + cbar;
    const double y = c - cbar;
    return 1.5 * x * x - (2.0 * n - 1.0) * x + 2.0 * n * n - 2.0 * n + 1.0 - 0.5 * y * y - y;
}

BoundReport make_bound_report(const StaircaseMatrix& a) {
    BoundReport r;
    r.params = full_params(a);
    const StaircaseMatrix abar = reflect_complement(a);
    const DenseMatrix d = a.to_dense();
    const DenseMatrix dbar = abar.to_dense();
    if (a.is_symmetric()) {
        r.rho = sym_eigen_max(d);
        r.rho_bar = sym_eigen_max(dbar);
        r.equality_case = equality_case(a);
    } else {
        r.rho = spectral_radius_nonneg(d);
        r.rho_bar = spectral_radius_nonneg(dbar);
    }
    r.phi = phi(a);
    r.phi_bar = phi(abar);
    r.phi_ell.reserve(a.order());
    for (int ell = 1; ell <= a.order(); ++ell) r.phi_ell.push_back(phi_ell(a, ell));
    return r;
}

}  // namespace ngsum
