#include "ngsum/staircase.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ngsum {

namespace {

// Canonical profile from row sums, bottom-up. A row with r_i = i-1 (1-based)
// admits widths {i-1, i}; take the smallest compatible with monotonicity.
// Throws when the sums fit no staircase.
std::vector<int> canonical_profile(const std::vector<int>& r) {
    const int n = static_cast<int>(r.size());
    std::vector<int> mu(n, 0);
    int next = 0;
    for (int i = n - 1; i >= 0; --i) {
        if (r[i] < 0 || r[i] > n - 1)
            throw std::invalid_argument("staircase: row sum out of range at row " +
                                        std::to_string(i + 1));
        const int lo = (r[i] > i) ? r[i] + 1 : r[i];
        const int hi = (r[i] >= i) ? r[i] + 1 : r[i];
        const int m = std::max(lo, next);
        if (m > hi)
            throw std::invalid_argument("staircase: row sums are not staircase-feasible at row " +
                                        std::to_string(i + 1));
        mu[i] = m;
        next = m;
    }
    return mu;
}

std::vector<int> sums_from_profile(const std::vector<int>& mu) {
    std::vector<int> r(mu.size());
    for (size_t i = 0; i < mu.size(); ++i)
        r[i] = mu[i] - (static_cast<int>(i) < mu[i] ? 1 : 0);
    return r;
}

}  // namespace

StaircaseMatrix StaircaseMatrix::from_profile(const std::vector<int>& mu) {
    const int n = static_cast<int>(mu.size());
    if (n == 0) throw std::invalid_argument("from_profile: empty profile");
    for (int i = 0; i < n; ++i) {
        if (mu[i] < 0 || mu[i] > n)
            throw std::invalid_argument("from_profile: entry out of [0,n] at index " +
                                        std::to_string(i + 1));
        if (i > 0 && mu[i] > mu[i - 1])
            throw std::invalid_argument("from_profile: profile not nonincreasing at index " +
                                        std::to_string(i + 1));
    }
    StaircaseMatrix a;
    a.n_ = n;
    a.r_ = sums_from_profile(mu);
    a.mu_ = canonical_profile(a.r_);
    return a;
}

StaircaseMatrix StaircaseMatrix::from_row_sums(const std::vector<int>& r) {
    StaircaseMatrix a;
    a.n_ = static_cast<int>(r.size());
    a.mu_ = canonical_profile(r);
    a.r_ = r;
    return a;
}

StaircaseMatrix StaircaseMatrix::from_canonical_unchecked(std::vector<int> mu) {
    StaircaseMatrix a;
    a.n_ = static_cast<int>(mu.size());
    a.r_ = sums_from_profile(mu);
    a.mu_ = std::move(mu);
    return a;
}

std::optional<StaircaseMatrix> StaircaseMatrix::try_from_dense(const DenseMatrix& m) {
    const int n = m.n;
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) {
        int maxcol = -1, cnt = 0;
        for (int j = 0; j < n; ++j) {
            const double x = m.at(i, j);
            int b;
            if (std::abs(x) <= 1e-9)
                b = 0;
            else if (std::abs(x - 1.0) <= 1e-9)
                b = 1;
            else
                return std::nullopt;
            if (b) {
                if (j == i) return std::nullopt;  // nonzero diagonal
                maxcol = j;
                ++cnt;
            }
        }
        const int w = maxcol + 1;
        const int expect = (i < w) ? w - 1 : w;
        if (cnt != expect) return std::nullopt;  // row is not a prefix minus diagonal
        r[i] = cnt;
    }
    try {
        return from_row_sums(r);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

DenseMatrix StaircaseMatrix::to_dense() const {
    DenseMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < mu_[i]; ++j)
            if (j != i) m.at(i, j) = 1.0;
    return m;
}

bool StaircaseMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (entry(i, j) != entry(j, i)) return false;
    return true;
}

Membership membership(const StaircaseMatrix& a) {
    Membership m;
    m.in_S = true;
    const int n = a.order();
    if (n >= 2) {
        m.in_Sstar = a.entry(0, 1) && a.entry(1, 0) && !a.entry(n - 2, n - 1) &&
                     !a.entry(n - 1, n - 2);
    }
    m.in_Sstar_sym = m.in_Sstar && a.is_symmetric();
    return m;
}

StaircaseMatrix reflect_complement(const StaircaseMatrix& a) {
    if (!membership(a).in_Sstar)
        throw std::invalid_argument("reflect_complement: matrix not in S*(n)");
    const int n = a.order();
    const auto& mu = a.profile();
    // column heights of the reflected complement: nu_j = n - mu_{n-j+1}
    // (nonincreasing), then row widths by conjugation, via a histogram.
    std::vector<int> cnt(n + 2, 0);
    for (int j = 0; j < n; ++j) {
        const int nu = n - mu[n - 1 - j];
        ++cnt[nu];
    }
    std::vector<int> r(n);
    int ge = 0;  // #{j : nu_j >= h} for h = n..1
    std::vector<int> width(n + 1, 0);
    for (int h = n; h >= 1; --h) {
        ge += cnt[h];
        width[h - 1] = ge;  // rows with 1-based index h have L = ge
    }
    for (int i = 0; i < n; ++i) {
        const int L = width[i];
        r[i] = L - (i < L ? 1 : 0);
    }
    return StaircaseMatrix::from_row_sums(r);
}

ParamTriple params(const StaircaseMatrix& a) {
    if (!membership(a).in_Sstar)
        throw std::invalid_argument("params: matrix not in S*(n)");
    const int n = a.order();
    const auto& r = a.row_sums();
    long long acc = 0;
    int c = 0;
    for (int i = 1; i <= n; ++i) {
        acc += r[i - 1];
        if (acc > static_cast<long long>(i) * (i - 1)) c = i;
    }
    // c >= 1 since r_1 > 0, and c <= n-1 since the total is < n(n-1)
    long long head = 0;
    for (int i = 0; i < c; ++i) head += r[i];
    ParamTriple p;
    p.c = c;
    p.v = r[c];
    p.s = static_cast<int>(head - static_cast<long long>(c) * (c - 1));
    return p;
}

ParamSix full_params(const StaircaseMatrix& a) {
    const ParamTriple p = params(a);
    const ParamTriple q = params(reflect_complement(a));
    ParamSix f;
    f.c = p.c;
    f.v = p.v;
    f.s = p.s;
    f.cbar = q.c;
    f.vbar = q.v;
    f.sbar = q.s;
    const long long y = f.c - f.cbar;
    f.T = y * y + 2 * y;
    return f;
}

std::optional<StaircaseMatrix> staircase_from_graph(const DenseMatrix& adj) {
    const int n = adj.n;
    if (!adj.is_symmetric(1e-9)) return std::nullopt;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i && std::abs(adj.at(i, j) - 1.0) <= 1e-9) ++deg[i];
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return deg[x] > deg[y]; });
    DenseMatrix re(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) re.at(i, j) = adj.at(order[i], order[j]);
    for (int i = 0; i < n; ++i) re.at(i, i) = 0.0;
    return StaircaseMatrix::try_from_dense(re);
}

StaircaseMatrix split_graph_staircase(int n, int q) {
    if (q < 1 || q > n - 2) throw std::invalid_argument("split_graph_staircase: need 1 <= q <= n-2");
    std::vector<int> r(n);
    for (int i = 0; i < q; ++i) r[i] = n - 1;
    for (int i = q; i < n; ++i) r[i] = q;
    return StaircaseMatrix::from_row_sums(r);
}

StaircaseMatrix clique_plus_nulls_staircase(int n, int t) {
    if (t < 2 || t > n) throw std::invalid_argument("clique_plus_nulls_staircase: need 2 <= t <= n");
    std::vector<int> r(n, 0);
    for (int i = 0; i < t; ++i) r[i] = t - 1;
    return StaircaseMatrix::from_row_sums(r);
}

namespace detail {
void check_enum_order(int n, int lo, int hi) {
    if (n < lo || n > hi)
        throw std::invalid_argument("enumeration order must be in [" + std::to_string(lo) + "," +
                                    std::to_string(hi) + "], got " + std::to_string(n));
}
}  // namespace detail

std::vector<StaircaseMatrix> enumerate_sstar_sym(int n) {
    std::vector<StaircaseMatrix> out;
    for_each_sstar_sym(n, [&](const StaircaseMatrix& a) { out.push_back(a); });
    return out;
}

std::vector<StaircaseMatrix> enumerate_sstar(int n) {
    std::vector<StaircaseMatrix> out;
    for_each_sstar(n, [&](const StaircaseMatrix& a) { out.push_back(a); });
    return out;
}

}  // namespace ngsum
