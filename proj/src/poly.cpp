#include "ngsum/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ngsum {

namespace {

double max_abs_coeff(const std::vector<double>& c) {
    double m = 0.0;
    for (double x : c) m = std::max(m, std::abs(x));
    return m;
}

std::vector<double> trim_coeffs(std::vector<double> c) {
    while (!c.empty() && c.back() == 0.0) c.pop_back();
    return c;
}

// coefficients below 1e-300 are treated as zero (subnormal guard for Sturm)
void prune(std::vector<double>& c) {
    for (double& x : c)
        if (std::abs(x) < 1e-300) x = 0.0;
}

std::vector<double> scale_unit(std::vector<double> c) {
    const double m = max_abs_coeff(c);
    if (m > 0.0)
        for (double& x : c) x /= m;
    return c;
}

// remainder of p / d, d nonzero and trimmed
std::vector<double> poly_rem(std::vector<double> p, const std::vector<double>& d) {
    const int k = static_cast<int>(d.size()) - 1;
    const double lead = d.back();
    for (int i = static_cast<int>(p.size()) - 1; i >= k; --i) {
        const double f = p[i] / lead;
        if (f == 0.0) continue;
        p[i] = 0.0;
        for (int j = 0; j < k; ++j) p[i - k + j] -= f * d[j];
    }
    p.resize(std::max<size_t>(1, k));
    return trim_coeffs(std::move(p));
}

struct SturmChain {
    std::vector<std::vector<double>> seq;

    explicit SturmChain(const Polynomial& p) {
        std::vector<double> p0 = trim_coeffs(p.c);
        prune(p0);
        p0 = trim_coeffs(std::move(p0));
        if (p0.size() < 2) {
            if (!p0.empty()) seq.push_back(scale_unit(std::move(p0)));
            return;
        }
        p0 = scale_unit(std::move(p0));
        std::vector<double> p1(p0.size() - 1);
        for (size_t i = 1; i < p0.size(); ++i) p1[i - 1] = p0[i] * static_cast<double>(i);
        p1 = scale_unit(trim_coeffs(std::move(p1)));
        seq.push_back(p0);
        seq.push_back(p1);
        while (seq.back().size() > 1) {
            std::vector<double> r = poly_rem(seq[seq.size() - 2], seq.back());
            prune(r);
            r = trim_coeffs(std::move(r));
            // near-zero remainder: gcd reached (multiple root)
            if (r.empty() || max_abs_coeff(r) <= 1e-13) break;
            for (double& x : r) x = -x;
            seq.push_back(scale_unit(std::move(r)));
        }
    }

    int variations(double x) const {
        int v = 0, last = 0;
        for (const auto& q : seq) {
            double y = 0.0;
            for (size_t i = q.size(); i-- > 0;) y = y * x + q[i];
            const int s = (y > 0.0) - (y < 0.0);
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    }

    // number of distinct real roots in (a, b]
    int count(double a, double b) const {
        if (seq.empty() || seq[0].size() < 2) return 0;
        return std::max(0, variations(a) - variations(b));
    }
};

double closed_lo(double lo) { return lo - std::max(1e-11, 1e-11 * std::abs(lo)); }

}  // namespace

int Polynomial::degree() const {
    int d = static_cast<int>(c.size()) - 1;
    while (d >= 0 && c[d] == 0.0) --d;
    return d;
}

double Polynomial::eval(double x) const {
    double y = 0.0;
    for (size_t i = c.size(); i-- > 0;) y = y * x + c[i];
    return y;
}

Polynomial Polynomial::derivative() const {
    if (c.size() <= 1) return Polynomial{{}};
    std::vector<double> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
    return Polynomial{std::move(d)};
}

Polynomial Polynomial::trimmed() const { return Polynomial{trim_coeffs(c)}; }

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<double> r(std::max(p.c.size(), q.c.size()), 0.0);
    for (size_t i = 0; i < p.c.size(); ++i) r[i] += p.c[i];
    for (size_t i = 0; i < q.c.size(); ++i) r[i] += q.c[i];
    return Polynomial{std::move(r)};
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    return p + (-1.0 * q);
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.c.empty() || q.c.empty()) return Polynomial{{}};
    std::vector<double> r(p.c.size() + q.c.size() - 1, 0.0);
    for (size_t i = 0; i < p.c.size(); ++i)
        for (size_t j = 0; j < q.c.size(); ++j) r[i + j] += p.c[i] * q.c[j];
    return Polynomial{std::move(r)};
}

Polynomial operator*(double s, const Polynomial& p) {
    Polynomial r = p;
    for (double& x : r.c) x *= s;
    return r;
}

Polynomial char_poly(const DenseMatrix& m) {
    const int n = m.n;
    if (n > 16) throw std::invalid_argument("char_poly: order capped at 16");
    if (n == 0) return Polynomial{{1.0}};

    auto trace = [](const DenseMatrix& x) {
        double t = 0.0;
        for (int i = 0; i < x.n; ++i) t += x.at(i, i);
        return t;
    };

    std::vector<double> c(n + 1, 0.0);
    c[n] = 1.0;
    DenseMatrix mk = m;
    c[n - 1] = -trace(mk);
    for (int k = 2; k <= n; ++k) {
        DenseMatrix shifted = mk;
        for (int i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
        mk = m * shifted;
        c[n - k] = -trace(mk) / static_cast<double>(k);
    }
    return Polynomial{std::move(c)};
}

int count_real_roots(const Polynomial& p, double lo, double hi) {
    if (lo >= hi) throw std::invalid_argument("count_real_roots: need lo < hi");
    SturmChain chain(p);
    return chain.count(closed_lo(lo), hi);
}

std::optional<double> largest_real_root(const Polynomial& p, double lo, double hi) {
    if (lo >= hi) throw std::invalid_argument("largest_real_root: need lo < hi");
    const Polynomial t = p.trimmed();
    if (t.degree() < 1) return std::nullopt;
    SturmChain chain(t);
    double a = closed_lo(lo), b = hi;
    if (chain.count(a, b) == 0) return std::nullopt;
    for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
        const double mid = 0.5 * (a + b);
        if (chain.count(mid, b) >= 1)
            a = mid;
        else
            b = mid;
    }
    return 0.5 * (a + b);
}

std::vector<double> all_real_roots(const Polynomial& p, double lo, double hi) {
    if (lo >= hi) throw std::invalid_argument("all_real_roots: need lo < hi");
    std::vector<double> roots;
    const Polynomial t = p.trimmed();
    if (t.degree() < 1) return roots;
    SturmChain chain(t);

    struct Span {
        double a, b;
        int cnt;
    };
    std::vector<Span> stack;
    const double a0 = closed_lo(lo);
    const int c0 = chain.count(a0, hi);
    if (c0 > 0) stack.push_back({a0, hi, c0});
    while (!stack.empty()) {
        Span s = stack.back();
        stack.pop_back();
        if (s.b - s.a <= 1e-12) {
            const double x = 0.5 * (s.a + s.b);
            for (int i = 0; i < s.cnt; ++i) roots.push_back(x);
            continue;
        }
        const double mid = 0.5 * (s.a + s.b);
        const int cr = chain.count(mid, s.b);
        const int cl = s.cnt - cr;
        if (cr > 0) stack.push_back({mid, s.b, cr});
        if (cl > 0) stack.push_back({s.a, mid, cl});
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double rho_r(const DenseMatrix& m) {
    const Polynomial p = char_poly(m);
    const double bound = m.inf_norm();
    const double pad = 1e-9 * (1.0 + bound);
    const auto r = largest_real_root(p, -bound - pad, bound + pad);
    if (!r) throw std::runtime_error("rho_r: no real eigenvalue found");
    return *r;
}

}  // namespace ngsum
