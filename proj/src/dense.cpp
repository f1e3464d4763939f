#include "ngsum/dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "ngsum/poly.hpp"

namespace ngsum {

DenseMatrix::DenseMatrix(int order, double fill) : n(order) {
    if (order < 0) throw std::invalid_argument("DenseMatrix: negative order");
    a.assign(static_cast<size_t>(order) * order, fill);
}

DenseMatrix DenseMatrix::identity(int order) {
    DenseMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const int n = static_cast<int>(rows.size());
    DenseMatrix m(n);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("DenseMatrix::from_rows: ragged rows");
        int j = 0;
        for (double x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

double DenseMatrix::inf_norm() const {
    double best = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += std::abs(at(i, j));
        best = std::max(best, s);
    }
    return best;
}

double DenseMatrix::fro_norm() const {
    double s = 0.0;
    for (double x : a) s += x * x;
    return std::sqrt(s);
}

bool DenseMatrix::is_symmetric(double tol) const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(at(i, j) - at(j, i)) > tol) return false;
    return true;
}

bool DenseMatrix::is_nonnegative() const {
    for (double x : a)
        if (x < 0.0) return false;
    return true;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<double> DenseMatrix::row_sums() const {
    std::vector<double> r(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += at(i, j);
    return r;
}

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("DenseMatrix::operator*: size mismatch");
    DenseMatrix z(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const double v = x.at(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < x.n; ++j) z.at(i, j) += v * y.at(k, j);
        }
    return z;
}

DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.n != y.n) throw std::invalid_argument("DenseMatrix::operator+: size mismatch");
    DenseMatrix z = x;
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
    return z;
}

void Partition::validate(int n) const {
    std::vector<char> seen(n, 0);
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("Partition: empty block");
        for (int i : b) {
            if (i < 0 || i >= n) throw std::invalid_argument("Partition: index out of range");
            if (seen[i]) throw std::invalid_argument("Partition: duplicated index");
            seen[i] = 1;
        }
    }
    for (int i = 0; i < n; ++i)
        if (!seen[i]) throw std::invalid_argument("Partition: index not covered");
}

namespace detail {

void jacobi_eigen(std::vector<double>& m, int n, std::vector<double>& out) {
    auto at = [&](int i, int j) -> double& { return m[static_cast<size_t>(i) * n + j]; };
    out.clear();
    if (n == 0) return;
    if (n == 1) {
        out.push_back(m[0]);
        return;
    }

    double fro0 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fro0 += at(i, j) * at(i, j);
    fro0 = std::sqrt(fro0);
    const double thresh = 1e-13 * fro0;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        off = std::sqrt(2.0 * off);
        if (off <= thresh) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const double app = at(p, p), aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = at(p, k) = c * akp - s * akq;
                    at(k, q) = at(q, k) = s * akp + c * akq;
                }
            }
        }
    }

    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(at(i, i));
    std::sort(out.begin(), out.end());
}

}  // namespace detail

std::vector<double> sym_eigen_all(const DenseMatrix& m) {
    if (!m.is_symmetric(1e-12))
        throw std::invalid_argument("sym_eigen_all: matrix not symmetric within 1e-12");
    std::vector<double> buf = m.a;
    std::vector<double> evals;
    detail::jacobi_eigen(buf, m.n, evals);
    return evals;
}

double sym_eigen_max(const DenseMatrix& m) {
    auto e = sym_eigen_all(m);
    if (e.empty()) throw std::invalid_argument("sym_eigen_max: empty matrix");
    return e.back();
}

double spectral_radius_nonneg(const DenseMatrix& m) {
    const int n = m.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m.at(i, j) < 0.0)
                throw std::invalid_argument("spectral_radius_nonneg: negative entry at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
    if (n == 0) throw std::invalid_argument("spectral_radius_nonneg: empty matrix");
    if (n == 1) return m.a[0];

    // power iteration on A + I, all-ones start for reproducibility
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
    double lambda = 0.0, prev = std::numeric_limits<double>::quiet_NaN();
    int hits = 0;
    for (long it = 0; it < 100000; ++it) {
        for (int i = 0; i < n; ++i) {
            double s = x[i];
            for (int j = 0; j < n; ++j) s += m.at(i, j) * x[j];
            y[i] = s;
        }
        lambda = 0.0;
        for (int i = 0; i < n; ++i) lambda += x[i] * y[i];
        double ny = 0.0;
        for (int i = 0; i < n; ++i) ny += y[i] * y[i];
        ny = std::sqrt(ny);
        for (int i = 0; i < n; ++i) x[i] = y[i] / ny;

        if (!std::isnan(prev) && std::abs(lambda - prev) <= 1e-12 * std::max(1.0, std::abs(lambda))) {
            if (++hits >= 2) return lambda - 1.0;
        } else {
            hits = 0;
        }
        prev = lambda;
    }

    if (n <= 8) {
        const Polynomial p = char_poly(m);
        const double bound = m.inf_norm();
        const double pad = 1e-9 * (1.0 + bound);
        if (auto r = largest_real_root(p, -pad, bound + pad)) return *r;
    }
    throw std::runtime_error("spectral_radius_nonneg: power iteration stalled");
}

std::optional<double> is_rooted(const DenseMatrix& m) {
    const int l = m.n;
    if (l == 0) return std::nullopt;
    const auto r = m.row_sums();
    const double rl = r[l - 1];
    const double tol = 1e-9;
    for (int a = 0; a < l; ++a)
        if (r[a] < rl - tol) return std::nullopt;
    double dmin = -rl;
    for (int b = 0; b < l - 1; ++b) {
        const double mlb = m.at(l - 1, b);
        if (mlb < -tol) return std::nullopt;
        for (int a = 0; a < l - 1; ++a) {
            if (a == b) continue;
            if (m.at(a, b) < mlb - tol) return std::nullopt;
        }
        dmin = std::max(dmin, mlb - m.at(b, b));
    }
    return dmin;
}

std::optional<DenseMatrix> quotient(const DenseMatrix& m, const Partition& pi) {
    pi.validate(m.n);
    const int k = static_cast<int>(pi.blocks.size());
    DenseMatrix q(k);
    for (int s = 0; s < k; ++s) {
        for (int t = 0; t < k; ++t) {
            double lo = 0.0, hi = 0.0, total = 0.0;
            bool first = true;
            for (int i : pi.blocks[s]) {
                double sum = 0.0;
                for (int j : pi.blocks[t]) sum += m.at(i, j);
                if (first) {
                    lo = hi = sum;
                    first = false;
                } else {
                    lo = std::min(lo, sum);
                    hi = std::max(hi, sum);
                }
                total += sum;
            }
            if (hi - lo > 1e-9) return std::nullopt;
            q.at(s, t) = total / static_cast<double>(pi.blocks[s].size());
        }
    }
    return q;
}

DenseMatrix kron_sum(const DenseMatrix& a, const DenseMatrix& b) {
    const int n = a.n, m = b.n;
    DenseMatrix z(n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double v = a.at(i, j);
            if (v == 0.0) continue;
            for (int p = 0; p < m; ++p) z.at(i * m + p, j * m + p) += v;
        }
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) z.at(i * m + p, i * m + q) += b.at(p, q);
    return z;
}

double determinant(DenseMatrix m) {
    const int n = m.n;
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int i = col + 1; i < n; ++i)
            if (std::abs(m.at(i, col)) > std::abs(m.at(piv, col))) piv = i;
        if (m.at(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            const double f = m.at(i, col) / m.at(col, col);
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

double sqrt_pair_sum(double e, double c) {
    if (e < 0.0 || c < e) throw std::invalid_argument("sqrt_pair_sum: need 0 <= E <= C");
    return std::sqrt(e) + std::sqrt(c - e);
}

}  // namespace ngsum
