#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

namespace ngsum {

// Small dense real matrix, row-major. Sized for desk-scale work
// (quotients, rooted matrices, Kronecker sums, adjacency matrices).
struct DenseMatrix {
    int n = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    explicit DenseMatrix(int order, double fill = 0.0);

    static DenseMatrix identity(int order);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

    double& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    double inf_norm() const;   // max absolute row sum
    double fro_norm() const;
    bool is_symmetric(double tol = 1e-12) const;
    bool is_nonnegative() const;
    DenseMatrix transpose() const;
    std::vector<double> row_sums() const;

    bool operator==(const DenseMatrix& o) const = default;
};

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y);

// Ordered partition of the index set {0,...,n-1} into nonempty disjoint blocks.
struct Partition {
    std::vector<std::vector<int>> blocks;
    // throws std::invalid_argument when the blocks do not partition {0..n-1}
    void validate(int n) const;
};

// All eigenvalues of a symmetric matrix (ascending), cyclic Jacobi.
// Input must be symmetric within 1e-12 entrywise.
std::vector<double> sym_eigen_all(const DenseMatrix& m);

// Largest eigenvalue of a symmetric matrix; equals the spectral radius
// when the matrix is also nonnegative.
double sym_eigen_max(const DenseMatrix& m);

// Perron value of a nonnegative matrix via power iteration on A + I
// (the shift kills period-2 oscillation). Falls back to characteristic
// polynomial root isolation for n <= 8 when the iteration stalls.
double spectral_radius_nonneg(const DenseMatrix& m);

// Smallest constant d witnessing the rooted-matrix inequalities
//   d*delta_ab + m_ab >= m_lb >= 0   (a in [l], b in [l-1])
//   r_a >= r_l,  r_l + d >= 0
// or nullopt when infeasible.
std::optional<double> is_rooted(const DenseMatrix& m);

// Quotient matrix when the partition is equitable for m (every block
// submatrix has constant row sums within 1e-9); nullopt otherwise.
std::optional<DenseMatrix> quotient(const DenseMatrix& m, const Partition& pi);

// A (x) I_m + I_n (x) B; spectrum is all pairwise eigenvalue sums.
DenseMatrix kron_sum(const DenseMatrix& a, const DenseMatrix& b);

// Determinant by LU with partial pivoting.
double determinant(DenseMatrix m);

// sqrt(E) + sqrt(C - E); nondecreasing in E on [0, C/2].
double sqrt_pair_sum(double e, double c);

namespace detail {
// Destructive Jacobi on a row-major buffer; appends eigenvalues (ascending)
// to out. No symmetry check, no allocation beyond out.
void jacobi_eigen(std::vector<double>& m, int n, std::vector<double>& out);
}  // namespace detail

}  // namespace ngsum
