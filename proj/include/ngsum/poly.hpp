#pragma once

#include <optional>
#include <vector>

#include "ngsum/dense.hpp"

namespace ngsum {

// Real polynomial, coefficients ascending by degree.
struct Polynomial {
    std::vector<double> c;

    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs) : c(std::move(coeffs)) {}

    // degree after trimming exact-zero leading coefficients; -1 for the zero polynomial
    int degree() const;
    double eval(double x) const;  // Horner
    Polynomial derivative() const;
    Polynomial trimmed() const;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(double s, const Polynomial& p);

// Monic characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
// recurrence. Desk-scale: order capped at 16.
Polynomial char_poly(const DenseMatrix& m);

// Number of distinct real roots in (lo, hi] by Sturm sign counts.
int count_real_roots(const Polynomial& p, double lo, double hi);

// Largest real root in [lo, hi], sign-change bisection driven by Sturm
// counts; nullopt when the interval holds no real root. Accuracy 1e-10 for
// simple roots; at a multiple root the sign of the evaluation is noise
// within ~sqrt(eps), which bounds the attainable accuracy there.
std::optional<double> largest_real_root(const Polynomial& p, double lo, double hi);

// All distinct real roots in [lo, hi], ascending (Sturm counts collapse
// multiplicities).
std::vector<double> all_real_roots(const Polynomial& p, double lo, double hi);

// Largest real eigenvalue, via char_poly + root isolation over
// [-inf_norm, inf_norm]. Throws when no real eigenvalue exists.
double rho_r(const DenseMatrix& m);

}  // namespace ngsum
