#pragma once

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace qldyn {

using Complex = std::complex<double>;

// Dense square matrix up to 4x4; all Jacobians in this project are 2x2 or 4x4.
struct Matrix {
    static constexpr int kMaxDim = 4;

    int n = 0;
    std::array<double, kMaxDim * kMaxDim> a{};

    Matrix() = default;
    explicit Matrix(int dim) : n(dim) {}

    double& at(int i, int j) { return a[i * n + j]; }
    double at(int i, int j) const { return a[i * n + j]; }

    static Matrix identity(int dim);
    double trace() const;
};

// Monic characteristic polynomial coefficients c so that
// det(xI - A) = x^n + c[1] x^(n-1) + ... + c[n]  (c[0] == 1),
// computed with the Faddeev-LeVerrier recursion.
std::vector<double> characteristic_polynomial(const Matrix& m);

// All roots of a monic complex-coefficient polynomial (degree <= 4) via
// Durand-Kerner iteration with cluster collapsing: groups of nearly equal
// roots are replaced by their centroid, which restores full accuracy for
// multiple roots (the centroid is first-order exact while the individual
// roots are only eps^(1/m) accurate).
std::vector<Complex> polynomial_roots(std::span<const Complex> monic_coeffs);

// Eigenvalues of a real square matrix, dimension 2..4. 2x2 uses the closed
// form; 3x3/4x4 go through the characteristic polynomial. Accuracy ~1e-9 for
// well-conditioned spectra; trace/determinant consistency is a tested
// invariant.
std::vector<Complex> eigenvalues(const Matrix& m);

double spectral_radius(std::span<const Complex> eigenvalues);

// Central-difference Jacobian of an R^n -> R^n map, step h_scale*(1+|x_j|)
// per coordinate.
Matrix finite_difference_jacobian(
    const std::function<std::vector<double>(std::span<const double>)>& map,
    std::span<const double> point, double h_scale = 1e-6);

}  // namespace qldyn
