#pragma once

#include <complex>
#include <vector>

#include "lgcrit/errors.hpp"

namespace lgcrit {

using cplx = std::complex<double>;

/// Horner evaluation of an ascending-coefficient polynomial.
cplx poly_eval(const std::vector<cplx>& c, cplx x);

/// Ascending coefficients of the derivative.
std::vector<cplx> poly_deriv(const std::vector<cplx>& c);

/// Drop leading (highest-order) coefficients below rel_tol * max |c_k|.
std::vector<cplx> poly_trim(const std::vector<cplx>& c, double rel_tol);

/// All complex roots via simultaneous Aberth iteration with deterministic
/// circular starting points and a backward-error stopping rule. Exact for
/// degree <= 1; multiple roots converge to cluster accuracy, which downstream
/// Newton polishing sharpens.
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs, int max_iter = 400);

/// Dense bivariate polynomial sum c[i][j] * C^i * B^j stored row-major.
struct BiPoly {
  int nc = 1;  // number of C-coefficients (degree + 1)
  int nb = 1;  // number of B-coefficients
  std::vector<cplx> c;  // size nc * nb

  BiPoly() : c(1, cplx(0.0)) {}
  BiPoly(int nC, int nB) : nc(nC), nb(nB), c(static_cast<size_t>(nC) * nB, cplx(0.0)) {}

  cplx& at(int i, int j) { return c[static_cast<size_t>(i) * nb + j]; }
  cplx at(int i, int j) const { return c[static_cast<size_t>(i) * nb + j]; }

  cplx eval(cplx C, cplx B) const;
  /// Same sum with every coefficient and monomial replaced by its magnitude;
  /// used as the natural scale for residual tests.
  double eval_abs(double C, double B) const;
  BiPoly deriv_C() const;
  BiPoly deriv_B() const;
  /// Ascending B-coefficients of the partial evaluation at C.
  std::vector<cplx> coeffs_in_B(cplx C) const;
  int degree_B() const;
};

BiPoly bi_mul(const BiPoly& p, const BiPoly& q);
BiPoly bi_sub(const BiPoly& p, const BiPoly& q);

/// Determinant of a dense n x n complex matrix (row-major, destroyed) by
/// partial-pivot LU.
cplx lu_det(std::vector<cplx> mat, int n);

/// Solve mat * x = rhs for a dense n x n complex system by partial-pivot LU.
/// Throws NewtonDivergence if the matrix is numerically singular.
std::vector<cplx> lu_solve(std::vector<cplx> mat, std::vector<cplx> rhs, int n);

}  // namespace lgcrit
