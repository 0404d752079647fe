#pragma once

// Float backend: LU inverse and the scaling-and-squaring matrix exponential.

#include "exc/matrix.hpp"

namespace exc {

MatD inverse(const MatD& m);  // partial-pivot Gauss-Jordan, throws if singular

// exp(T) by scaling-and-squaring with truncated Taylor series.
// With check = true the contract ||exp(T) exp(-T) - id||_inf <= tol is
// verified; non-convergence raises std::runtime_error with diagnostics.
MatD matrix_exp(const MatD& t, double tol = 1e-12, bool check = false);

// ||a - b||_inf / max(1, ||b||_inf)
double rel_residual(const MatD& a, const MatD& b);

}  // namespace exc
