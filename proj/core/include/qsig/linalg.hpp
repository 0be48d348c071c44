#pragma once

#include <optional>

#include "qsig/matrix.hpp"
#include "qsig/polynomial.hpp"
#include "qsig/rational.hpp"

namespace qsig {

// Fraction-free (Bareiss) determinant with row pivoting.
Integer integer_determinant(const Mat<Integer>& m);

// Exact determinant of a rational matrix: denominators cleared once, then
// the integer path.
Rational rational_determinant(const Mat<Rational>& m);

// Determinant of a matrix of integer polynomials, recovered from integer
// determinants at 0, 1, ..., D and Newton interpolation, where D bounds the
// degree by the sum of row-wise entry degree maxima.
IntegerPoly poly_matrix_determinant(const Mat<IntegerPoly>& m);

// Gauss-Jordan inverse; empty when the matrix is singular.
std::optional<Mat<Rational>> rational_inverse(const Mat<Rational>& m);

// Least positive integer clearing every entry (1 for an empty matrix).
Integer matrix_common_denominator(const Mat<Rational>& m);

} // namespace qsig
