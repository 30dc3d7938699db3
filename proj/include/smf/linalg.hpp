#pragma once

#include <vector>

#include "smf/quadfield.hpp"

namespace smf {

using Vec = std::vector<FieldElem>;
using Mat = std::vector<Vec>; // row-major

Mat mat_identity(size_t n);
Mat mat_transpose(const Mat& A);
Mat mat_mul(const Mat& A, const Mat& B);

// In-place reduced row echelon form; returns the pivot column of each
// pivot row (size = rank).
std::vector<size_t> rref(Mat& A);

size_t mat_rank(Mat A);

// Unique solution x of A x = b for A with full column rank (possibly
// overdetermined); throws RankDeficient when the rank is short and
// Error when the system is inconsistent.
Vec solve_full_column_rank(const Mat& A, const Vec& b);

// Basis of the right kernel of A.
std::vector<Vec> kernel_basis(const Mat& A);

// Characteristic polynomial det(xI - A), ascending coefficients
// (size n+1, monic), via the Faddeev-LeVerrier recurrence.
std::vector<FieldElem> charpoly(const Mat& A);

// Euclidean division of polynomials (ascending coefficients) by a monic
// divisor; returns {quotient, remainder}.
std::pair<std::vector<FieldElem>, std::vector<FieldElem>> poly_divmod(
    std::vector<FieldElem> num, const std::vector<FieldElem>& den);

FieldElem poly_eval(const std::vector<FieldElem>& poly, const FieldElem& x);

} // namespace smf
