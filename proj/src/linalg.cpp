#include "smf/linalg.hpp"

namespace smf {

Mat mat_identity(size_t n) {
    Mat I(n, Vec(n));
    for (size_t i = 0; i < n; ++i) I[i][i] = FieldElem(1);
    return I;
}

Mat mat_transpose(const Mat& A) {
    if (A.empty()) return {};
    Mat T(A[0].size(), Vec(A.size()));
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = 0; j < A[i].size(); ++j) T[j][i] = A[i][j];
    return T;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    const size_t n = A.size(), m = B[0].size(), k = B.size();
    Mat C(n, Vec(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (A[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
        }
    return C;
}

std::vector<size_t> rref(Mat& A) {
    std::vector<size_t> pivots;
    if (A.empty()) return pivots;
    const size_t rows = A.size(), cols = A[0].size();
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t sel = r;
        while (sel < rows && A[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(A[sel], A[r]);
        const FieldElem inv = A[r][col].inverse();
        for (size_t j = col; j < cols; ++j) A[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][col].is_zero()) continue;
            const FieldElem f = A[i][col];
            for (size_t j = col; j < cols; ++j) A[i][j] -= f * A[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

size_t mat_rank(Mat A) { return rref(A).size(); }

Vec solve_full_column_rank(const Mat& A, const Vec& b) {
    const size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    if (b.size() != rows) throw Error("solve: dimension mismatch");
    Mat aug(rows, Vec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = A[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    Vec x(cols);
    size_t npiv = 0;
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols)
            throw Error("solve: inconsistent system");
        x[pivots[r]] = aug[r][cols];
        ++npiv;
    }
    if (npiv < cols) throw RankDeficient("solve: rank " + std::to_string(npiv) +
                                         " < " + std::to_string(cols));
    return x;
}

std::vector<Vec> kernel_basis(const Mat& A) {
    if (A.empty()) return {};
    Mat R = A;
    std::vector<size_t> pivots = rref(R);
    const size_t cols = A[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols);
        v[free] = FieldElem(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -R[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<FieldElem> charpoly(const Mat& A) {
    const size_t n = A.size();
    std::vector<FieldElem> c(n + 1);
    c[n] = FieldElem(1);
    Mat M = mat_identity(n); // M_0
    for (size_t k = 1; k <= n; ++k) {
        M = mat_mul(A, M);
        FieldElem tr(0);
        for (size_t i = 0; i < n; ++i) tr += M[i][i];
        const FieldElem ck = -(tr / FieldElem(Rat(static_cast<long>(k))));
        c[n - k] = ck;
        for (size_t i = 0; i < n; ++i) M[i][i] += ck;
    }
    return c;
}

std::pair<std::vector<FieldElem>, std::vector<FieldElem>> poly_divmod(
    std::vector<FieldElem> num, const std::vector<FieldElem>& den) {
    if (den.empty() || den.back() != FieldElem(1))
        throw Error("poly_divmod: divisor must be monic");
    const size_t d = den.size() - 1;
    if (num.size() < den.size()) return {{FieldElem(0)}, std::move(num)};
    std::vector<FieldElem> quot(num.size() - d);
    for (size_t i = num.size(); i-- > d;) {
        FieldElem q = num[i];
        quot[i - d] = q;
        if (q.is_zero()) continue;
        for (size_t j = 0; j <= d; ++j) num[i - d + j] -= q * den[j];
    }
    num.resize(d == 0 ? 1 : d);
    return {std::move(quot), std::move(num)};
}

FieldElem poly_eval(const std::vector<FieldElem>& poly, const FieldElem& x) {
    FieldElem acc(0);
    for (size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

} // namespace smf
