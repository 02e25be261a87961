#include "umlab/matrix.hpp"

namespace umlab {

LaurentMat LaurentMat::identity(LocalBase b, int n) {
    LaurentMat m(b, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = lp_const(b, 1);
    return m;
}

LaurentMat mat_mul(const LaurentMat& a, const LaurentMat& b) {
    if (a.cols != b.rows || a.base != b.base) fail(ErrCode::BadInput, "mat_mul: shape/base");
    LaurentMat r(a.base, a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

std::vector<LaurentPoly> row_times_mat(const std::vector<LaurentPoly>& x, const LaurentMat& m) {
    if ((int)x.size() != m.rows) fail(ErrCode::BadInput, "row_times_mat: shape");
    std::vector<LaurentPoly> r(m.cols, lp_zero(m.base));
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i)
            if (!x[i].is_zero() && !m.at(i, j).is_zero()) r[j] = r[j] + x[i] * m.at(i, j);
    return r;
}

std::vector<LaurentPoly> mat_times_col(const LaurentMat& m, const std::vector<LaurentPoly>& y) {
    if ((int)y.size() != m.cols) fail(ErrCode::BadInput, "mat_times_col: shape");
    std::vector<LaurentPoly> r(m.rows, lp_zero(m.base));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero() && !y[j].is_zero()) r[i] = r[i] + m.at(i, j) * y[j];
    return r;
}

static LaurentPoly det_rec(const LaurentMat& m, std::vector<int>& cols, int row) {
    if (row == m.rows) return lp_const(m.base, 1);
    LaurentPoly acc = lp_zero(m.base);
    int sign = 1;
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        int c = cols[ci];
        if (!m.at(row, c).is_zero()) {
            std::vector<int> rest;
            rest.reserve(cols.size() - 1);
            for (size_t k = 0; k < cols.size(); ++k)
                if (k != ci) rest.push_back(cols[k]);
            LaurentPoly sub = det_rec(m, rest, row + 1);
            LaurentPoly term = m.at(row, c) * sub;
            acc = (sign > 0) ? acc + term : acc - term;
        }
        sign = -sign;
    }
    return acc;
}

LaurentPoly mat_det(const LaurentMat& m) {
    if (m.rows != m.cols) fail(ErrCode::BadInput, "mat_det: not square");
    std::vector<int> cols(m.cols);
    for (int i = 0; i < m.cols; ++i) cols[i] = i;
    return det_rec(m, cols, 0);
}

BaseSolve solve_unit_det(const LocalBase& base, std::vector<std::vector<BaseElem>> A,
                         std::vector<BaseElem> b) {
    size_t n = A.size();
    if (n == 0 || b.size() != n) fail(ErrCode::BadInput, "solve_unit_det: shape");
    for (auto& row : A)
        if (row.size() != n) fail(ErrCode::BadInput, "solve_unit_det: shape");
    for (size_t i = 0; i < n; ++i) A[i].push_back(b[i]); // augment

    int sign = 1;
    BaseElem prev(1);
    for (size_t k = 0; k + 1 < n || k < n; ++k) {
        if (k >= n) break;
        // pivot: first row with nonzero entry in column k
        size_t piv = k;
        while (piv < n && A[piv][k] == 0) ++piv;
        if (piv == n)
            fail(ErrCode::NotInvertible, "solve_unit_det: determinant is zero");
        if (piv != k) {
            std::swap(A[piv], A[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j <= n; ++j) {
                // Bareiss: the division by the previous pivot is exact in the
                // ring (the quotient is itself a minor)
                BaseElem num = base.sub(base.mul(A[k][k], A[i][j]), base.mul(A[i][k], A[k][j]));
                A[i][j] = base.kind == BaseKind::PrimeField ? base.div(num, prev)
                                                            : BaseElem(num / prev);
            }
            A[i][k] = 0;
        }
        prev = A[k][k];
    }

    BaseElem det = sign > 0 ? A[n - 1][n - 1] : base.neg(A[n - 1][n - 1]);
    if (!base.is_unit(det))
        fail(ErrCode::NotInvertible,
             "solve_unit_det: determinant " + base.to_string(det) + " is not a unit of " +
                 base.describe());

    // back-substitution on the triangular fraction-free system; results are
    // exact and land back in the base ring because det is a unit
    std::vector<BaseElem> x(n, BaseElem(0));
    for (size_t i = n; i-- > 0;) {
        BaseElem s = A[i][n];
        for (size_t j = i + 1; j < n; ++j) s = base.sub(s, base.mul(A[i][j], x[j]));
        x[i] = base.kind == BaseKind::PrimeField ? base.div(s, A[i][i]) : BaseElem(s / A[i][i]);
        if (!base.is_element(x[i]))
            fail(ErrCode::NotInvertible, "solve_unit_det: solution leaves the base ring");
        x[i] = base.canon(x[i]);
    }
    return {det, x};
}

} // namespace umlab
