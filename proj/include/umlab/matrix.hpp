#pragma once
#include <vector>
#include "umlab/laurent.hpp"

namespace umlab {

// Dense matrix over R[t, t^-1]; row-major, small sizes only.
struct LaurentMat {
    LocalBase base;
    int rows = 0, cols = 0;
    std::vector<LaurentPoly> e;

    LaurentMat() = default;
    LaurentMat(LocalBase b, int r, int c)
        : base(b), rows(r), cols(c), e((size_t)r * c, lp_zero(b)) {}

    LaurentPoly& at(int i, int j) { return e[(size_t)i * cols + j]; }
    const LaurentPoly& at(int i, int j) const { return e[(size_t)i * cols + j]; }

    static LaurentMat identity(LocalBase b, int n);

    bool operator==(const LaurentMat& o) const {
        return base == o.base && rows == o.rows && cols == o.cols && e == o.e;
    }
};

LaurentMat mat_mul(const LaurentMat& a, const LaurentMat& b);
std::vector<LaurentPoly> row_times_mat(const std::vector<LaurentPoly>& x, const LaurentMat& m);
std::vector<LaurentPoly> mat_times_col(const LaurentMat& m, const std::vector<LaurentPoly>& y);
LaurentPoly mat_det(const LaurentMat& m); // cofactor expansion, small n only

// Exact solve of A x = b over the base ring: fraction-free Bareiss forward
// elimination (every intermediate is a minor of [A|b], hence a ring element),
// unit test on the determinant, then back-substitution. NotInvertible when
// det(A) is not a unit of the base.
struct BaseSolve {
    BaseElem det;
    std::vector<BaseElem> x;
};
BaseSolve solve_unit_det(const LocalBase& base, std::vector<std::vector<BaseElem>> A,
                         std::vector<BaseElem> b);

} // namespace umlab
