#include "umlab/bezout.hpp"
#include "umlab/matrix.hpp"

namespace umlab {

bool weierstrass_test(const LaurentPoly& f) {
    f.base.require_local("weierstrass_test");
    if (f.is_zero()) return false;
    if (*f.val() < 0) return false;
    if (f.coeffs.rbegin()->second != 1) return false;
    int d = *f.deg();
    for (auto& [e, c] : f.coeffs)
        if (e < d && !f.base.in_max_ideal(c)) return false;
    return true;
}

LaurentPoly invert_mod_monic(const LaurentPoly& f, const LaurentPoly& g) {
    const LocalBase& base = f.base;
    if (g.base != base) fail(ErrCode::BadInput, "invert_mod_monic: mixed bases");
    if (g.is_zero() || *g.val() < 0 || g.coeffs.rbegin()->second != 1 || *g.deg() < 1)
        fail(ErrCode::BadInput, "invert_mod_monic: g must be monic of degree >= 1");
    if (!f.is_zero() && *f.val() < 0)
        fail(ErrCode::BadInput, "invert_mod_monic: f must lie in R[t]");
    int n = *g.deg();

    // columns: coefficients of f * t^j mod g on the basis 1, t, .., t^(n-1)
    std::vector<std::vector<BaseElem>> M(n, std::vector<BaseElem>(n, BaseElem(0)));
    LaurentPoly col = lp_mod_monic(f, g);
    for (int j = 0; j < n; ++j) {
        for (auto& [e, c] : col.coeffs) M[e][j] = c;
        if (j + 1 < n) {
            col = lp_shift(col, 1);
            if (!col.is_zero() && *col.deg() >= n) {
                // reduce the single overflow term t^n by g
                BaseElem lead = col.coeff(n);
                col.set(n, BaseElem(0));
                for (auto& [eg, cg] : g.coeffs)
                    if (eg < n) col.set(eg, base.sub(col.coeff(eg), base.mul(lead, cg)));
            }
        }
    }

    std::vector<BaseElem> e1(n, BaseElem(0));
    e1[0] = 1;
    BaseSolve sol = solve_unit_det(base, M, e1);

    LaurentPoly u(base);
    for (int i = 0; i < n; ++i) u.set(i, sol.x[i]);
    return u;
}

std::pair<LaurentPoly, LaurentPoly> top_bottom_bezout(const LaurentPoly& f,
                                                      const LaurentPoly& g) {
    const LocalBase& base = f.base;
    if (g.base != base) fail(ErrCode::BadInput, "top_bottom_bezout: mixed bases");
    if (!weierstrass_test(g))
        fail(ErrCode::NotWeierstrass, "top_bottom_bezout: g is not a Weierstrass polynomial");
    if (!f.is_zero() && *f.val() < 0)
        fail(ErrCode::NonUnitConstantTerm, "top_bottom_bezout: f does not lie in R[t]");
    if (!base.is_unit(f.coeff(0)))
        fail(ErrCode::NonUnitConstantTerm,
             "top_bottom_bezout: constant coefficient of f is not a unit");

    if (*g.deg() == 0) {
        // g == 1: trivially comaximal
        return {lp_zero(base), lp_const(base, 1)};
    }
    LaurentPoly u = invert_mod_monic(f, g);
    LaurentPoly one = lp_const(base, 1);
    LaurentPoly v = lp_div_exact_monic(one - u * f, g);
    return {u, v};
}

} // namespace umlab
