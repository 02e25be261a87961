#include "umlab/laurent.hpp"
#include <sstream>

namespace umlab {

static void require_same_base(const LaurentPoly& a, const LaurentPoly& b, const char* who) {
    if (a.base != b.base)
        fail(ErrCode::BadInput, std::string(who) + ": mixed bases " + a.base.describe() +
                                    " and " + b.base.describe());
}

LaurentPoly lp_zero(LocalBase b) { return LaurentPoly(b); }

LaurentPoly lp_const(LocalBase b, const BaseElem& c) {
    LaurentPoly r(b);
    r.set(0, c);
    return r;
}

LaurentPoly lp_monomial(LocalBase b, const BaseElem& c, int e) {
    LaurentPoly r(b);
    r.set(e, c);
    return r;
}

LaurentPoly lp_make(LocalBase b, std::initializer_list<std::pair<int, long>> terms) {
    LaurentPoly r(b);
    for (auto& [e, c] : terms) r.set(e, b.add(r.coeff(e), b.from_long(c)));
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_base(a, b, "lp add");
    LaurentPoly r = a;
    for (auto& [e, c] : b.coeffs) r.set(e, r.base.add(r.coeff(e), c));
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_base(a, b, "lp sub");
    LaurentPoly r = a;
    for (auto& [e, c] : b.coeffs) r.set(e, r.base.sub(r.coeff(e), c));
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r(a.base);
    for (auto& [e, c] : a.coeffs) r.coeffs[e] = a.base.neg(c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    require_same_base(a, b, "lp mul");
    LaurentPoly r(a.base);
    for (auto& [ea, ca] : a.coeffs)
        for (auto& [eb, cb] : b.coeffs)
            r.set(ea + eb, r.base.add(r.coeff(ea + eb), r.base.mul(ca, cb)));
    return r;
}

LaurentPoly lp_scale(const LaurentPoly& a, const BaseElem& c) {
    LaurentPoly r(a.base);
    for (auto& [e, v] : a.coeffs) r.set(e, a.base.mul(v, c));
    return r;
}

LaurentPoly lp_shift(const LaurentPoly& a, int k) {
    LaurentPoly r(a.base);
    for (auto& [e, v] : a.coeffs) r.coeffs[e + k] = v;
    return r;
}

LaurentPoly lp_truncate_le(const LaurentPoly& a, int k) {
    LaurentPoly r(a.base);
    for (auto& [e, v] : a.coeffs) {
        if (e > k) break;
        r.coeffs[e] = v;
    }
    return r;
}

LaurentPoly lp_subst_scale(const LaurentPoly& a, const BaseElem& c) {
    // t -> c*t sends a_e t^e to a_e c^e t^e; negative e needs c to be a unit
    LaurentPoly r(a.base);
    for (auto& [e, v] : a.coeffs) {
        BaseElem f(1);
        if (e >= 0) {
            BaseElem cp = c;
            for (int i = 0; i < e; ++i) f = a.base.mul(f, cp);
        } else {
            BaseElem ci = a.base.inv(c);
            for (int i = 0; i < -e; ++i) f = a.base.mul(f, ci);
        }
        r.set(e, a.base.mul(v, f));
    }
    return r;
}

bool lp_is_unit(const LaurentPoly& a) {
    return a.coeffs.size() == 1 && a.base.is_unit(a.coeffs.begin()->second);
}

bool lp_is_series_unit(const LaurentPoly& a) {
    a.base.require_local("lp_is_series_unit");
    return !a.coeffs.empty() && a.base.is_unit(a.coeffs.begin()->second);
}

LaurentPoly lp_div_tpow(const LaurentPoly& a, int k) { return lp_shift(a, -k); }

LaurentPoly lp_mod_monic(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero() || *g.val() < 0 || g.coeffs.rbegin()->second != 1)
        fail(ErrCode::BadInput, "lp_mod_monic: divisor must be monic with val >= 0");
    if (!f.is_zero() && *f.val() < 0)
        fail(ErrCode::BadInput, "lp_mod_monic: dividend must have val >= 0");
    int dg = *g.deg();
    LaurentPoly r = f;
    while (!r.is_zero() && *r.deg() >= dg) {
        int e = *r.deg();
        BaseElem lead = r.coeffs.rbegin()->second;
        // r -= lead * t^(e-dg) * g
        for (auto& [eg, cg] : g.coeffs)
            r.set(eg + e - dg, r.base.sub(r.coeff(eg + e - dg), r.base.mul(lead, cg)));
    }
    return r;
}

LaurentPoly lp_div_exact_monic(const LaurentPoly& a, const LaurentPoly& g) {
    if (g.is_zero() || *g.val() < 0 || g.coeffs.rbegin()->second != 1)
        fail(ErrCode::BadInput, "lp_div_exact_monic: divisor must be monic with val >= 0");
    if (a.is_zero()) return lp_zero(a.base);
    int shift = std::min(0, *a.val());
    LaurentPoly r = lp_shift(a, -shift); // now val(r) >= 0
    int dg = *g.deg();
    LaurentPoly q(a.base);
    while (!r.is_zero() && *r.deg() >= dg) {
        int e = *r.deg();
        BaseElem lead = r.coeffs.rbegin()->second;
        q.set(e - dg, lead);
        for (auto& [eg, cg] : g.coeffs)
            r.set(eg + e - dg, r.base.sub(r.coeff(eg + e - dg), r.base.mul(lead, cg)));
    }
    if (!r.is_zero())
        fail(ErrCode::NotInvertible, "lp_div_exact_monic: division leaves a remainder");
    return lp_shift(q, shift);
}

std::string lp_to_string(const LaurentPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : a.coeffs) {
        if (!first) os << " + ";
        first = false;
        os << a.base.to_string(c);
        if (e != 0) os << "*t^" << e;
    }
    return os.str();
}

} // namespace umlab
