#include "umlab/series.hpp"
#include <sstream>

namespace umlab {

static void require_same_base(const TruncSeries& a, const TruncSeries& b, const char* who) {
    if (a.base != b.base) fail(ErrCode::BadInput, std::string(who) + ": mixed bases");
}

TruncSeries series_from_laurent(const LaurentPoly& a, int P) {
    if (!a.is_zero() && *a.deg() >= P)
        fail(ErrCode::PrecisionLoss, "series_from_laurent: degree >= precision, not lossless");
    TruncSeries s(a.base, P);
    s.coeffs = a.coeffs;
    return s;
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
    require_same_base(a, b, "series_add");
    TruncSeries r(a.base, std::min(a.precision, b.precision));
    for (auto& [e, c] : a.coeffs) r.set(e, c);
    for (auto& [e, c] : b.coeffs) r.set(e, r.base.add(r.coeff(e), c));
    return r;
}

TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
    return series_add(a, series_neg(b));
}

TruncSeries series_neg(const TruncSeries& a) {
    TruncSeries r(a.base, a.precision);
    for (auto& [e, c] : a.coeffs) r.coeffs[e] = a.base.neg(c);
    return r;
}

TruncSeries series_scale(const TruncSeries& a, const BaseElem& c) {
    TruncSeries r(a.base, a.precision);
    for (auto& [e, v] : a.coeffs) r.set(e, a.base.mul(v, c));
    return r;
}

TruncSeries series_shift(const TruncSeries& a, int k) {
    TruncSeries r(a.base, a.precision + k);
    for (auto& [e, c] : a.coeffs) r.coeffs[e + k] = c;
    return r;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    require_same_base(a, b, "series_mul");
    // Unknown valuation contributes its precision as the lower bound
    int va = a.valuation().value_or(a.precision);
    int vb = b.valuation().value_or(b.precision);
    int P = std::min(a.precision + vb, b.precision + va);
    TruncSeries r(a.base, P);
    if (a.coeffs.empty() || b.coeffs.empty()) return r; // zero window mod t^P
    // nonzero windows: stored exponents sit strictly below precision, so
    // P > va + vb and the result window is never empty
    if (P <= va + vb) fail(ErrCode::PrecisionLoss, "series_mul: no known coefficients remain");
    for (auto& [ea, ca] : a.coeffs) {
        if (ea + vb >= P) break;
        for (auto& [eb, cb] : b.coeffs) {
            if (ea + eb >= P) break;
            r.set(ea + eb, r.base.add(r.coeff(ea + eb), r.base.mul(ca, cb)));
        }
    }
    return r;
}

TruncSeries series_invert(const TruncSeries& a) {
    auto v = a.valuation();
    if (!v) fail(ErrCode::PrecisionLoss, "series_invert: valuation unknown (all-zero window)");
    BaseElem low = a.coeffs.begin()->second;
    if (!a.base.is_unit(low))
        fail(ErrCode::NotAUnit, "series_invert: lowest known coefficient " +
                                    a.base.to_string(low) + " is not a unit");
    // a = t^v * u with u known mod t^(P-v); u^-1 by the standard recurrence,
    // then shift: result known mod t^(P-2v)
    int Pu = a.precision - *v;
    BaseElem c0 = a.base.inv(low);
    std::map<int, BaseElem> inv; // u^-1 coefficients, index 0..Pu-1
    inv[0] = c0;
    for (int n = 1; n < Pu; ++n) {
        BaseElem s(0);
        for (int i = 1; i <= n; ++i) {
            auto it = a.coeffs.find(*v + i);
            if (it == a.coeffs.end()) continue;
            auto jt = inv.find(n - i);
            if (jt == inv.end()) continue;
            s = a.base.add(s, a.base.mul(it->second, jt->second));
        }
        BaseElem cn = a.base.neg(a.base.mul(s, c0));
        if (cn != 0) inv[n] = a.base.canon(cn);
    }
    TruncSeries r(a.base, Pu - *v);
    for (auto& [i, c] : inv) r.set(i - *v, c);
    return r;
}

LaurentPoly truncate_at(const TruncSeries& a, int k) {
    if (k >= a.precision)
        fail(ErrCode::PrecisionLoss, "truncate_at: bound " + std::to_string(k) +
                                         " not below precision " + std::to_string(a.precision));
    LaurentPoly r(a.base);
    for (auto& [e, c] : a.coeffs) {
        if (e > k) break;
        r.coeffs[e] = c;
    }
    return r;
}

TruncSeries residue_reduce(const TruncSeries& a) {
    a.base.require_local("residue_reduce");
    TruncSeries r(a.base.residue_field(), a.precision);
    for (auto& [e, c] : a.coeffs) r.set(e, a.base.residue(c));
    return r;
}

LaurentPoly residue_reduce(const LaurentPoly& a) {
    a.base.require_local("residue_reduce");
    LaurentPoly r(a.base.residue_field());
    for (auto& [e, c] : a.coeffs) r.set(e, a.base.residue(c));
    return r;
}

TruncSeries coefficient_lift(const TruncSeries& a, LocalBase target) {
    if (target.residue_field() != a.base)
        fail(ErrCode::BadInput, "coefficient_lift: residue field of " + target.describe() +
                                    " is not " + a.base.describe());
    TruncSeries r(target, a.precision);
    for (auto& [e, c] : a.coeffs) r.set(e, target.lift(c));
    return r;
}

LaurentPoly coefficient_lift(const LaurentPoly& a, LocalBase target) {
    if (target.residue_field() != a.base)
        fail(ErrCode::BadInput, "coefficient_lift: residue field of " + target.describe() +
                                    " is not " + a.base.describe());
    LaurentPoly r(target);
    for (auto& [e, c] : a.coeffs) r.set(e, target.lift(c));
    return r;
}

std::string series_to_string(const TruncSeries& a) {
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : a.coeffs) {
        if (!first) os << " + ";
        first = false;
        os << a.base.to_string(c);
        if (e != 0) os << "*t^" << e;
    }
    if (first) os << "0";
    os << " + O(t^" << a.precision << ")";
    return os.str();
}

} // namespace umlab
