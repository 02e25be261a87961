#include "umlab/algebra_map.hpp"

namespace umlab {

AlgebraMap universal_map(const RingPresentation& pres, const RowBundle& bundle) {
    if (bundle.base != pres.base)
        fail(ErrCode::BadInput, "universal map: bundle and presentation bases differ");
    if (bundle.r() != pres.r)
        fail(ErrCode::BadInput, "universal map: row length does not match the presentation");

    AlgebraMap m;
    m.r = pres.r;
    m.k = pres.k;
    m.n = pres.n;
    m.target = bundle.base;

    auto read_vec = [&](const std::vector<LaurentPoly>& v, char letter) {
        for (int i = 0; i <= pres.r; ++i) {
            const LaurentPoly& f = v[i];
            if (!f.is_zero() && (*f.val() < 0 || *f.deg() > pres.n))
                fail(ErrCode::NotNormalized,
                     "universal map: entries must be polynomials of degree at most n");
            for (int j = 0; j <= pres.n; ++j) {
                std::string name = std::string(1, letter) + "_" + std::to_string(i) +
                                   "_" + std::to_string(j);
                m.images[name] = f.coeff(j);
            }
        }
    };
    read_vec(bundle.row, 'x');
    read_vec(bundle.complement, 'y');

    // The pairing polynomials must evaluate to the coefficients of t^k:
    // 1 at k, 0 elsewhere. Beyond 2n every pairing polynomial is zero.
    for (int l = 0; l <= 2 * pres.n; ++l) {
        BaseElem want = (l == pres.k) ? BaseElem(1) : BaseElem(0);
        if (evaluate(m, pairing_poly(pres, l)) != want)
            fail(ErrCode::NotNormalized,
                 "universal map: pairing polynomial " + std::to_string(l) +
                     " does not evaluate to coefficient of t^" + std::to_string(l) +
                     " of t^k");
    }
    if (pres.k > 2 * pres.n)
        fail(ErrCode::NotNormalized,
             "universal map: pairing exponent k exceeds every nonzero pairing polynomial");
    return m;
}

BaseElem evaluate(const AlgebraMap& m, const MvPoly& f) {
    BaseElem acc(0);
    for (const auto& [e, c] : f.terms) {
        BaseElem t = c;
        for (size_t vi = 0; vi < e.size(); ++vi) {
            if (e[vi] == 0) continue;
            auto it = m.images.find(f.vars[vi]);
            if (it == m.images.end())
                fail(ErrCode::BadInput, "evaluate: no image for variable " + f.vars[vi]);
            for (int p = 0; p < e[vi]; ++p) t = m.target.mul(t, it->second);
        }
        acc = m.target.add(acc, t);
    }
    return acc;
}

int stabilization_index(const AlgebraMap& m) {
    int n = 0;
    for (const auto& [name, img] : m.images) {
        if (img == 0) continue;
        auto pos = name.rfind('_');
        n = std::max(n, std::stoi(name.substr(pos + 1)));
    }
    return n;
}

NormalizedBundle normalize_for_map(const RowBundle& b) {
    verify_bundle(b);
    b.base.require_local("normalize_for_map");

    // The witness is a unit monomial u0 * t^j; fold u0 into the complement.
    const int j = *b.unit_witness.val();
    const BaseElem u0inv = b.base.inv(b.unit_witness.coeff(j));

    NormalizedBundle out;
    out.bundle.base = b.base;
    int neg_row = 0, neg_comp = 0;
    for (const auto& f : b.row)
        if (!f.is_zero()) neg_row = std::max(neg_row, -*f.val());
    for (const auto& f : b.complement)
        if (!f.is_zero()) neg_comp = std::max(neg_comp, -*f.val());
    for (const auto& f : b.row) out.bundle.row.push_back(lp_shift(f, neg_row));
    for (const auto& f : b.complement)
        out.bundle.complement.push_back(lp_shift(lp_scale(f, u0inv), neg_comp));

    out.k = j + neg_row + neg_comp;
    out.bundle.unit_witness = lp_monomial(b.base, BaseElem(1), out.k);
    for (const auto& f : out.bundle.row)
        if (!f.is_zero()) out.maxdeg = std::max(out.maxdeg, *f.deg());
    for (const auto& f : out.bundle.complement)
        if (!f.is_zero()) out.maxdeg = std::max(out.maxdeg, *f.deg());
    verify_bundle(out.bundle);
    return out;
}

} // namespace umlab
