#include "umlab/ideal_rows.hpp"

#include <algorithm>
#include <functional>

namespace umlab {

namespace {

MvPoly mv_pow(const MvPoly& a, int e) {
    MvPoly r = mv_const(a.base, a.vars, BaseElem(1));
    for (int i = 0; i < e; ++i) r = r * a;
    return r;
}

// Common variable list for a batch of polynomials, with every polynomial
// re-expressed over it.
std::vector<std::string> align(std::vector<std::vector<MvPoly>*> groups) {
    std::vector<std::string> vars;
    for (auto* g : groups)
        for (auto& f : *g) vars = merge_vars(vars, f.vars);
    for (auto* g : groups)
        for (auto& f : *g) f = mv_extend(f, vars);
    return vars;
}

// Normal forms of (row - (1,0,..,0)) against the ideal; throws
// NotInIdealForm naming the offending position.
void check_pattern(const std::vector<MvPoly>& row, const std::vector<MvPoly>& ideal_gens,
                   const GBContext& ctx, size_t pair_budget, const char* who) {
    GroebnerBasis gb;
    bool have_gb = false;
    if (!ideal_gens.empty()) {
        gb = buchberger(ideal_gens, ctx, pair_budget);
        have_gb = true;
    }
    for (size_t i = 0; i < row.size(); ++i) {
        MvPoly f = row[i];
        if (i == 0) f = f - mv_const(f.base, f.vars, BaseElem(1));
        MvPoly nf = have_gb ? normal_form(f, gb) : f;
        if (!nf.is_zero())
            fail(ErrCode::NotInIdealForm,
                 std::string(who) + ": entry " + std::to_string(i) +
                     " is not congruent to the standard pattern modulo the ideal");
    }
}

LaurentPoly lp_change_base(const LaurentPoly& a, LocalBase target) {
    LaurentPoly r(target);
    for (auto& [e, c] : a.coeffs) {
        if (!target.is_element(c))
            fail(ErrCode::BadInput, "coefficient does not lie in the target base");
        r.set(e, c);
    }
    return r;
}

// Smallest m with den | s^m; NotLocalizedAtS when no power works.
int clearing_power(const mpz_class& den, const mpz_class& s_abs) {
    if (den == 1) return 0;
    mpz_class x = den;
    while (x != 1) {
        mpz_class g = gcd(x, s_abs);
        if (g == 1)
            fail(ErrCode::NotLocalizedAtS,
                 "denominator has a prime factor outside the inverted element");
        x /= g;
    }
    mpz_class pw = 1;
    int m = 0;
    while (!mpz_divisible_p(pw.get_mpz_t(), den.get_mpz_t())) {
        pw *= s_abs;
        ++m;
    }
    return m;
}

} // namespace

void verify_ideal_row(const IdealRow& r, size_t pair_budget) {
    IdealRow w = r;
    std::vector<std::string> vars = align({&w.row, &w.complement, &w.ideal_gens});
    if (w.row.empty() || w.row.size() != w.complement.size())
        fail(ErrCode::BadInput, "ideal row: row and complement sizes differ");
    LocalBase base = w.row[0].base;
    if (!base.is_field())
        fail(ErrCode::BadInput, "ideal row checks need field coefficients");

    MvPoly s = mv_zero(base, vars);
    for (size_t i = 0; i < w.row.size(); ++i) s = s + w.row[i] * w.complement[i];
    if (s != mv_const(base, vars, BaseElem(1)))
        fail(ErrCode::NotUnimodular, "ideal row: row . complement is not 1");

    GBContext ctx{base, vars, MonomialOrder{MonomialOrder::DegRevLex}};
    check_pattern(w.row, w.ideal_gens, ctx, pair_budget, "ideal row");
}

std::vector<MvPoly> shrink_to_ideal_row(const std::vector<MvPoly>& row,
                                        const std::vector<MvPoly>& complement,
                                        const std::vector<MvPoly>& ideal_gens,
                                        size_t pair_budget) {
    std::vector<MvPoly> a = row, c = complement, gens = ideal_gens;
    std::vector<std::string> vars = align({&a, &c, &gens});
    if (a.empty() || a.size() != c.size())
        fail(ErrCode::BadInput, "shrink: row and complement sizes differ");
    LocalBase base = a[0].base;
    if (!base.is_field()) fail(ErrCode::BadInput, "shrink: need field coefficients");
    const int n = (int)a.size(); // r + 1 entries
    const int e_total = n + 1;   // exponent r + 2: forces a squared entry per term

    MvPoly one = mv_const(base, vars, BaseElem(1));
    {
        MvPoly s = mv_zero(base, vars);
        for (int i = 0; i < n; ++i) s = s + a[i] * c[i];
        if (s != one) fail(ErrCode::NotUnimodular, "shrink: row . complement is not 1");
    }
    GBContext ctx{base, vars, MonomialOrder{MonomialOrder::DegRevLex}};
    check_pattern(a, gens, ctx, pair_budget, "shrink input");

    // Powers of each a_i and of each a_i*c_i up to the expansion exponent.
    std::vector<std::vector<MvPoly>> prod_pow(n);
    for (int i = 0; i < n; ++i) {
        prod_pow[i].push_back(one);
        MvPoly pi = a[i] * c[i];
        for (int e = 1; e <= e_total; ++e) prod_pow[i].push_back(prod_pow[i].back() * pi);
    }

    // 1 = (sum a_i c_i)^(r+2) expanded by multinomials; every term has some
    // alpha_j >= 2, so a_j^2 can be absorbed: term = a_j^2 * (term / a_j^2).
    std::vector<MvPoly> spart(n, mv_zero(base, vars));
    std::vector<int> alpha(n, 0);
    std::vector<long long> fact(e_total + 1, 1);
    for (int i = 1; i <= e_total; ++i) fact[i] = fact[i - 1] * i;

    auto emit = [&]() {
        int j = -1;
        for (int i = 0; i < n; ++i)
            if (alpha[i] >= 2) {
                j = i;
                break;
            }
        if (j < 0) fail(ErrCode::BadInput, "shrink: internal pigeonhole failure");
        long coef = (long)fact[e_total];
        for (int i = 0; i < n; ++i) coef /= (long)fact[alpha[i]];
        // term / a_j^2 = c_j^2 * (a_j c_j)^(alpha_j - 2) * prod_{i != j} (a_i c_i)^alpha_i
        MvPoly t = mv_scale(one, BaseElem(coef)) * c[j] * c[j] * prod_pow[j][alpha[j] - 2];
        for (int i = 0; i < n; ++i)
            if (i != j && alpha[i] > 0) t = t * prod_pow[i][alpha[i]];
        spart[j] = spart[j] + t;
    };
    // Enumerate all compositions of e_total into n parts.
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            alpha[pos] = left;
            emit();
            return;
        }
        for (int e = 0; e <= left; ++e) {
            alpha[pos] = e;
            rec(pos + 1, left - e);
        }
    };
    rec(0, e_total);

    std::vector<MvPoly> b(n, mv_zero(base, vars));
    for (int i = 0; i < n; ++i) b[i] = a[i] * spart[i];

    MvPoly s = mv_zero(base, vars);
    for (int i = 0; i < n; ++i) s = s + a[i] * b[i];
    if (s != one)
        fail(ErrCode::NotUnimodular, "shrink: rebuilt complement does not pair to 1");
    check_pattern(b, gens, ctx, pair_budget, "shrink output");
    return b;
}

DescentResult roitman_descend(const RowBundle& b, long s) {
    if (b.base.kind != BaseKind::RationalField)
        fail(ErrCode::BadInput, "descent: row must live over the rationals");
    if (s == 0) fail(ErrCode::BadInput, "descent: inverted element must be nonzero");
    verify_bundle(b);
    if (b.unit_witness != lp_const(b.base, 1))
        fail(ErrCode::BadInput, "descent: pairing must be exactly 1");

    // The row must be polynomial and reduce to (1, 0, .., 0) mod (t); the
    // complement only needs substitution-clearable denominators, and t -> c*t
    // never touches constant terms, so those must be denominator-free already.
    for (size_t i = 0; i < b.row.size(); ++i) {
        const LaurentPoly& f = b.row[i];
        if (!f.is_zero() && *f.val() < 0)
            fail(ErrCode::BadInput, "descent row: entries must be polynomials in t");
        if (f.coeff(0) != (i == 0 ? BaseElem(1) : BaseElem(0)))
            fail(ErrCode::BadInput, "descent row: constant terms must form the standard pattern");
    }
    for (const LaurentPoly& f : b.complement) {
        if (!f.is_zero() && *f.val() < 0)
            fail(ErrCode::BadInput, "descent complement: entries must be polynomials in t");
        if (f.coeff(0).get_den() != 1)
            fail(ErrCode::NotLocalizedAtS,
                 "descent complement: constant-term denominator cannot be cleared");
    }

    const mpz_class s_abs = abs(mpz_class(s));
    int k = 0;
    auto bump_k = [&](const LaurentPoly& f) {
        for (auto& [e, q] : f.coeffs) {
            int m = clearing_power(q.get_den(), s_abs);
            if (m == 0) continue;
            // e >= 1 here: constant terms are denominator-free by the checks above.
            int need = (m + e - 1) / e;
            k = std::max(k, need);
        }
    };
    for (auto& f : b.row) bump_k(f);
    for (auto& f : b.complement) bump_k(f);

    BaseElem scale(1);
    for (int i = 0; i < k; ++i) scale *= s;

    DescentResult out;
    out.s = s;
    out.k = k;
    out.descended.base = LocalBase::Z();
    for (auto& f : b.row)
        out.descended.row.push_back(lp_change_base(lp_subst_scale(f, scale), LocalBase::Z()));
    for (auto& f : b.complement)
        out.descended.complement.push_back(
            lp_change_base(lp_subst_scale(f, scale), LocalBase::Z()));
    out.descended.unit_witness = lp_const(LocalBase::Z(), 1);
    verify_bundle(out.descended);
    return out;
}

LaurentMat roitman_lift_matrix(const LaurentMat& m, long s, int k) {
    if (s == 0) fail(ErrCode::BadInput, "lift: inverted element must be nonzero");
    if (k < 0) fail(ErrCode::BadInput, "lift: negative substitution exponent");
    BaseElem scale(1);
    for (int i = 0; i < k; ++i) scale /= s;

    LaurentMat out(LocalBase::Q(), m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            out.at(i, j) =
                lp_subst_scale(lp_change_base(m.at(i, j), LocalBase::Q()), scale);
    return out;
}

} // namespace umlab
