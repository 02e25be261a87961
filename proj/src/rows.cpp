#include "umlab/rows.hpp"
#include "umlab/bezout.hpp"
#include "umlab/rng.hpp"

#include <algorithm>

namespace umlab {

namespace {

// sum(row[i] * complement[i]) as an exact Laurent polynomial.
LaurentPoly pairing(const RowBundle& b) {
    LaurentPoly s = lp_zero(b.base);
    for (size_t i = 0; i < b.row.size(); ++i)
        s = s + b.row[i] * b.complement[i];
    return s;
}

// Largest |exponent| appearing across a vector of Laurent polynomials.
int exponent_spread(const std::vector<LaurentPoly>& v) {
    int m = 0;
    for (const auto& f : v) {
        if (f.is_zero()) continue;
        m = std::max(m, std::abs(*f.val()));
        m = std::max(m, std::abs(*f.deg()));
    }
    return m;
}

// Column update W := W * (I + c * E_(j,i)): column i += column j * c.
void witness_apply_elementary(LaurentMat& W, int j, int i, const LaurentPoly& c) {
    for (int a = 0; a < W.rows; ++a)
        W.at(a, i) = W.at(a, i) + W.at(a, j) * c;
}

} // namespace

void verify_bundle(const RowBundle& b) {
    if (b.row.size() != b.complement.size() || b.row.empty())
        fail(ErrCode::BadInput, "bundle: row and complement sizes differ");
    for (const auto& f : b.row)
        if (f.base != b.base) fail(ErrCode::BadInput, "bundle: row entry over wrong base");
    for (const auto& f : b.complement)
        if (f.base != b.base) fail(ErrCode::BadInput, "bundle: complement entry over wrong base");
    if (pairing(b) != b.unit_witness)
        fail(ErrCode::NotUnimodular, "bundle: row . complement does not match the stored witness");
    if (!lp_is_unit(b.unit_witness))
        fail(ErrCode::NotUnimodular, "bundle: stored witness is not a unit monomial");
}

void apply_elementary(RowBundle& b, int j, int i, const LaurentPoly& c) {
    if (i == j || i < 0 || j < 0 || i > b.r() || j > b.r())
        fail(ErrCode::BadInput, "elementary factor: indices out of range or equal");
    // Row picks up column i += column j * c; the complement goes through the
    // inverse factor, so the pairing is unchanged exactly.
    b.row[i] = b.row[i] + b.row[j] * c;
    b.complement[j] = b.complement[j] - c * b.complement[i];
}

std::pair<RowBundle, GLWitness> gen_example(int r, LocalBase base, uint64_t seed, int steps) {
    if (r < 1) fail(ErrCode::BadInput, "gen_example: need r >= 1");
    if (steps < 0) fail(ErrCode::BadInput, "gen_example: negative step count");
    base.require_local("gen_example");

    RowBundle b;
    b.base = base;
    b.row.assign((size_t)r + 1, lp_zero(base));
    b.complement.assign((size_t)r + 1, lp_zero(base));
    b.row[0] = lp_const(base, 1);
    b.complement[0] = lp_const(base, 1);
    b.unit_witness = lp_const(base, 1);
    b.gen = GenInfo{seed, steps};

    GLWitness w;
    w.matrix = LaurentMat::identity(base, r + 1);
    w.det_witness = lp_const(base, 1);

    Rng rng(seed);
    for (int s = 0; s < steps; ++s) {
        int j = (int)rng.below((uint64_t)r + 1);
        int i = (int)rng.below((uint64_t)r);
        if (i >= j) ++i; // i != j, uniform over the rest

        LaurentPoly c(base);
        int nterms = 1 + (int)rng.below(2);
        for (int tcount = 0; tcount < nterms; ++tcount) {
            int e = (int)rng.range(-2, 2);
            long mag = 1 + (long)rng.below(2);
            long sgn = rng.below(2) ? 1 : -1;
            c.set(e, base.add(c.coeff(e), BaseElem(sgn * mag)));
        }
        if (c.is_zero()) c.set((int)rng.range(-2, 2), BaseElem(1));

        apply_elementary(b, j, i, c);
        witness_apply_elementary(w.matrix, j, i, c);
        GLFactor f;
        f.type = GLFactor::Elementary;
        f.j = j;
        f.i = i;
        f.coeff = c;
        w.provenance.push_back(f);
    }
    verify_bundle(b);
    return {b, w};
}

// ---------------------------------------------------------------------------
// Residue normalization
// ---------------------------------------------------------------------------

ResidueNormalizeResult residue_normalize(const RowBundle& b, int P) {
    b.base.require_local("residue_normalize");
    if (b.r() < 2)
        fail(ErrCode::BadInput, "residue_normalize: need at least three row entries");
    if (P < 1) fail(ErrCode::BadInput, "residue_normalize: precision must be positive");
    verify_bundle(b);

    const LocalBase F = b.base.residue_field();
    const int n = b.r() + 1;

    // Internal working precision: generous slack so every factor coefficient
    // is still known past exponent P after the divisions below.
    const int V = std::max(exponent_spread(b.row), 1);
    const int P_int = P + 8 * (V + 2) + 8;

    // Residue row as truncated series over the residue field.
    std::vector<TruncSeries> xr;
    xr.reserve(n);
    for (const auto& f : b.row)
        xr.push_back(residue_reduce(series_from_laurent(f, P_int)));

    bool any = false;
    for (const auto& s : xr) any = any || !s.coeffs.empty();
    if (!any)
        fail(ErrCode::DegenerateRow,
             "residue_normalize: every residue entry vanishes; no pivot available");

    // Already in the target pattern (0, 1, 0, .., 0): identity witness.
    {
        bool normal = true;
        for (int i = 0; i < n && normal; ++i) {
            TruncSeries want(F, P_int);
            if (i == 1) want.set(0, BaseElem(1));
            normal = xr[i].coeffs == want.coeffs;
        }
        if (normal) {
            ResidueNormalizeResult out;
            out.bundle = b;
            out.witness.matrix = LaurentMat::identity(b.base, n);
            out.witness.det_witness = lp_const(b.base, 1);
            return out;
        }
    }

    // Pivot: entry of minimal valuation, ties to the smallest index.
    int piv = -1;
    int best = 0;
    for (int i = 0; i < n; ++i) {
        auto v = xr[i].valuation();
        if (!v) continue;
        if (piv < 0 || *v < best) {
            piv = i;
            best = *v;
        }
    }

    struct Step {
        int j, i;
        TruncSeries c;
    };
    std::vector<Step> schedule;
    auto push_step = [&](int j, int i, const TruncSeries& c) {
        if (c.coeffs.empty()) return; // identity factor, skip
        schedule.push_back({j, i, c});
        TruncSeries upd = series_add(xr[i], series_mul(c, xr[j]));
        xr[i] = upd;
    };

    // Route through position 0 when the pivot already sits at position 1:
    // the tie-break guarantees val(xr[0]) > val(xr[1]) there, so adding
    // position 1 into position 0 cannot cancel the minimal term.
    if (piv == 1) {
        TruncSeries one(F, P_int);
        one.set(0, BaseElem(1));
        push_step(1, 0, one);
        piv = 0;
    }

    // Transfer: position 1 += c * pivot with c = (1 - xr[1]) / xr[piv],
    // making position 1 exactly 1 within the window.
    {
        TruncSeries one(F, P_int);
        one.set(0, BaseElem(1));
        TruncSeries c = series_mul(series_sub(one, xr[1]), series_invert(xr[piv]));
        push_step(piv, 1, c);
    }

    // Clear every other position against the 1 at position 1.
    for (int i = 0; i < n; ++i) {
        if (i == 1) continue;
        if (xr[i].coeffs.empty()) continue;
        push_step(1, i, series_neg(xr[i]));
    }

    // Lift each factor coefficient to an exact polynomial over the base and
    // replay the schedule on the exact bundle.
    ResidueNormalizeResult out;
    out.bundle = b;
    out.witness.matrix = LaurentMat::identity(b.base, n);
    out.witness.det_witness = lp_const(b.base, 1);
    for (const auto& st : schedule) {
        LaurentPoly c = coefficient_lift(truncate_at(st.c, st.c.precision - 1), b.base);
        apply_elementary(out.bundle, st.j, st.i, c);
        witness_apply_elementary(out.witness.matrix, st.j, st.i, c);
        GLFactor f;
        f.type = GLFactor::Elementary;
        f.j = st.j;
        f.i = st.i;
        f.coeff = c;
        out.witness.provenance.push_back(f);
    }

    // Gate: the residue of the transformed row must match (0, 1, 0, .., 0)
    // modulo t^P. With the slack above this only trips on genuine precision
    // starvation.
    for (int i = 0; i < n; ++i) {
        LaurentPoly res = residue_reduce(out.bundle.row[i]);
        if (i == 1) res = res - lp_const(F, 1);
        if (!res.is_zero() && *res.val() < P)
            fail(ErrCode::PrecisionLoss,
                 "residue_normalize: pattern check failed below the requested precision");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Full reduction
// ---------------------------------------------------------------------------

ReductionResult weierstrass_reduce(const RowBundle& b, int P) {
    b.base.require_local("weierstrass_reduce");
    if (b.r() < 2)
        fail(ErrCode::BadInput, "weierstrass_reduce: need at least three row entries");
    verify_bundle(b);

    const int n = b.r() + 1;
    const LocalBase base = b.base;

    // Witness u0 * t^j.
    const int j_exp = *b.unit_witness.val();
    const BaseElem u0 = b.unit_witness.coeff(j_exp);

    // Step 1: residue normalization.
    ResidueNormalizeResult rn = residue_normalize(b, P);
    std::vector<LaurentPoly> x = rn.bundle.row;
    std::vector<LaurentPoly> y = rn.bundle.complement;

    // Step 2: clear denominator powers of t. After shifting by t^N both the
    // row and the rescaled complement live in R[t], and the pairing becomes
    // t^k with k = 2N + j >= 0.
    int N = 0;
    for (const auto& f : x)
        if (!f.is_zero()) N = std::max(N, -*f.val());
    for (const auto& f : y)
        if (!f.is_zero()) N = std::max(N, -*f.val());
    const int k = 2 * N + j_exp;
    if (k < 0)
        fail(ErrCode::BadInput, "weierstrass_reduce: negative pairing exponent");
    if (P < k + 2)
        fail(ErrCode::PrecisionLoss,
             "weierstrass_reduce: precision must be at least k + 2");

    std::vector<LaurentPoly> xs, ys;
    xs.reserve(n);
    ys.reserve(n);
    const BaseElem u0inv = base.inv(u0);
    for (const auto& f : x) xs.push_back(lp_shift(f, N));
    for (const auto& f : y) ys.push_back(lp_scale(lp_shift(f, N), u0inv));

    {
        LaurentPoly s = lp_zero(base);
        for (int i = 0; i < n; ++i) s = s + xs[i] * ys[i];
        if (s != lp_monomial(base, BaseElem(1), k))
            fail(ErrCode::NotUnimodular, "weierstrass_reduce: pairing is not t^k after shift");
    }

    // Step 3: one structured correction factor M = I + ys * (t*d)^T chops
    // every entry to degree <= k and plants the t^(k+1) head on entry 0:
    // x'' * M == p exactly.
    std::vector<LaurentPoly> d(n, lp_zero(base)), p(n, lp_zero(base));
    for (int i = 0; i < n; ++i) {
        LaurentPoly head = lp_truncate_le(xs[i], k);
        LaurentPoly tail = lp_shift(xs[i] - head, -(k + 1)); // exact: tail val >= k+1
        if (i == 0) {
            d[0] = lp_const(base, 1) - tail;
            p[0] = head + lp_monomial(base, BaseElem(1), k + 1);
        } else {
            d[i] = -tail;
            p[i] = head;
        }
    }

    LaurentMat M = LaurentMat::identity(base, n);
    std::vector<LaurentPoly> td(n, lp_zero(base));
    for (int i = 0; i < n; ++i) td[i] = lp_shift(d[i], 1);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            M.at(a, c) = M.at(a, c) + ys[a] * td[c];

    if (row_times_mat(xs, M) != p)
        fail(ErrCode::NotUnimodular, "weierstrass_reduce: correction factor identity failed");

    // det(M) = 1 + (t*d) . ys, lowest coefficient 1, so a series unit.
    LaurentPoly D = lp_const(base, 1);
    for (int i = 0; i < n; ++i) D = D + td[i] * ys[i];
    if (D.coeff(0) != 1)
        fail(ErrCode::NotUnimodular, "weierstrass_reduce: correction determinant not 1 mod t");

    // Step 4: cofactors. z = ys / det(M) solves p . z = t^k as series; its
    // truncation is repaired to an exact certificate through the structured
    // Bezout pair for p[0].
    const int ell = k;
    const int PD = std::max(P, (D.deg() ? *D.deg() : 0) + 1);
    TruncSeries Dinv = series_invert(series_from_laurent(D, PD));
    std::vector<LaurentPoly> ztil(n, lp_zero(base));
    for (int i = 0; i < n; ++i) {
        if (ys[i].is_zero()) continue;
        int Pi = std::max(PD, *ys[i].deg() + 1);
        TruncSeries zi = series_mul(series_from_laurent(ys[i], Pi), Dinv);
        ztil[i] = truncate_at(zi, ell + 1);
    }

    LaurentPoly s = lp_zero(base);
    for (int i = 0; i < n; ++i) s = s + p[i] * ztil[i];
    LaurentPoly diff = s - lp_monomial(base, BaseElem(1), ell);
    if (!diff.is_zero() && *diff.val() <= ell)
        fail(ErrCode::NotUnimodular, "weierstrass_reduce: truncated solution misses t^ell");
    LaurentPoly ztail = lp_shift(diff, -(ell + 1)); // exact by the check above

    auto [u, v] = top_bottom_bezout(lp_const(base, 1) + lp_shift(ztail, 1), p[0]);

    std::vector<LaurentPoly> cof(n, lp_zero(base));
    for (int i = 0; i < n; ++i) cof[i] = u * ztil[i];
    cof[0] = cof[0] + v * lp_monomial(base, BaseElem(1), ell);

    {
        LaurentPoly chk = lp_zero(base);
        for (int i = 0; i < n; ++i) chk = chk + p[i] * cof[i];
        if (chk != lp_monomial(base, BaseElem(1), ell))
            fail(ErrCode::NotUnimodular, "weierstrass_reduce: certificate identity failed");
    }

    // Step 5: assemble the witness W = E * (t^N I) * M with its determinant.
    ReductionResult res;
    res.input = b;
    res.precision = P;
    res.k = k;
    res.ell = ell;
    res.row = p;
    res.certificate.cofactors = cof;
    res.certificate.target_exponent = ell;

    LaurentMat A = rn.witness.matrix;
    for (auto& entry : A.e) entry = lp_shift(entry, N);
    // A * M with M = I + ys * td^T: add (A*ys) * td^T.
    std::vector<LaurentPoly> Ays = mat_times_col(A, ys);
    LaurentMat W = A;
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c)
            W.at(a, c) = W.at(a, c) + Ays[a] * td[c];

    res.witness.matrix = W;
    res.witness.det_witness = lp_shift(D, N * n);
    res.witness.provenance = rn.witness.provenance;
    {
        GLFactor f;
        f.type = GLFactor::Shift;
        f.shift_n = N;
        res.witness.provenance.push_back(f);
        GLFactor g;
        g.type = GLFactor::Correction;
        g.corr = M;
        g.corr_u = ys;
        g.corr_w = td;
        res.witness.provenance.push_back(g);
    }

    verify_reduction(res);
    return res;
}

void verify_reduction(const ReductionResult& res) {
    const LocalBase base = res.input.base;
    const int n = res.input.r() + 1;
    if ((int)res.row.size() != n || (int)res.certificate.cofactors.size() != n)
        fail(ErrCode::NotUnimodular, "reduction: vector sizes inconsistent");
    verify_bundle(res.input);

    // Shape: p[0] is a Weierstrass polynomial of degree k + 1; the other
    // entries are plain polynomials of degree <= k.
    const int k = res.k;
    if (res.ell != res.certificate.target_exponent)
        fail(ErrCode::NotUnimodular, "reduction: certificate exponent mismatch");
    if (!weierstrass_test(res.row[0]))
        fail(ErrCode::NotWeierstrass, "reduction: leading entry is not Weierstrass");
    if (*res.row[0].deg() != k + 1)
        fail(ErrCode::NotWeierstrass, "reduction: leading entry has wrong degree");
    for (int i = 1; i < n; ++i) {
        if (res.row[i].is_zero()) continue;
        if (*res.row[i].val() < 0 || *res.row[i].deg() > k)
            fail(ErrCode::NotWeierstrass, "reduction: tail entry out of degree window");
    }

    // Certificate: sum(p[i] * c[i]) == t^ell exactly.
    LaurentPoly s = lp_zero(base);
    for (int i = 0; i < n; ++i) s = s + res.row[i] * res.certificate.cofactors[i];
    if (s != lp_monomial(base, BaseElem(1), res.ell))
        fail(ErrCode::NotUnimodular, "reduction: certificate identity does not hold");

    // Witness: input row times the stored matrix equals p exactly, and the
    // stored determinant is a recognized series unit.
    if (row_times_mat(res.input.row, res.witness.matrix) != res.row)
        fail(ErrCode::NotUnimodular, "reduction: witness does not carry the input to the output");
    if (!lp_is_series_unit(res.witness.det_witness))
        fail(ErrCode::NotAUnit, "reduction: witness determinant is not a series unit");

    // Provenance replay: the stored matrix and determinant must equal the
    // product over the factor list. Elementary factors have determinant 1,
    // a shift contributes t^(N*n), and a correction I + u*w^T contributes
    // 1 + w . u once the stored matrix is checked against u and w.
    LaurentMat R = LaurentMat::identity(base, n);
    LaurentPoly det = lp_const(base, 1);
    for (const auto& f : res.witness.provenance) {
        switch (f.type) {
        case GLFactor::Elementary:
            witness_apply_elementary(R, f.j, f.i, f.coeff);
            break;
        case GLFactor::Shift:
            for (auto& entry : R.e) entry = lp_shift(entry, f.shift_n);
            det = lp_shift(det, f.shift_n * n);
            break;
        case GLFactor::Correction: {
            if ((int)f.corr_u.size() != n || (int)f.corr_w.size() != n ||
                f.corr.rows != n || f.corr.cols != n)
                fail(ErrCode::NotUnimodular, "reduction: malformed correction factor");
            LaurentMat chk = LaurentMat::identity(base, n);
            for (int a = 0; a < n; ++a)
                for (int c = 0; c < n; ++c)
                    chk.at(a, c) = chk.at(a, c) + f.corr_u[a] * f.corr_w[c];
            if (!(chk == f.corr))
                fail(ErrCode::NotUnimodular, "reduction: correction factor is not I + u*w^T");
            std::vector<LaurentPoly> Ru = mat_times_col(R, f.corr_u);
            for (int a = 0; a < n; ++a)
                for (int c = 0; c < n; ++c)
                    R.at(a, c) = R.at(a, c) + Ru[a] * f.corr_w[c];
            LaurentPoly dM = lp_const(base, 1);
            for (int a = 0; a < n; ++a) dM = dM + f.corr_w[a] * f.corr_u[a];
            det = det * dM;
            break;
        }
        }
    }
    if (!(R == res.witness.matrix))
        fail(ErrCode::NotUnimodular, "reduction: provenance does not reproduce the witness matrix");
    if (det != res.witness.det_witness)
        fail(ErrCode::NotUnimodular, "reduction: provenance determinant mismatch");
}

LaurentMat complete_length2(const RowBundle& b) {
    if (b.r() != 1) fail(ErrCode::BadInput, "complete_length2: need exactly two entries");
    verify_bundle(b);

    // Fold a witness u0 * t^j != 1 into the complement so a*u + b*v == 1.
    const int j_exp = *b.unit_witness.val();
    const BaseElem u0 = b.unit_witness.coeff(j_exp);
    LaurentPoly u = lp_shift(lp_scale(b.complement[0], b.base.inv(u0)), -j_exp);
    LaurentPoly v = lp_shift(lp_scale(b.complement[1], b.base.inv(u0)), -j_exp);

    LaurentMat m(b.base, 2, 2);
    m.at(0, 0) = b.row[0];
    m.at(1, 0) = b.row[1];
    m.at(0, 1) = -v;
    m.at(1, 1) = u;
    if (mat_det(m) != lp_const(b.base, 1))
        fail(ErrCode::NotUnimodular, "complete_length2: completion determinant is not 1");
    return m;
}

} // namespace umlab
