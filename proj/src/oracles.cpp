#include "umlab/oracles.hpp"

#include <algorithm>

namespace umlab {

namespace {

std::string xname(int i, int j) {
    return "x_" + std::to_string(i) + "_" + std::to_string(j);
}
std::string yname(int i, int j) {
    return "y_" + std::to_string(i) + "_" + std::to_string(j);
}

MvPoly quad_pattern_4(LocalBase base, const std::vector<std::string>& T,
                      const std::string& c, const std::string& d,
                      const std::string& e, const std::string& f) {
    return mv_var(base, T, c) * mv_var(base, T, d) +
           mv_var(base, T, e) * mv_var(base, T, f);
}

} // namespace

MvPoly apply_variable_reduction(const VariableReduction& phi, const MvPoly& f) {
    // Unassigned source variables map to zero, per the definition.
    std::map<std::string, std::string> full;
    for (const auto& v : f.vars) {
        auto it = phi.assign.find(v);
        full[v] = it == phi.assign.end() ? std::string() : it->second;
    }
    return mv_rename(f, phi.target, full);
}

VariableReduction routing_reduction(const RingPresentation& pres, int ell) {
    if (ell < 0 || ell > pres.n)
        fail(ErrCode::BadInput, "routing reduction: relation index out of range");
    if (pres.r < 2)
        fail(ErrCode::BadInput, "routing reduction: needs at least three row entries");
    VariableReduction phi;
    if (ell == 0) {
        phi.target = {"c0", "d0", "e0", "f0"};
        phi.assign[xname(1, 0)] = "c0";
        phi.assign[yname(1, 0)] = "d0";
        phi.assign[xname(2, 0)] = "e0";
        phi.assign[yname(2, 0)] = "f0";
    } else {
        phi.target = {"c0", "d0", "e0", "f0", "cl", "dl", "el", "fl"};
        phi.assign[xname(1, 0)] = "c0";
        phi.assign[xname(1, ell)] = "cl";
        phi.assign[yname(1, 0)] = "d0";
        phi.assign[yname(1, ell)] = "dl";
        phi.assign[xname(2, 0)] = "e0";
        phi.assign[xname(2, ell)] = "el";
        phi.assign[yname(2, 0)] = "f0";
        phi.assign[yname(2, ell)] = "fl";
    }
    return phi;
}

int quadric_rank(const MvPoly& q) {
    if (q.base.kind != BaseKind::RationalField)
        fail(ErrCode::BadInput, "quadric rank: defined over the rationals");
    if (q.is_zero()) return 0;
    auto d = q.homogeneous_degree();
    if (!d || *d != 2)
        fail(ErrCode::NonHomogeneous, "quadric rank: input must be homogeneous of degree 2");

    const int n = (int)q.vars.size();
    std::vector<std::vector<BaseElem>> G(n, std::vector<BaseElem>(n, BaseElem(0)));
    for (const auto& [e, c] : q.terms) {
        int u = -1, v = -1;
        for (int i = 0; i < n; ++i) {
            if (e[i] == 2) u = v = i;
            if (e[i] == 1) (u < 0 ? u : v) = i;
        }
        if (u == v) {
            G[u][u] += c;
        } else {
            G[u][v] += c / 2;
            G[v][u] += c / 2;
        }
    }

    // Gaussian elimination over the rationals.
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int row = rank; row < n; ++row)
            if (G[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        std::swap(G[piv], G[rank]);
        for (int row = rank + 1; row < n; ++row) {
            if (G[row][col] == 0) continue;
            BaseElem factor = G[row][col] / G[rank][col];
            for (int j = col; j < n; ++j) G[row][j] -= factor * G[rank][j];
        }
        ++rank;
    }
    return rank;
}

PrecheckResult irreducibility_precheck(const MvPoly& g, const std::vector<MvPoly>& fs,
                                       const VariableReduction& phi) {
    PrecheckResult res;
    auto check_deg2 = [](const MvPoly& f, const char* who) {
        if (f.is_zero()) return;
        auto d = f.homogeneous_degree();
        if (!d || *d != 2)
            fail(ErrCode::NonHomogeneous,
                 std::string(who) + " must be homogeneous of degree 2");
    };
    check_deg2(g, "criterion target");
    for (const auto& f : fs) check_deg2(f, "criterion relation");

    // Condition (a): a unit monomial of g absent from every relation.
    {
        std::vector<std::string> vars = g.vars;
        for (const auto& f : fs) vars = merge_vars(vars, f.vars);
        MvPoly ge = mv_extend(g, vars);
        std::vector<MvPoly> fe;
        for (const auto& f : fs) fe.push_back(mv_extend(f, vars));
        bool found = false;
        for (const auto& [e, c] : ge.terms) {
            if (!ge.base.is_unit(c)) continue;
            bool absent = true;
            for (const auto& f : fe) absent = absent && (f.coeff(e) == 0);
            if (absent) {
                found = true;
                break;
            }
        }
        if (!found) {
            res.reason = "no unit monomial of the target avoids every relation";
            return res;
        }
    }

    const LocalBase base = g.base;
    MvPoly img = apply_variable_reduction(phi, g);
    std::vector<MvPoly> fimg;
    for (const auto& f : fs) fimg.push_back(apply_variable_reduction(phi, f));

    int nonzero = -1;
    for (size_t i = 0; i < fimg.size(); ++i) {
        if (fimg[i].is_zero()) continue;
        if (nonzero >= 0) {
            res.reason = "more than one relation survives the reduction";
            return res;
        }
        nonzero = (int)i;
    }

    if (phi.target.size() == 4) {
        MvPoly pat1 = quad_pattern_4(base, phi.target, "c0", "d0", "e0", "f0");
        if (img != mv_extend(pat1, img.vars)) {
            res.reason = "reduced target does not match the rank-4 pattern";
            return res;
        }
        if (nonzero >= 0) {
            res.reason = "a relation survives the four-variable reduction";
            return res;
        }
        res.case_id = 1;
        return res;
    }

    MvPoly pat2 = quad_pattern_4(base, phi.target, "c0", "dl", "e0", "fl") +
                  quad_pattern_4(base, phi.target, "cl", "d0", "el", "f0");
    if (img != mv_extend(pat2, img.vars)) {
        res.reason = "reduced target does not match the rank-8 pattern";
        return res;
    }
    if (nonzero < 0) {
        res.case_id = 2;
        return res;
    }
    MvPoly pat3 = quad_pattern_4(base, phi.target, "cl", "dl", "el", "fl");
    if (fimg[nonzero] == mv_extend(pat3, fimg[nonzero].vars)) {
        res.case_id = 3;
        res.witness_index = nonzero;
        return res;
    }
    res.reason = "surviving relation does not match the rank-4 pattern";
    return res;
}

PrecheckResult routing_precheck(const RingPresentation& pres, int ell, int i) {
    if (ell == pres.k)
        fail(ErrCode::BadInput, "routing: the omitted relation is not quotiented");
    if (ell < 0 || ell > pres.n || i < -1 || i > std::min(ell + 1, pres.n))
        fail(ErrCode::BadInput, "routing: cell indices out of range");

    // Ambient cell (ell+1, i): kill x_0_0 .. x_0_i in every polynomial.
    std::map<std::string, std::string> assign;
    for (const auto& v : pres.vars) assign[v] = v;
    for (int j = 0; j <= i; ++j) assign[xname(0, j)] = "";
    std::vector<std::string> kept;
    for (const auto& v : pres.vars)
        if (!assign[v].empty()) kept.push_back(v);

    MvPoly g = mv_rename(pairing_poly(pres, ell), kept, assign);
    std::vector<MvPoly> fs;
    for (int m = pres.n; m >= ell + 1; --m) {
        if (m == pres.k) continue;
        fs.push_back(mv_rename(pairing_poly(pres, m), kept, assign));
    }
    return irreducibility_precheck(g, fs, routing_reduction(pres, ell));
}

// ---------------------------------------------------------------------------
// Regular sequences
// ---------------------------------------------------------------------------

namespace {

// Coefficients of (1 - T^2)^c / (1 - T)^N through degree D.
std::vector<long long> ci_series(int c, int N, int D) {
    auto binom = [](long long a, long long b) -> long long {
        if (b < 0 || a < b) return 0;
        b = std::min(b, a - b);
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::vector<long long> out(D + 1, 0);
    for (int d = 0; d <= D; ++d) {
        long long acc = 0;
        for (int i = 0; 2 * i <= d && i <= c; ++i) {
            long long term = binom(c, i) * binom(N - 1 + d - 2 * i, N - 1);
            acc += (i % 2 == 0) ? term : -term;
        }
        out[d] = acc;
    }
    return out;
}

} // namespace

RegSeqReport regseq_hilbert(int r, int k, int n, LocalBase base, int D,
                            size_t pair_budget) {
    if (!base.is_field())
        fail(ErrCode::BadInput, "regular sequence check: need field coefficients");
    RingPresentation pres = build_presentation(r, k, n, base);
    grading_check(pres);

    RegSeqReport rep;
    rep.method = "hilbert";
    GBContext ctx{base, pres.vars, MonomialOrder{MonomialOrder::DegRevLex}};
    GroebnerBasis gb = buchberger(pres.relations, ctx, pair_budget);
    rep.pairs_processed = gb.pairs_processed;
    rep.hf = hilbert_function(gb, D);
    rep.expected = ci_series((int)pres.relations.size(), (int)pres.vars.size(), D);
    rep.pass = rep.hf == rep.expected;
    rep.detail = rep.pass ? "hilbert function matches the complete-intersection series"
                          : "hilbert function deviates from the complete-intersection series";
    return rep;
}

RegSeqReport regseq_quotient_list(const std::vector<MvPoly>& seq, const GBContext& ctx,
                                  size_t pair_budget) {
    RegSeqReport rep;
    rep.method = "quotient";
    std::vector<MvPoly> stage;
    for (size_t idx = 0; idx < seq.size(); ++idx) {
        const MvPoly& next = seq[idx];
        if (next.is_zero()) {
            rep.pass = false;
            rep.detail = "stage " + std::to_string(idx) + ": zero element";
            return rep;
        }
        if (!stage.empty()) {
            GroebnerBasis gb = buchberger(stage, ctx, pair_budget);
            rep.pairs_processed += gb.pairs_processed;
            if (normal_form(next, gb).is_zero()) {
                rep.pass = false;
                rep.detail =
                    "stage " + std::to_string(idx) + ": element lies in the previous ideal";
                return rep;
            }
            std::vector<MvPoly> quot = ideal_quotient(stage, next, ctx, pair_budget);
            for (const MvPoly& q : quot) {
                if (!normal_form(q, gb).is_zero()) {
                    rep.pass = false;
                    rep.detail = "stage " + std::to_string(idx) +
                                 ": ideal quotient strictly exceeds the stage ideal";
                    return rep;
                }
            }
        }
        stage.push_back(next);
    }
    rep.pass = true;
    rep.detail = "every stage quotient equals the stage ideal";
    return rep;
}

RegSeqReport regseq_quotient(int r, int k, int n, LocalBase base, size_t pair_budget) {
    if (!base.is_field())
        fail(ErrCode::BadInput, "regular sequence check: need field coefficients");
    RingPresentation pres = build_presentation(r, k, n, base);
    std::vector<MvPoly> seq;
    for (int l = n; l >= 0; --l) {
        if (l == k) continue;
        seq.push_back(pairing_poly(pres, l));
    }
    GBContext ctx{base, pres.vars, MonomialOrder{MonomialOrder::DegRevLex}};
    return regseq_quotient_list(seq, ctx, pair_budget);
}

// ---------------------------------------------------------------------------
// Localization isomorphism
// ---------------------------------------------------------------------------

LocalizationWitness localization_iso_verify(const RingPresentation& pres,
                                            const LocalizationData& data,
                                            size_t pair_budget) {
    if (!pres.base.is_field())
        fail(ErrCode::BadInput, "localization check: need field coefficients");

    LocalizationWitness wit;
    wit.data = data;

    const std::vector<std::string>& vars = data.a.vars; // the kept ambient list
    const LocalBase base = pres.base;
    const int q = (int)data.f.size();

    std::vector<int> tpos(q);
    for (int m = 0; m < q; ++m) {
        std::string name = "y_0_" + std::to_string(data.t_idx[m]);
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) fail(ErrCode::BadInput, "localization: adjoined variable missing");
        tpos[m] = (int)(it - vars.begin());
    }
    auto contains_t_from = [&](const MvPoly& f, int from) {
        for (const auto& [e, c] : f.terms)
            for (int j = from; j < q; ++j)
                if (e[tpos[j]] != 0) return true;
        return false;
    };

    // Solve r_m = (a*t_m - f_m)(r_0, .., r_(m-1)) / a as fractions num/a^exp.
    // Every monomial carries at most one adjoined variable (checked), so the
    // substitution is a single linear pass.
    for (int m = 0; m < q; ++m) {
        MvPoly g = data.a * data.t[m] - data.f[m]; // free of t_j for j >= m
        if (contains_t_from(g, m))
            fail(ErrCode::TriangularityViolation,
                 "localization: relation is not triangular in the adjoined variables");
        int E = 0;
        for (const auto& [e, c] : g.terms)
            for (int j = 0; j < m; ++j)
                if (e[tpos[j]] != 0) {
                    if (e[tpos[j]] != 1)
                        fail(ErrCode::TriangularityViolation,
                             "localization: adjoined variable appears with exponent > 1");
                    E = std::max(E, wit.fractions[j].exp);
                }
        // pow table of a up to E
        std::vector<MvPoly> apow{mv_const(base, vars, BaseElem(1))};
        for (int e = 1; e <= E; ++e) apow.push_back(apow.back() * data.a);

        MvPoly num = mv_zero(base, vars);
        for (const auto& [e, c] : g.terms) {
            int j_used = -1;
            for (int j = 0; j < m; ++j)
                if (e[tpos[j]] != 0) j_used = j;
            MvPoly mono(base, vars);
            if (j_used < 0) {
                mono.add_term(e, c);
                num = num + mono * apow[E];
            } else {
                ExpVec e2 = e;
                e2[tpos[j_used]] = 0;
                mono.add_term(e2, c);
                num = num + mono * wit.fractions[j_used].num * apow[E - wit.fractions[j_used].exp];
            }
        }
        wit.fractions.push_back(AFraction{num, E + 1});
    }

    // Membership certificates: a^M * (a^exp_m * t_m - num_m) in (f_0..f_{q-1}).
    GBContext ctx{base, vars, MonomialOrder{MonomialOrder::DegRevLex}};
    GroebnerBasis gb;
    if (q > 0) gb = buchberger(data.f, ctx, pair_budget);

    const int bound = 2 * q + 4;
    for (int m = 0; m < q; ++m) {
        MvPoly lhs = data.t[m];
        for (int e = 0; e < wit.fractions[m].exp; ++e) lhs = lhs * data.a;
        lhs = lhs - wit.fractions[m].num;
        int found = -1;
        MvPoly cur = lhs;
        for (int M = 0; M <= bound; ++M) {
            if (normal_form(cur, gb).is_zero()) {
                found = M;
                break;
            }
            cur = cur * data.a;
        }
        if (found < 0) {
            wit.pass = false;
            wit.detail = "generator " + std::to_string(m) +
                         ": no clearing power certifies the isomorphism";
            return wit;
        }
        wit.clearing_exponents.push_back(found);
    }
    wit.pass = true;
    wit.detail = "both composites are the identity on generators";
    return wit;
}

} // namespace umlab
