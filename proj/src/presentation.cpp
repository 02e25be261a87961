#include "umlab/presentation.hpp"

#include <algorithm>

namespace umlab {

namespace {

std::string xname(int i, int j) {
    return "x_" + std::to_string(i) + "_" + std::to_string(j);
}
std::string yname(int i, int j) {
    return "y_" + std::to_string(i) + "_" + std::to_string(j);
}

int var_pos(const std::vector<std::string>& vars, const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) fail(ErrCode::BadInput, "unknown variable " + name);
    return (int)(it - vars.begin());
}

} // namespace

RingPresentation build_presentation(int r, int k, int n, LocalBase base) {
    if (r < 2) fail(ErrCode::BadInput, "presentation: need r >= 2");
    if (k < 0 || n < 0) fail(ErrCode::BadInput, "presentation: k, n must be nonnegative");

    RingPresentation pres;
    pres.base = base;
    pres.r = r;
    pres.k = k;
    pres.n = n;
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= n; ++j) {
            pres.vars.push_back(xname(i, j));
            pres.vars.push_back(yname(i, j));
        }
    pres.grades.assign(pres.vars.size(), 1);
    for (int l = 0; l <= n; ++l) {
        if (l == k) continue;
        pres.relations.push_back(pairing_poly(pres, l));
        pres.relation_degrees.push_back(l);
    }
    return pres;
}

MvPoly pairing_poly(const RingPresentation& pres, int ell) {
    if (ell < 0) fail(ErrCode::BadInput, "pairing polynomial: negative index");
    MvPoly p = mv_zero(pres.base, pres.vars);
    const int nv = (int)pres.vars.size();
    for (int i = 0; i <= pres.r; ++i)
        for (int j = 0; j <= ell; ++j) {
            if (j > pres.n || ell - j > pres.n) continue;
            ExpVec e(nv, 0);
            e[var_pos(pres.vars, xname(i, j))] += 1;
            e[var_pos(pres.vars, yname(i, ell - j))] += 1;
            p.add_term(e, BaseElem(1));
        }
    return p;
}

MvPoly a_var(const RingPresentation& pres, int j) {
    return mv_var(pres.base, pres.vars, xname(0, j));
}
MvPoly b_var(const RingPresentation& pres, int j) {
    return mv_var(pres.base, pres.vars, yname(0, j));
}

void grading_check(const RingPresentation& pres) {
    if (pres.grades.size() != pres.vars.size())
        fail(ErrCode::BadInput, "grading: grade list does not match the variables");
    for (size_t idx = 0; idx < pres.relations.size(); ++idx) {
        auto d = pres.relations[idx].homogeneous_degree(&pres.grades);
        if (!d)
            fail(ErrCode::NonHomogeneous,
                 "relation " + std::to_string(idx) + " is not homogeneous");
    }
}

ChainCell chain_cell(const RingPresentation& pres, int ell, int i) {
    if (ell < 0 || ell > pres.n + 1 || i < -1 || i > std::min(ell, pres.n))
        fail(ErrCode::BadInput, "chain cell: indices out of range");
    ChainCell cell;
    cell.ell = ell;
    cell.i = i;
    for (int l = pres.n; l >= ell; --l) {
        if (l == pres.k) continue;
        cell.relations.push_back(pairing_poly(pres, l));
        cell.relation_degrees.push_back(l);
    }
    for (int j = 0; j <= i; ++j) cell.relations.push_back(a_var(pres, j));
    return cell;
}

std::vector<ChainCell> cchain_build(const RingPresentation& pres) {
    std::vector<ChainCell> grid;
    for (int ell = pres.n + 1; ell >= 0; --ell)
        for (int i = -1; i <= std::min(ell, pres.n); ++i)
            grid.push_back(chain_cell(pres, ell, i));
    return grid;
}

LocalizationData select_localization_data(const RingPresentation& pres, int ell, int i) {
    const int k = pres.k, n = pres.n;
    if (i < 0 || i > ell || ell > n)
        fail(ErrCode::BadInput, "localization data: need 0 <= i <= ell <= n");

    LocalizationData data;
    data.ell = ell;
    data.i = i;

    // Killing x_0_0 .. x_0_(i-1) realizes the cell's a-quotients inside the
    // ambient polynomial ring.
    std::map<std::string, std::string> assign;
    for (const auto& v : pres.vars) assign[v] = v;
    for (int j = 0; j < i; ++j) assign[xname(0, j)] = "";
    std::vector<std::string> kept;
    for (const auto& v : pres.vars)
        if (!assign[v].empty()) kept.push_back(v);

    auto push = [&](int b_index, int p_index) {
        data.t_idx.push_back(b_index);
        data.f_idx.push_back(p_index);
        data.t.push_back(mv_rename(b_var(pres, b_index), kept, assign));
        data.f.push_back(mv_rename(pairing_poly(pres, p_index), kept, assign));
    };
    if (ell <= k && k <= n) {
        for (int m = 0; m <= n - ell - 1; ++m) {
            if (m < k - ell)
                push(ell + m - i, ell + m);
            else
                push(ell + m + 1 - i, ell + m + 1);
        }
    } else {
        for (int m = 0; m <= n - ell; ++m) push(ell + m - i, ell + m);
    }
    data.a = mv_rename(a_var(pres, i), kept, assign);

    // Ambient variables: everything kept except the b's promoted to t's.
    for (const auto& v : kept) {
        bool promoted = false;
        for (int idx : data.t_idx) promoted = promoted || (v == yname(0, idx));
        if (!promoted) data.T.push_back(v);
    }

    // Triangularity: f_m = a * t_m - g_m with g_m free of t_j for j >= m.
    const int q = (int)data.f.size();
    for (int m = 0; m < q; ++m) {
        MvPoly at = data.a * data.t[m];
        if (at.terms.size() != 1)
            fail(ErrCode::TriangularityViolation, "pivot monomial is not a monomial");
        if (data.f[m].coeff(at.terms.begin()->first) != 1)
            fail(ErrCode::TriangularityViolation,
                 "pivot monomial missing or non-unit in relation " + std::to_string(m));
        MvPoly g = data.f[m] - at;
        for (int j = m; j < q; ++j) {
            int pos = var_pos(kept, yname(0, data.t_idx[j]));
            for (const auto& [e, c] : g.terms)
                if (e[pos] != 0)
                    fail(ErrCode::TriangularityViolation,
                         "adjoined variable " + std::to_string(j) +
                             " occurs outside its pivot in relation " + std::to_string(m));
        }
    }
    return data;
}

} // namespace umlab
