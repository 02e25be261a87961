#include "umlab/mvpoly.hpp"
#include <algorithm>
#include <sstream>

namespace umlab {

std::optional<int> MvPoly::homogeneous_degree(const std::vector<int>* grades) const {
    std::optional<int> d;
    for (auto& [e, c] : terms) {
        int s = 0;
        for (size_t i = 0; i < e.size(); ++i) s += e[i] * (grades ? (*grades)[i] : 1);
        if (!d)
            d = s;
        else if (*d != s)
            return std::nullopt;
    }
    return d;
}

MvPoly mv_zero(LocalBase b, std::vector<std::string> vars) { return MvPoly(b, std::move(vars)); }

MvPoly mv_const(LocalBase b, std::vector<std::string> vars, const BaseElem& c) {
    MvPoly r(b, std::move(vars));
    r.add_term(ExpVec(r.vars.size(), 0), c);
    return r;
}

MvPoly mv_var(LocalBase b, std::vector<std::string> vars, const std::string& name) {
    MvPoly r(b, std::move(vars));
    auto it = std::find(r.vars.begin(), r.vars.end(), name);
    if (it == r.vars.end()) fail(ErrCode::BadInput, "mv_var: unknown variable " + name);
    ExpVec e(r.vars.size(), 0);
    e[it - r.vars.begin()] = 1;
    r.add_term(e, BaseElem(1));
    return r;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
    std::vector<std::string> m = a;
    for (auto& v : b)
        if (std::find(m.begin(), m.end(), v) == m.end()) m.push_back(v);
    return m;
}

MvPoly mv_extend(const MvPoly& a, const std::vector<std::string>& vars) {
    if (a.vars == vars) return a;
    std::vector<int> pos(a.vars.size());
    for (size_t i = 0; i < a.vars.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), a.vars[i]);
        if (it == vars.end())
            fail(ErrCode::BadInput, "mv_extend: variable " + a.vars[i] + " missing from target");
        pos[i] = (int)(it - vars.begin());
    }
    MvPoly r(a.base, vars);
    for (auto& [e, c] : a.terms) {
        ExpVec ne(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms[ne] = c;
    }
    return r;
}

static std::pair<MvPoly, MvPoly> aligned(const MvPoly& a, const MvPoly& b, const char* who) {
    if (a.base != b.base) fail(ErrCode::BadInput, std::string(who) + ": mixed bases");
    if (a.vars == b.vars) return {a, b};
    auto vars = merge_vars(a.vars, b.vars);
    return {mv_extend(a, vars), mv_extend(b, vars)};
}

MvPoly operator+(const MvPoly& a, const MvPoly& b) {
    auto [x, y] = aligned(a, b, "mv add");
    MvPoly r = x;
    for (auto& [e, c] : y.terms) r.add_term(e, c);
    return r;
}

MvPoly operator-(const MvPoly& a, const MvPoly& b) {
    auto [x, y] = aligned(a, b, "mv sub");
    MvPoly r = x;
    for (auto& [e, c] : y.terms) r.add_term(e, x.base.neg(c));
    return r;
}

MvPoly operator-(const MvPoly& a) {
    MvPoly r(a.base, a.vars);
    for (auto& [e, c] : a.terms) r.terms[e] = a.base.neg(c);
    return r;
}

MvPoly operator*(const MvPoly& a, const MvPoly& b) {
    auto [x, y] = aligned(a, b, "mv mul");
    MvPoly r(x.base, x.vars);
    for (auto& [ea, ca] : x.terms)
        for (auto& [eb, cb] : y.terms) {
            ExpVec e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, r.base.mul(ca, cb));
        }
    return r;
}

MvPoly mv_scale(const MvPoly& a, const BaseElem& c) {
    MvPoly r(a.base, a.vars);
    for (auto& [e, v] : a.terms) {
        BaseElem cc = a.base.mul(v, c);
        if (cc != 0) r.terms[e] = cc;
    }
    return r;
}

MvPoly mv_rename(const MvPoly& a, const std::vector<std::string>& target,
                 const std::map<std::string, std::string>& assign) {
    std::vector<int> pos(a.vars.size(), -1); // -1 = killed
    for (size_t i = 0; i < a.vars.size(); ++i) {
        auto it = assign.find(a.vars[i]);
        std::string name = it == assign.end() ? a.vars[i] : it->second;
        if (name.empty()) continue; // maps to zero
        auto jt = std::find(target.begin(), target.end(), name);
        if (jt == target.end())
            fail(ErrCode::BadInput, "mv_rename: target variable " + name + " missing");
        pos[i] = (int)(jt - target.begin());
    }
    MvPoly r(a.base, target);
    for (auto& [e, c] : a.terms) {
        ExpVec ne(target.size(), 0);
        bool dead = false;
        for (size_t i = 0; i < e.size() && !dead; ++i) {
            if (e[i] == 0) continue;
            if (pos[i] < 0)
                dead = true; // a killed variable occurs: the monomial vanishes
            else
                ne[pos[i]] += e[i];
        }
        if (!dead) r.add_term(ne, c);
    }
    return r;
}

MvPoly mv_residue(const MvPoly& a) {
    a.base.require_local("mv_residue");
    MvPoly r(a.base.residue_field(), a.vars);
    for (auto& [e, c] : a.terms) r.add_term(e, a.base.residue(c));
    return r;
}

std::string mv_to_string(const MvPoly& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : a.terms) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (c != 1 || std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) {
            os << a.base.to_string(c);
            printed = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << a.vars[i];
            if (e[i] != 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

} // namespace umlab
