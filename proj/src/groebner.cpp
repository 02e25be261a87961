#include "umlab/groebner.hpp"
#include <algorithm>
#include <set>

namespace umlab {

static int vec_deg(const ExpVec& a) {
    int s = 0;
    for (int x : a) s += x;
    return s;
}

static int degrevlex_cmp(const ExpVec& a, const ExpVec& b, size_t from) {
    int da = 0, db = 0;
    for (size_t i = from; i < a.size(); ++i) da += a[i];
    for (size_t i = from; i < b.size(); ++i) db += b[i];
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > from;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1; // larger last exponent loses
    }
    return 0;
}

int monomial_cmp(const ExpVec& a, const ExpVec& b, const MonomialOrder& ord) {
    switch (ord.kind) {
        case MonomialOrder::DegRevLex: return degrevlex_cmp(a, b, 0);
        case MonomialOrder::Lex:
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
            return 0;
        case MonomialOrder::ElimFirst:
            if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
            return degrevlex_cmp(a, b, 1);
    }
    return 0;
}

namespace {

using Term = std::pair<ExpVec, BaseElem>;

// terms sorted descending in the active order; [0] is the lead
struct GBPoly {
    std::vector<Term> t;
    bool zero() const { return t.empty(); }
    const ExpVec& lm() const { return t.front().first; }
    const BaseElem& lc() const { return t.front().second; }
};

struct Engine {
    const GBContext& ctx;

    explicit Engine(const GBContext& c) : ctx(c) {
        if (!ctx.base.is_field())
            fail(ErrCode::BadInput, "groebner: coefficients must lie in Q or F_p");
    }

    GBPoly from_mv(const MvPoly& f) const {
        GBPoly g;
        g.t.assign(f.terms.begin(), f.terms.end());
        std::sort(g.t.begin(), g.t.end(), [&](const Term& x, const Term& y) {
            return monomial_cmp(x.first, y.first, ctx.order) > 0;
        });
        return g;
    }

    MvPoly to_mv(const GBPoly& g) const {
        MvPoly f(ctx.base, ctx.vars);
        for (auto& [e, c] : g.t) f.terms[e] = c;
        return f;
    }

    GBPoly monic(GBPoly g) const {
        if (g.zero()) return g;
        BaseElem inv = ctx.base.inv(g.lc());
        for (auto& [e, c] : g.t) c = ctx.base.mul(c, inv);
        return g;
    }

    // h -= c * t^shift * g, merging sorted term lists
    GBPoly axpy(const GBPoly& h, const BaseElem& c, const ExpVec& shift, const GBPoly& g) const {
        std::vector<Term> out;
        out.reserve(h.t.size() + g.t.size());
        size_t i = 0, j = 0;
        while (i < h.t.size() || j < g.t.size()) {
            if (j == g.t.size()) {
                out.push_back(h.t[i++]);
                continue;
            }
            ExpVec ge(shift.size());
            for (size_t k = 0; k < ge.size(); ++k) ge[k] = g.t[j].first[k] + shift[k];
            BaseElem gc = ctx.base.neg(ctx.base.mul(c, g.t[j].second));
            if (i == h.t.size()) {
                if (gc != 0) out.emplace_back(std::move(ge), gc);
                ++j;
                continue;
            }
            int cmp = monomial_cmp(h.t[i].first, ge, ctx.order);
            if (cmp > 0) {
                out.push_back(h.t[i++]);
            } else if (cmp < 0) {
                if (gc != 0) out.emplace_back(std::move(ge), gc);
                ++j;
            } else {
                BaseElem s = ctx.base.add(h.t[i].second, gc);
                if (s != 0) out.emplace_back(h.t[i].first, s);
                ++i;
                ++j;
            }
        }
        GBPoly r;
        r.t = std::move(out);
        return r;
    }

    static bool divides(const ExpVec& a, const ExpVec& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    }

    // full normal form; optionally records quotients (parallel to gens)
    GBPoly reduce(GBPoly h, const std::vector<GBPoly>& gens,
                  std::vector<GBPoly>* quot = nullptr) const {
        GBPoly rem;
        while (!h.zero()) {
            bool reduced = false;
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                if (gens[gi].zero() || !divides(gens[gi].lm(), h.lm())) continue;
                ExpVec shift(h.lm().size());
                for (size_t k = 0; k < shift.size(); ++k)
                    shift[k] = h.lm()[k] - gens[gi].lm()[k];
                BaseElem c = ctx.base.div(h.lc(), gens[gi].lc());
                if (quot) {
                    ExpVec e = shift;
                    GBPoly q;
                    q.t.emplace_back(std::move(e), c);
                    (*quot)[gi] = axpy((*quot)[gi], ctx.base.neg(BaseElem(1)), ExpVec(shift.size(), 0), q);
                }
                h = axpy(h, c, shift, gens[gi]);
                reduced = true;
                break;
            }
            if (!reduced) {
                rem.t.push_back(h.t.front());
                h.t.erase(h.t.begin());
            }
        }
        return rem;
    }
};

struct PairKey {
    int lcm_deg;
    ExpVec lcm;
    size_t i, j;
    bool operator<(const PairKey& o) const {
        if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
        if (lcm != o.lcm) return lcm < o.lcm;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

static ExpVec lcm_vec(const ExpVec& a, const ExpVec& b) {
    ExpVec r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
    return r;
}

} // namespace

GroebnerBasis buchberger(const std::vector<MvPoly>& gens, const GBContext& ctx,
                         size_t pair_budget) {
    Engine eng(ctx);
    std::vector<GBPoly> G;
    for (auto& g : gens) {
        MvPoly gg = mv_extend(g, ctx.vars);
        if (!gg.is_zero()) G.push_back(eng.monic(eng.from_mv(gg)));
    }

    std::set<PairKey> pending;
    std::set<std::pair<size_t, size_t>> pending_idx;
    auto push_pair = [&](size_t i, size_t j) {
        if (i > j) std::swap(i, j);
        ExpVec l = lcm_vec(G[i].lm(), G[j].lm());
        pending.insert({vec_deg(l), l, i, j});
        pending_idx.insert({i, j});
    };
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) push_pair(i, j);

    size_t processed = 0;
    while (!pending.empty()) {
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        pending_idx.erase({pk.i, pk.j});
        const ExpVec &li = G[pk.i].lm(), &lj = G[pk.j].lm();

        // coprime leading monomials: S-polynomial reduces to zero
        bool coprime = true;
        for (size_t k = 0; k < li.size(); ++k)
            if (li[k] > 0 && lj[k] > 0) {
                coprime = false;
                break;
            }
        if (coprime) continue;

        // chain criterion: some k with lm_k | lcm and both companion pairs
        // already handled
        bool chained = false;
        for (size_t k = 0; k < G.size() && !chained; ++k) {
            if (k == pk.i || k == pk.j || G[k].zero()) continue;
            if (!Engine::divides(G[k].lm(), pk.lcm)) continue;
            auto key = [&](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (!pending_idx.count(key(pk.i, k)) && !pending_idx.count(key(pk.j, k)))
                chained = true;
        }
        if (chained) continue;

        if (++processed > pair_budget)
            fail(ErrCode::OracleTimeout, "buchberger: pair budget exhausted");

        // S-polynomial (generators are monic)
        ExpVec si(li.size()), sj(lj.size());
        for (size_t k = 0; k < li.size(); ++k) {
            si[k] = pk.lcm[k] - li[k];
            sj[k] = pk.lcm[k] - lj[k];
        }
        GBPoly zero;
        GBPoly s = eng.axpy(zero, ctx.base.neg(BaseElem(1)), si, G[pk.i]); // lcm/lt_i * g_i
        s = eng.axpy(s, BaseElem(1), sj, G[pk.j]);                         // minus lcm/lt_j * g_j
        GBPoly r = eng.reduce(s, G);
        if (!r.zero()) {
            G.push_back(eng.monic(r));
            for (size_t i = 0; i + 1 < G.size(); ++i)
                if (!G[i].zero()) push_pair(i, G.size() - 1);
        }
    }

    // minimize: drop generators whose lead is divisible by another live lead
    std::vector<bool> live(G.size(), true);
    for (size_t i = 0; i < G.size(); ++i) {
        if (G[i].zero()) {
            live[i] = false;
            continue;
        }
        for (size_t j = 0; j < G.size() && live[i]; ++j) {
            if (i == j || !live[j] || G[j].zero()) continue;
            if (Engine::divides(G[j].lm(), G[i].lm()) &&
                (G[j].lm() != G[i].lm() || j < i))
                live[i] = false;
        }
    }
    // tail-reduce each survivor against the others; leads are untouched by
    // minimality, so this lands on the reduced basis
    std::vector<GBPoly> final_;
    for (size_t i = 0; i < G.size(); ++i) {
        if (!live[i]) continue;
        std::vector<GBPoly> others;
        for (size_t j = 0; j < G.size(); ++j)
            if (j != i && live[j]) others.push_back(G[j]);
        GBPoly r = eng.reduce(G[i], others);
        if (!r.zero()) final_.push_back(eng.monic(r));
    }
    std::sort(final_.begin(), final_.end(), [&](const GBPoly& a, const GBPoly& b) {
        return monomial_cmp(a.lm(), b.lm(), ctx.order) < 0;
    });

    GroebnerBasis gb{ctx, {}, processed};
    for (auto& g : final_) gb.gens.push_back(eng.to_mv(g));
    return gb;
}

MvPoly normal_form(const MvPoly& f, const GroebnerBasis& gb) {
    Engine eng(gb.ctx);
    std::vector<GBPoly> G;
    for (auto& g : gb.gens) G.push_back(eng.from_mv(g));
    return eng.to_mv(eng.reduce(eng.from_mv(mv_extend(f, gb.ctx.vars)), G));
}

DivResult divide_full(const MvPoly& f, const std::vector<MvPoly>& gens, const GBContext& ctx) {
    Engine eng(ctx);
    std::vector<GBPoly> G;
    for (auto& g : gens) G.push_back(eng.from_mv(mv_extend(g, ctx.vars)));
    std::vector<GBPoly> quot(G.size());
    GBPoly r = eng.reduce(eng.from_mv(mv_extend(f, ctx.vars)), G, &quot);
    DivResult res;
    res.remainder = eng.to_mv(r);
    for (auto& q : quot) res.quotients.push_back(eng.to_mv(q));
    return res;
}

static void enum_monomials(int nvars, int deg, int pos, ExpVec& cur,
                           const std::vector<ExpVec>& leads, long long& count) {
    if (pos == nvars - 1) {
        cur[pos] = deg;
        for (auto& l : leads) {
            bool div = true;
            for (int i = 0; i < nvars; ++i)
                if (l[i] > cur[i]) {
                    div = false;
                    break;
                }
            if (div) {
                cur[pos] = 0;
                return;
            }
        }
        ++count;
        cur[pos] = 0;
        return;
    }
    for (int e = 0; e <= deg; ++e) {
        cur[pos] = e;
        enum_monomials(nvars, deg - e, pos + 1, cur, leads, count);
    }
    cur[pos] = 0;
}

std::vector<long long> hilbert_function(const GroebnerBasis& gb, int D) {
    int n = (int)gb.ctx.vars.size();
    std::vector<ExpVec> leads;
    for (auto& g : gb.gens)
        if (!g.is_zero()) {
            // leading monomial under the basis order
            const ExpVec* lm = nullptr;
            for (auto& [e, c] : g.terms)
                if (!lm || monomial_cmp(e, *lm, gb.ctx.order) > 0) lm = &e;
            leads.push_back(*lm);
        }
    std::vector<long long> out;
    for (int d = 0; d <= D; ++d) {
        long long cnt = 0;
        ExpVec cur(n, 0);
        if (n == 0)
            cnt = (d == 0) ? 1 : 0;
        else
            enum_monomials(n, d, 0, cur, leads, cnt);
        out.push_back(cnt);
    }
    return out;
}

std::vector<MvPoly> ideal_quotient(const std::vector<MvPoly>& J, const MvPoly& p,
                                   const GBContext& ctx, size_t pair_budget) {
    if (p.is_zero()) fail(ErrCode::BadInput, "ideal_quotient: p = 0");
    std::string w = "w_tag";
    while (std::find(ctx.vars.begin(), ctx.vars.end(), w) != ctx.vars.end()) w += "_";
    GBContext ec{ctx.base, {}, {MonomialOrder::ElimFirst}};
    ec.vars.push_back(w);
    for (auto& v : ctx.vars) ec.vars.push_back(v);

    MvPoly wpoly = mv_var(ctx.base, ec.vars, w);
    MvPoly one = mv_const(ctx.base, ec.vars, 1);
    std::vector<MvPoly> gens;
    for (auto& g : J) gens.push_back(wpoly * mv_extend(g, ec.vars));
    gens.push_back((one - wpoly) * mv_extend(p, ec.vars));

    GroebnerBasis gb = buchberger(gens, ec, pair_budget);

    std::vector<MvPoly> out;
    for (auto& g : gb.gens) {
        bool has_w = false;
        for (auto& [e, c] : g.terms)
            if (e[0] != 0) {
                has_w = true;
                break;
            }
        if (has_w) continue;
        // strip the tag coordinate, then divide by p exactly
        MvPoly h(ctx.base, ctx.vars);
        for (auto& [e, c] : g.terms) h.terms[ExpVec(e.begin() + 1, e.end())] = c;
        DivResult d = divide_full(h, {p}, ctx);
        if (!d.remainder.is_zero())
            fail(ErrCode::BadInput, "ideal_quotient: intersection element not divisible by p");
        out.push_back(d.quotients[0]);
    }
    return out;
}

} // namespace umlab
