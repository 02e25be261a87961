#pragma once
#include <vector>
#include "umlab/mvpoly.hpp"

namespace umlab {

// Monomial orders on a fixed variable list. ElimFirst is the block order
// that makes the first variable largest (exponent of var 0 decides, ties by
// degrevlex on the rest); it is what the tag-variable eliminations use.
struct MonomialOrder {
    enum Kind { DegRevLex, Lex, ElimFirst };
    Kind kind = DegRevLex;
};

// sign of cmp(a, b): positive when a is the larger monomial
int monomial_cmp(const ExpVec& a, const ExpVec& b, const MonomialOrder& ord);

struct GBContext {
    LocalBase base; // field: Q or F_p
    std::vector<std::string> vars;
    MonomialOrder order;
};

constexpr size_t kDefaultPairBudget = 200000;

// Reduced Groebner basis: monic generators, sorted by leading monomial,
// no generator reducible by the others. Deterministic for a given input.
struct GroebnerBasis {
    GBContext ctx;
    std::vector<MvPoly> gens;
    size_t pairs_processed = 0;
};

// Buchberger with normal pair selection and the coprimality and chain
// criteria. Throws OracleTimeout once more than pair_budget S-pairs have
// been reduced.
GroebnerBasis buchberger(const std::vector<MvPoly>& gens, const GBContext& ctx,
                         size_t pair_budget = kDefaultPairBudget);

MvPoly normal_form(const MvPoly& f, const GroebnerBasis& gb);

// Division with quotient tracking: f == sum quotients[i]*gens[i] + remainder.
struct DivResult {
    std::vector<MvPoly> quotients;
    MvPoly remainder;
};
DivResult divide_full(const MvPoly& f, const std::vector<MvPoly>& gens, const GBContext& ctx);

// Values of the Hilbert function of ctx.vars modulo the leading-term ideal
// in degrees 0..D (counts of standard monomials per degree).
std::vector<long long> hilbert_function(const GroebnerBasis& gb, int D);

// (J : p) via the tag-variable trick: generators of (w*J + (1-w)*p)
// intersected with the w-free subring, each divided exactly by p.
std::vector<MvPoly> ideal_quotient(const std::vector<MvPoly>& J, const MvPoly& p,
                                   const GBContext& ctx, size_t pair_budget = kDefaultPairBudget);

} // namespace umlab
